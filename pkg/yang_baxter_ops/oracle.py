# This file is part of yang-baxter-ops.
#
# Copyright (C) 2026 yang-baxter-ops contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import copy
import itertools
import logging
import time
from typing import Callable, Dict, List, Tuple

import numpy as np

from yang_baxter_ops.errors import RecipeError, YangBaxterError
from yang_baxter_ops.model import LieSuperalgebra, Structure
from yang_baxter_ops.numeric import ScalarField
from yang_baxter_ops.recipes import OperatorRecipe
from yang_baxter_ops.structures import even_part
from yang_baxter_ops.tensor import LinearOperator, identity
from yang_baxter_ops.verify import VerificationReport, Outcome, braid_sides, yb_sides, classical_sides, WXZ_CONDITIONS

ORACLE_CHECKS = ('braid', 'qybe', 'yb-commutator', 'classical', 'inverse', 'wxz', 'colored-qybe', 'one-param')


class DirectOperator:
    """Images of the basis vectors of V (x) V as sparse coordinate maps, computed pointwise."""

    def __init__(self, field: ScalarField, n: int, image: Callable):
        assert(isinstance(field, ScalarField))
        self.field = field
        self.n = n
        self.images = {}
        for i, j in itertools.product(range(n), repeat=2):
            self.images[(i, j)] = {key: value for key, value in image(i, j).items() if value}

    @staticmethod
    def from_matrix(operator: LinearOperator) -> 'DirectOperator':
        n = operator.base_dim

        def image(i, j):
            return {(row // n, row % n): value for row, value in operator.column(i * n + j).items()}

        return DirectOperator(operator.field, n, image)

    def apply(self, vector: dict, position: str) -> dict:
        """Applies the operator to the given pair of tensor factors of a sparse vector."""
        result = {}
        for key, x in vector.items():
            if position == '12':
                source, place = (key[0], key[1]), lambda k, l: (k, l, key[2])
            elif position == '23':
                source, place = (key[1], key[2]), lambda k, l: (key[0], k, l)
            elif position == '13':
                source, place = (key[0], key[2]), lambda k, l: (k, key[1], l)
            else:
                source, place = key, lambda k, l: (k, l)

            for (k, l), y in self.images[source].items():
                target = place(k, l)
                result[target] = result[target] + x * y if target in result else x * y

        return {key: value for key, value in result.items() if value}


class _Images:
    def __init__(self, field: ScalarField):
        self.field = field
        self.values = {}

    def add(self, key: tuple, value):
        if value:
            self.values[key] = self.values[key] + value if key in self.values else value


def _products(structure: Structure, i: int, j: int) -> List[Tuple[int, object]]:
    return [(k, value) for k, value in enumerate(structure.constants[i, j]) if value]


def _nonzero(vector) -> List[Tuple[int, object]]:
    return [(k, value) for k, value in enumerate(vector) if value]


def dn_map(structure, alpha, beta, gamma):
    def image(i, j):
        images = _Images(structure.field)
        for k, c in _products(structure, i, j):
            for l, one in _nonzero(structure.unit):
                images.add((k, l), alpha * c * one)
                images.add((l, k), beta * one * c)
        images.add((i, j), -gamma)
        return images.values

    return image


def colored_map(structure, p, q, u, v):
    def image(i, j):
        images = _Images(structure.field)
        for k, c in _products(structure, i, j):
            for l, one in _nonzero(structure.unit):
                images.add((l, k), p * (u - v) * one * c)
                images.add((k, l), q * (u - v) * c * one)
        images.add((j, i), -(p * u - q * v))
        return images.values

    return image


def colored_inverse_map(structure, p, q, u, v):
    denominator = (q * u - p * v) * (p * u - q * v)

    def image(i, j):
        images = _Images(structure.field)
        for k, c in _products(structure, j, i):
            for l, one in _nonzero(structure.unit):
                images.add((k, l), p * (u - v) / denominator * c * one)
                images.add((l, k), q * (u - v) / denominator * one * c)
        images.add((j, i), -1 / (p * u - q * v))
        return images.values

    return image


def wxz_maps(structure, lam, mu):
    def make(left, right):
        def image(i, j):
            images = _Images(structure.field)
            for k, c in _products(structure, i, j):
                for l, one in _nonzero(structure.unit):
                    images.add((k, l), left * c * one)
                    images.add((l, k), right * one * c)
            images.add((j, i), -structure.field.one())
            return images.values
        return image

    one = structure.field.one()
    return make(one, lam), make(one, one), make(mu, one)


def dim2_canonical_map(field, q, eta):
    images = {(0, 0): {(0, 0): field.one(), (1, 1): eta},
              (0, 1): {(0, 1): field.one(), (1, 0): field.one() - q},
              (1, 0): {(1, 0): q},
              (1, 1): {(1, 1): -q}}

    return lambda i, j: images[(i, j)]


def split_map(field, c_index, f, g):
    def image(i, j):
        images = _Images(field)
        for k, value in enumerate(f[i][j]):
            images.add((k, c_index), field.coerce(value))
        for k, value in enumerate(g[i][j]):
            images.add((c_index, k), field.coerce(value))
        return images.values

    return image


def bracket_twist_map(structure, z, alpha, beta, z_first: bool = False):
    """alpha [x, y] (x) z (or z (x) [x, y]) + beta (-1)^(|x||y|) y (x) x on a superalgebra."""
    def image(i, j):
        images = _Images(structure.field)
        for k, b in _products(structure, i, j):
            for m, zm in _nonzero(z):
                images.add((m, k) if z_first else (k, m), alpha * b * zm)
        images.add((j, i), beta * structure.sign(i, j))
        return images.values

    return image


def super_colored_map(structure, z, alpha, beta):
    def image(i, j):
        images = _Images(structure.field)
        for k, b in _products(structure, i, j):
            for m, zm in _nonzero(z):
                images.add((k, m), alpha * b * zm)
        images.add((i, j), beta * structure.sign(i, j))
        return images.values

    return image


def gtheta_map(structure, z, alpha, inverse: bool = False):
    def image(i, j):
        images = _Images(structure.field)
        for k, b in _products(structure, j, i) if inverse else _products(structure, i, j):
            for m, zm in _nonzero(z):
                images.add((k, m), alpha * b * zm)
        images.add((i, j), structure.theta_of_basis(j, i) if inverse else structure.theta_of_basis(i, j))
        return images.values

    return image


def classical_map(structure, z):
    def image(i, j):
        images = _Images(structure.field)
        for k, b in _products(structure, i, j):
            for m, zm in _nonzero(z):
                images.add((k, m), b * zm)
        return images.values

    return image


def _classical_structure(recipe: OperatorRecipe):
    structure = recipe.structure
    z = recipe.z()
    if isinstance(structure, LieSuperalgebra) and not structure.is_purely_even():
        z = [value for value, grade in zip(z, structure.grades) if grade == 0]
        structure = even_part(structure)

    return structure, z


def colored_direct(recipe: OperatorRecipe) -> Callable:
    """(u, v) -> DirectOperator for the colored families of a recipe."""
    structure = recipe.structure
    field = recipe.field
    family = recipe.family if recipe.family != 'wxz-colored' else recipe.params.get('source', 'colored')

    if family == 'colored':
        p, q = recipe.scalar('p'), recipe.scalar('q')
        return lambda u, v: DirectOperator(field, structure.dim, colored_map(structure, p, q, u, v))
    if family == 'one-param':
        q = recipe.scalar('q')
        return lambda u, v: DirectOperator(field, structure.dim, colored_map(structure, field.one(), q, u / v, field.one()))
    if family == 'super-colored':
        z, table = recipe.z(), recipe.table()
        return lambda u, v: DirectOperator(field, structure.dim,
                                           super_colored_map(structure, z, table.alpha(u, v), table.beta(u, v)))

    raise RecipeError(f"Family '{family}' is not a colored family")


def direct_operators(recipe: OperatorRecipe) -> Dict[str, DirectOperator]:
    """The recipe's operators evaluated pointwise from structure constants, never through matrices."""
    family = recipe.family
    structure = recipe.structure
    field = recipe.field

    def direct(image, n=None):
        return DirectOperator(field, n if n is not None else structure.dim, image)

    if family == 'dn':
        alpha, beta, gamma = recipe.scalar('alpha'), recipe.scalar('beta'), recipe.scalar('gamma')
        result = {'R': direct(dn_map(structure, alpha, beta, gamma))}
        if gamma and ((alpha == gamma and beta) or (beta == gamma and alpha)):
            result['R_inverse'] = direct(dn_map(structure, 1 / beta, 1 / alpha, 1 / gamma))
        elif gamma and not alpha and not beta:
            result['R_inverse'] = direct(dn_map(structure, alpha, beta, 1 / gamma))
        return result
    if family == 'dim2-canonical':
        return {'R': direct(dim2_canonical_map(field, recipe.scalar('q'), recipe.scalar('eta')), 2)}
    if family in ('colored', 'one-param'):
        if family == 'colored':
            p, q, u, v = (recipe.scalar(name) for name in ('p', 'q', 'u', 'v'))
        else:
            p, q, u, v = field.one(), recipe.scalar('q'), recipe.scalar('s'), field.one()
        result = {'R': direct(colored_map(structure, p, q, u, v))}
        if p * u != q * v and q * u != p * v:
            result['R_inverse'] = direct(colored_inverse_map(structure, p, q, u, v))
        return result
    if family == 'wxz-algebra':
        w, x, z = wxz_maps(structure, recipe.scalar('lambda'), recipe.scalar('mu'))
        return {'W': direct(w), 'X': direct(x), 'Z': direct(z)}
    if family == 'wxz-colored':
        colored = colored_direct(recipe)
        s, t = recipe.scalar('s'), recipe.scalar('t')
        return {'W': colored(s, s), 'X': colored(s, t), 'Z': colored(t, t)}
    if family == 'split':
        n = recipe.base_dim
        return {'R': direct(split_map(field, int(recipe.require('c')), recipe._tensor('f', n), recipe._tensor('g', n)), n)}
    if family in ('super-phi', 'super-phi-ab'):
        z, alpha = recipe.z(), recipe.scalar('alpha')
        beta = recipe.scalar('beta') if family == 'super-phi-ab' else field.one()
        return {'R': direct(bracket_twist_map(structure, z, alpha, beta)),
                'R_inverse': direct(bracket_twist_map(structure, z, alpha / (beta * beta), 1 / beta, z_first=True))}
    if family == 'super-colored':
        table = recipe.table()
        u, v = recipe.scalar('u'), recipe.scalar('v')
        return {'R': direct(super_colored_map(structure, recipe.z(), table.alpha(u, v), table.beta(u, v)))}
    if family == 'gtheta':
        z, alpha = recipe.z(), recipe.scalar('alpha')
        return {'R': direct(gtheta_map(structure, z, alpha)),
                'R_inverse': direct(gtheta_map(structure, z, alpha, inverse=True))}
    if family == 'classical-r':
        even, z = _classical_structure(recipe)
        return {'R': DirectOperator(field, even.dim, classical_map(even, z))}

    raise RecipeError(f"Unknown family '{family}'")


def apply_chains(chains: List[list], vector: dict) -> dict:
    """Sum over chains of the composition, rightmost operator applied first; an empty chain is the identity."""
    total = {}
    for chain in chains:
        image = dict(vector)
        for position, operator in reversed(chain):
            image = operator.apply(image, position)
        for key, value in image.items():
            total[key] = total[key] + value if key in total else value

    return {key: value for key, value in total.items() if value}


def _flatten(vector: dict, n: int) -> dict:
    result = {}
    for key, value in vector.items():
        index = 0
        for label in key:
            index = index * n + label
        result[index] = value

    return result


class Comparison:
    """One identity evaluated by both paths: chains of direct operators and the lifted matrices."""

    def __init__(self, label: dict, lhs_chains: list, rhs_chains: list, lhs: LinearOperator, rhs: LinearOperator):
        self.label = label
        self.lhs_chains = lhs_chains
        self.rhs_chains = rhs_chains
        self.lhs = lhs
        self.rhs = rhs


def _yb_comparison(label, r, s, t, direct_r, direct_s, direct_t) -> Comparison:
    lhs, rhs = yb_sides(r, s, t)
    return Comparison(label,
                      [[('12', direct_r), ('13', direct_s), ('23', direct_t)]],
                      [[('23', direct_t), ('13', direct_s), ('12', direct_r)]], lhs, rhs)


def comparisons(recipe: OperatorRecipe, check: str, matrix_recipe: OperatorRecipe = None) -> List[Comparison]:
    """Pairs the oracle's chains for `recipe` with the matrix path built from `matrix_recipe` (default: the same)."""
    if check not in ORACLE_CHECKS:
        raise RecipeError(f"The oracle does not support the check '{check}'")

    matrix_recipe = matrix_recipe if matrix_recipe is not None else recipe

    if check in ('colored-qybe', 'one-param'):
        family = matrix_recipe.colored_family()
        direct = colored_direct(recipe)
        cache = {}

        def direct_at(u, v):
            if (u, v) not in cache:
                cache[(u, v)] = direct(u, v)
            return cache[(u, v)]

        triples = [recipe.spectral()] if check == 'one-param' else itertools.product(family.colors, repeat=3)
        return [_yb_comparison({'u': recipe.field.format(u), 'v': recipe.field.format(v), 'w': recipe.field.format(w)},
                               family(u, v), family(u, w), family(v, w),
                               direct_at(u, v), direct_at(u, w), direct_at(v, w))
                for u, v, w in triples]

    direct = direct_operators(recipe)
    matrices = matrix_recipe.build()

    if check == 'wxz':
        result = []
        for condition in WXZ_CONDITIONS:
            r, s, t = (matrices[name] for name in condition)
            dr, ds, dt = (direct[name] for name in condition)
            result.append(_yb_comparison({'condition': condition}, r, s, t, dr, ds, dt))
        return result

    r, d = matrices['R'], direct['R']
    if check == 'braid':
        lhs, rhs = braid_sides(r)
        return [Comparison({}, [[('12', d), ('23', d), ('12', d)]], [[('23', d), ('12', d), ('23', d)]], lhs, rhs)]
    if check in ('qybe', 'yb-commutator'):
        return [_yb_comparison({}, r, r, r, d, d, d)]
    if check == 'classical':
        lhs, rhs = classical_sides(r)
        return [Comparison({},
                           [[('12', d), ('13', d)], [('12', d), ('23', d)], [('13', d), ('23', d)]],
                           [[('13', d), ('12', d)], [('23', d), ('12', d)], [('23', d), ('13', d)]], lhs, rhs)]
    if check == 'inverse':
        if 'R_inverse' not in direct or 'R_inverse' not in matrices:
            raise RecipeError(f"Family '{recipe.family}' has no closed-form inverse at these parameters")
        r_inverse, d_inverse = matrices['R_inverse'](), direct['R_inverse']
        unit = identity(r.field, r.dim, r.base_dim)
        return [Comparison({'order': 'R R^-1'}, [[('', d), ('', d_inverse)]], [[]], r @ r_inverse, unit),
                Comparison({'order': 'R^-1 R'}, [[('', d_inverse), ('', d)]], [[]], r_inverse @ r, unit)]

    raise RecipeError(f"The oracle does not support the check '{check}'")


def run_comparisons(check: str, items: List[Comparison], params: dict) -> VerificationReport:
    """Compares every basis image of both sides; agreement of the two paths is what holds."""
    started = time.time()
    oracle_holds = True
    matrix_holds = True

    for item in items:
        n = item.lhs.base_dim
        factors = item.lhs.factors
        for index, basis in enumerate(itertools.product(range(n), repeat=factors)):
            start = {basis: item.lhs.field.one()}
            for side, chains, matrix in (('lhs', item.lhs_chains, item.lhs), ('rhs', item.rhs_chains, item.rhs)):
                image = _flatten(apply_chains(chains, start), n)
                expected = matrix.column(index)
                if image != expected:
                    witness = {**item.label, 'side': side, 'input': list(basis),
                               'oracle': {str(k): matrix.field.format(v) for k, v in sorted(image.items())},
                               'matrix': {str(k): matrix.field.format(v) for k, v in sorted(expected.items())}}
                    return VerificationReport(f"oracle-{check}", params, Outcome.FAILS, witness,
                                              elapsed=time.time() - started)

            if apply_chains(item.lhs_chains, start) != apply_chains(item.rhs_chains, start):
                oracle_holds = False
        if item.lhs != item.rhs:
            matrix_holds = False

    outcomes = {'oracle_outcome': 'holds' if oracle_holds else 'fails',
                'matrix_outcome': 'holds' if matrix_holds else 'fails'}
    return VerificationReport(f"oracle-{check}", {**params, **outcomes}, Outcome.HOLDS, elapsed=time.time() - started)


def oracle_equivalence(recipe: OperatorRecipe, check: str, params: dict = None) -> VerificationReport:
    assert(isinstance(recipe, OperatorRecipe))
    return run_comparisons(check, comparisons(recipe, check), params or {})


def mutated(recipe: OperatorRecipe, seed: int = 0) -> Tuple[OperatorRecipe, tuple]:
    """A copy of the recipe whose structure has one seeded nonzero constant increased by one."""
    structure = recipe.structure
    if structure is None:
        raise RecipeError(f"Family '{recipe.family}' has no structure constants to mutate")

    nonzero = [index for index in itertools.product(range(structure.dim), repeat=3) if structure.constants[index]]
    if not nonzero:
        raise RecipeError(f"{structure.name} has no nonzero structure constant")

    index = nonzero[int(np.random.default_rng(seed).integers(len(nonzero)))]
    mutant = copy.deepcopy(structure)
    mutant.constants[index] = mutant.constants[index] + 1

    return recipe.with_structure(mutant), index


def mutation_test(recipe: OperatorRecipe, check: str, seed: int = 0) -> VerificationReport:
    """Feeds the matrix path a mutated structure; the oracle must report the disagreement."""
    mutant, index = mutated(recipe, seed)
    names = recipe.structure.basis_names
    params = {'mutated': f"{names[index[0]]},{names[index[1]]}->{names[index[2]]}"}
    logging.info(f"Mutation test on {recipe.family}: perturbed constant {params['mutated']}")

    try:
        report = run_comparisons(check, comparisons(recipe, check, mutant), params)
    except YangBaxterError as error:
        return VerificationReport(f"mutation-{check}", params, Outcome.HOLDS, reason=f"mutant rejected: {error}")

    if report.fails:
        return VerificationReport(f"mutation-{check}", params, Outcome.HOLDS, reason="disagreement detected")

    return VerificationReport(f"mutation-{check}", params, Outcome.FAILS,
                              {'mutated': params['mutated']}, reason="mutation went unnoticed")


def reverify_matrix(operator: LinearOperator) -> bool:
    """Constant QYBE through pointwise application, compared with the lifted-matrix path.

    The pointwise operator is read off the same matrix, so unlike `oracle_equivalence` this catches
    lift and composition errors but not a wrong matrix.
    """
    direct = DirectOperator.from_matrix(operator)
    item = _yb_comparison({}, operator, operator, operator, direct, direct, direct)
    report = run_comparisons('qybe', [item], {})

    return report.holds and report.params['oracle_outcome'] == 'holds'
