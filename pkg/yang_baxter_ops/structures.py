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

import itertools
import json
from typing import List, Union

import numpy as np

from yang_baxter_ops.errors import RecipeError, WrongFieldKind, BadDimension
from yang_baxter_ops.model import AssociativeAlgebra, LieSuperalgebra, GThetaLieAlgebra, ColorFunction, \
    FiniteAbelianGroup, ValidationReport, Structure, structure_tensor
from yang_baxter_ops.numeric import field_from_json, RATIONALS
from yang_baxter_ops.tensor import nullspace

COLOR_SAMPLES = 200

LieLike = Union[LieSuperalgebra, GThetaLieAlgebra]


def _names(structure: Structure, *indices) -> tuple:
    return tuple(structure.basis_names[i] for i in indices)


def left_multiply(structure: Structure, i: int, vector: np.ndarray) -> np.ndarray:
    """e_i * v for a coordinate vector v."""
    return vector @ structure.constants[i]


def right_multiply(structure: Structure, vector: np.ndarray, j: int) -> np.ndarray:
    """v * e_j for a coordinate vector v."""
    return vector @ structure.constants[:, j, :]


def _is_zero(vector) -> bool:
    return not any(value for value in vector)


def _equal(a, b) -> bool:
    return all(x == y for x, y in zip(a, b))


def validate_associative(algebra: AssociativeAlgebra) -> ValidationReport:
    """Associativity on every basis triple (lexicographic), then both unit laws."""
    assert(isinstance(algebra, AssociativeAlgebra))
    n = algebra.dim

    for i, j, k in itertools.product(range(n), repeat=3):
        left = right_multiply(algebra, algebra.mult[i, j], k)
        right = left_multiply(algebra, i, algebra.mult[j, k])
        if not _equal(left, right):
            return ValidationReport(algebra.name, 'associativity', False, _names(algebra, i, j, k),
                                    f"(e_{i} e_{j}) e_{k} != e_{i} (e_{j} e_{k})")

    unit = np.array(algebra.unit, dtype=object)
    for i in range(n):
        basis = np.array(algebra.basis_vector(algebra.basis_names[i]), dtype=object)
        if not _equal(unit @ algebra.mult[:, i, :], basis):
            return ValidationReport(algebra.name, 'left-unit', False, _names(algebra, i), f"1 e_{i} != e_{i}")
        if not _equal(algebra.mult[i].T @ unit, basis):
            return ValidationReport(algebra.name, 'right-unit', False, _names(algebra, i), f"e_{i} 1 != e_{i}")

    return ValidationReport(algebra.name, 'associative', True)


def validate_superalgebra(algebra: LieSuperalgebra) -> ValidationReport:
    assert(isinstance(algebra, LieSuperalgebra))
    n = algebra.dim
    grades = algebra.grades
    bracket = algebra.bracket

    for i, j, k in itertools.product(range(n), repeat=3):
        if bracket[i, j, k] and grades[k] != (grades[i] + grades[j]) % 2:
            return ValidationReport(algebra.name, 'grading', False, _names(algebra, i, j, k),
                                    f"[e_{i}, e_{j}] has a component along e_{k} of the wrong parity")

    for i, j in itertools.product(range(n), repeat=2):
        if not _equal(bracket[i, j], bracket[j, i] * -algebra.sign(i, j)):
            return ValidationReport(algebra.name, 'super-antisymmetry', False, _names(algebra, i, j),
                                    f"[e_{i}, e_{j}] != -(-1)^(|e_{i}||e_{j}|) [e_{j}, e_{i}]")

    for i, j, k in itertools.product(range(n), repeat=3):
        total = left_multiply(algebra, i, bracket[j, k]) * algebra.sign(k, i) + \
                left_multiply(algebra, j, bracket[k, i]) * algebra.sign(i, j) + \
                left_multiply(algebra, k, bracket[i, j]) * algebra.sign(j, k)
        if not _is_zero(total):
            return ValidationReport(algebra.name, 'super-jacobi', False, _names(algebra, i, j, k),
                                    "super Jacobi identity does not vanish")

    return ValidationReport(algebra.name, 'superalgebra', True)


def validate_color_function(theta: ColorFunction, name: str = 'theta', seed: int = 0) -> ValidationReport:
    """Well-definedness and skewness on generator pairs, biadditivity on generators and seeded random triples."""
    assert(isinstance(theta, ColorFunction))
    group = theta.group
    e = group.exponent

    try:
        for a, b in itertools.product(group.generators(), repeat=2):
            theta(a, b)
    except WrongFieldKind as error:
        return ValidationReport(name, 'theta-field', False, None, str(error))

    for r, c in itertools.product(range(group.rank), repeat=2):
        t = int(theta.exponents[r, c])
        if (group.orders[r] * t) % e or (t * group.orders[c]) % e:
            return ValidationReport(name, 'theta-well-defined', False, (r, c),
                                    f"exponent t[{r}][{c}] = {t} is not compatible with the cyclic orders")

    for a, b in itertools.product(group.generators(), repeat=2):
        if theta(a, b) * theta(b, a) != 1:
            return ValidationReport(name, 'theta-skew', False, (a, b), f"theta{a} theta{b} != 1")

    rng = np.random.default_rng(seed)
    triples = [tuple(tuple(int(x) for x in rng.integers(0, group.orders)) for _ in range(3)) for _ in range(COLOR_SAMPLES)]
    generators = group.generators()
    triples += [(a, b, c) for a, b, c in itertools.product(generators, repeat=3)]
    for a, b, c in triples:
        if theta(group.add(a, b), c) != theta(a, c) * theta(b, c) or \
                theta(a, group.add(b, c)) != theta(a, b) * theta(a, c):
            return ValidationReport(name, 'theta-biadditive', False, (a, b, c), "theta is not biadditive")

    return ValidationReport(name, 'color-function', True)


def validate_gtheta(algebra: GThetaLieAlgebra, seed: int = 0) -> ValidationReport:
    assert(isinstance(algebra, GThetaLieAlgebra))
    n = algebra.dim
    group = algebra.group
    grades = algebra.grades
    bracket = algebra.bracket

    color_report = validate_color_function(algebra.theta, algebra.name, seed)
    if not color_report:
        return color_report

    for i, j, k in itertools.product(range(n), repeat=3):
        if bracket[i, j, k] and grades[k] != group.add(grades[i], grades[j]):
            return ValidationReport(algebra.name, 'graduation', False, _names(algebra, i, j, k),
                                    f"<e_{i}, e_{j}> has a component along e_{k} outside L_(a+b)")

    for i, j in itertools.product(range(n), repeat=2):
        if not _equal(bracket[i, j], bracket[j, i] * -algebra.theta_of_basis(i, j)):
            return ValidationReport(algebra.name, 'theta-antisymmetry', False, _names(algebra, i, j),
                                    f"<e_{i}, e_{j}> != -theta(a, b) <e_{j}, e_{i}>")

    for i, j, k in itertools.product(range(n), repeat=3):
        total = left_multiply(algebra, i, bracket[j, k]) * algebra.theta_of_basis(k, i) + \
                left_multiply(algebra, k, bracket[i, j]) * algebra.theta_of_basis(j, k) + \
                left_multiply(algebra, j, bracket[k, i]) * algebra.theta_of_basis(i, j)
        if not _is_zero(total):
            return ValidationReport(algebra.name, 'theta-jacobi', False, _names(algebra, i, j, k),
                                    "theta-braided Jacobi identity does not vanish")

    return ValidationReport(algebra.name, 'gtheta', True)


def validate(structure: Structure, seed: int = 0) -> ValidationReport:
    if isinstance(structure, AssociativeAlgebra):
        return validate_associative(structure)
    if isinstance(structure, LieSuperalgebra):
        return validate_superalgebra(structure)
    if isinstance(structure, GThetaLieAlgebra):
        return validate_gtheta(structure, seed)

    raise RecipeError(f"Cannot validate {structure!r}")


def is_identity_grade(algebra: LieLike, index: int) -> bool:
    if isinstance(algebra, LieSuperalgebra):
        return algebra.grades[index] == 0

    return algebra.grades[index] == algebra.group.identity()


def compute_center(algebra: LieLike, even_only: bool = False) -> List[list]:
    """Kernel of z -> ([z, e_i])_i, optionally intersected with the identity-grade subspace."""
    assert(isinstance(algebra, (LieSuperalgebra, GThetaLieAlgebra)))
    field = algebra.field
    n = algebra.dim

    rows = [[algebra.bracket[k, i, l] for k in range(n)] for i in range(n) for l in range(n)]
    if even_only:
        rows += [[field.one() if k == index else field.zero() for k in range(n)]
                 for index in range(n) if not is_identity_grade(algebra, index)]

    rows = [row for row in rows if any(row)]
    return nullspace(field, rows, n)


def is_central(algebra: LieLike, z) -> bool:
    z = np.array([algebra.field.coerce(value) for value in z], dtype=object)
    return all(_is_zero(right_multiply(algebra, z, i)) for i in range(algebra.dim))


def even_part(algebra: LieSuperalgebra) -> LieSuperalgebra:
    """The subalgebra spanned by the even basis vectors."""
    assert(isinstance(algebra, LieSuperalgebra))
    even = [i for i, grade in enumerate(algebra.grades) if grade == 0]
    bracket = algebra.bracket[np.ix_(even, even, even)]

    return LieSuperalgebra(algebra.field, bracket, [0] * len(even),
                           [algebra.basis_names[i] for i in even], f"{algebra.name}-even")


def as_gtheta(algebra: LieSuperalgebra) -> GThetaLieAlgebra:
    """Z_1 with trivial theta for a Lie algebra, Z_2 with the sign bicharacter otherwise."""
    assert(isinstance(algebra, LieSuperalgebra))
    if algebra.is_purely_even():
        theta = ColorFunction(FiniteAbelianGroup([1]), [[0]], algebra.field)
    else:
        theta = ColorFunction(FiniteAbelianGroup([2]), [[1]], algebra.field)

    return GThetaLieAlgebra(algebra.field, algebra.bracket.copy(), [(grade,) for grade in algebra.grades], theta,
                            list(algebra.basis_names), f"{algebra.name}-gtheta")


def _basis_index(names: list, value) -> int:
    if isinstance(value, int):
        if not 0 <= value < len(names):
            raise BadDimension(f"Basis index {value} out of range")
        return value
    if value in names:
        return names.index(value)

    raise RecipeError(f"Unknown basis vector '{value}'")


def structure_from_json(data: dict, name: str = 'structure') -> Structure:
    assert(isinstance(data, dict))
    try:
        kind = data['kind']
        field = field_from_json(data['field']) if 'field' in data else RATIONALS
        dim = int(data['dim'])
        names = list(data.get('basis_names', [f"e{i}" for i in range(dim)]))
        name = data.get('name', name)
        if len(names) != dim:
            raise BadDimension(f"{len(names)} basis names given for dimension {dim}")

        products = data['mult'] if kind == AssociativeAlgebra.kind else data['bracket']
        entries = {}
        for product in products:
            coords = product['coords']
            if len(coords) != dim:
                raise BadDimension(f"Product of {product['i']} and {product['j']} needs {dim} coordinates")
            entries[(_basis_index(names, product['i']), _basis_index(names, product['j']))] = \
                [field.parse(str(value)) for value in coords]
        constants = structure_tensor(field, dim, entries)

        if kind == AssociativeAlgebra.kind:
            return AssociativeAlgebra(field, constants, [field.parse(str(value)) for value in data['unit']], names, name)
        if kind == LieSuperalgebra.kind:
            return LieSuperalgebra(field, constants, [int(grade) for grade in data.get('grades', [0] * dim)], names, name)
        if kind == GThetaLieAlgebra.kind:
            group = FiniteAbelianGroup([int(order) for order in data['group']['orders']])
            theta = ColorFunction(group, data['theta_exponents'], field)
            return GThetaLieAlgebra(field, constants, [tuple(grade) for grade in data['grades']], theta, names, name)
    except KeyError as error:
        raise RecipeError(f"Structure file is missing the key {error}")

    raise RecipeError(f"Unknown structure kind '{kind}'")


def structure_to_json(structure: Structure) -> dict:
    field = structure.field
    key = 'mult' if isinstance(structure, AssociativeAlgebra) else 'bracket'
    products = [{'i': structure.basis_names[i],
                 'j': structure.basis_names[j],
                 'coords': [field.format(value) for value in structure.constants[i, j]]}
                for i, j in itertools.product(range(structure.dim), repeat=2) if any(structure.constants[i, j])]

    data = {'kind': structure.kind,
            'name': structure.name,
            'field': field.to_json(),
            'dim': structure.dim,
            'basis_names': list(structure.basis_names),
            key: products}

    if isinstance(structure, AssociativeAlgebra):
        data['unit'] = [field.format(value) for value in structure.unit]
    if isinstance(structure, LieSuperalgebra):
        data['grades'] = list(structure.grades)
    if isinstance(structure, GThetaLieAlgebra):
        data['grades'] = [list(grade) for grade in structure.grades]
        data['group'] = {'orders': list(structure.group.orders)}
        data['theta_exponents'] = structure.theta.exponents.tolist()

    return data


def load_structure(path: str) -> Structure:
    with open(path, 'r') as file:
        return structure_from_json(json.load(file), name=path)
