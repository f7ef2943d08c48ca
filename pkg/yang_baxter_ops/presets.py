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

import logging
from typing import Callable, List

from yang_baxter_ops.catalog import catalog
from yang_baxter_ops.errors import HypothesisViolated, RecipeError
from yang_baxter_ops.operators import build_super_phi, build_classical_r, build_split
from yang_baxter_ops.oracle import mutation_test
from yang_baxter_ops.recipes import OperatorRecipe
from yang_baxter_ops.search import scan, census
from yang_baxter_ops.suites import sweep, run_suite
from yang_baxter_ops.tensor import twist
from yang_baxter_ops.verify import VerificationReport, Outcome, compare, check_classical

ALPHAS = ['1', '2', '-1', '1/2', '3']
BETAS = ['1', '-2', '1/3', '5', '7']
ALGEBRAS = ('dual-numbers', 'm2')


def expect_failure(check: str, reports: List[VerificationReport], params: dict) -> VerificationReport:
    """Holds when at least one of `reports` fails; carries that failure's witness."""
    for report in reports:
        if report.fails:
            return VerificationReport(check, {**params, **report.params}, Outcome.HOLDS, report.witness,
                                      reason=f"{report.check} fails as expected")

    return VerificationReport(check, params, Outcome.FAILS, {'expected': 'fails', 'observed': 'holds'},
                              reason="expected a failing check")


def dn_cases() -> List[VerificationReport]:
    grids = {'case-i': {'axes': [{'alpha': ALPHAS}, {'beta': BETAS}], 'tie': {'gamma': 'alpha'}},
             'case-ii': {'axes': [{'beta': ALPHAS}, {'alpha': BETAS}], 'tie': {'gamma': 'beta'}},
             'case-iii': {'axes': [{'gamma': ALPHAS}, {'alpha': ['0'], 'beta': ['0']}]}}

    reports = []
    for structure in ALGEBRAS:
        for case, grid in grids.items():
            recipe = OperatorRecipe('dn', structure, {'case': case})
            reports += sweep(recipe, grid, ['braid', 'inverse', 'oracle'])

    return reports


def dn_invalid() -> List[VerificationReport]:
    recipe = OperatorRecipe('dn', 'dual-numbers', {'alpha': '1', 'beta': '2', 'gamma': '3'})
    return [expect_failure('braid-invalid-case', run_suite(recipe, ['braid']), {'family': 'dn', 'structure': 'dual-numbers'})]


def twist_equivalence() -> List[VerificationReport]:
    recipes = [OperatorRecipe('dn', 'dual-numbers', {'alpha': '2', 'beta': '3', 'gamma': '3'}),
               OperatorRecipe('dn', 'dual-numbers', {'alpha': '1', 'beta': '2', 'gamma': '3'}),
               OperatorRecipe('dn', 'm2', {'alpha': '1', 'beta': '2', 'gamma': '3'}),
               OperatorRecipe('super-phi', 'super-d2', {'z': 'auto-center', 'alpha': '1'}),
               OperatorRecipe('super-phi', 'heisenberg3', {'z': 'z', 'alpha': '5'})]

    return [report for recipe in recipes for report in run_suite(recipe, ['twist-equivalence', 'oracle'])]


def dim2_canonical() -> List[VerificationReport]:
    recipe = OperatorRecipe('dim2-canonical', None, {})
    grid = {'axes': [{'q': ['1', '2', '-1', '1/3']}, {'eta': ['0', '1']}]}
    return sweep(recipe, grid, ['qybe', 'invertible', 'yb-commutator', 'oracle'])


def colored() -> List[VerificationReport]:
    recipe = OperatorRecipe('colored', 'dual-numbers', {'colors': ['0', '1', '2']})
    grid = {'axes': [{'p': ['1', '3'], 'q': ['2', '5']}]}
    return sweep(recipe, grid, ['colored', 'inverse', 'oracle'])


def one_param() -> List[VerificationReport]:
    recipe = OperatorRecipe('one-param', 'dual-numbers', {})
    grid = {'axes': [{'q': ['2', '3']}, {'s1': ['6', '4', '10'], 's2': ['3', '2', '5'], 's3': ['1', '1', '1']}]}
    return sweep(recipe, grid, ['one-param', 'inverse', 'oracle'])


def wxz() -> List[VerificationReport]:
    reports = []
    for structure in ALGEBRAS:
        recipe = OperatorRecipe('wxz-algebra', structure, {})
        reports += sweep(recipe, {'axes': [{'lambda': ['1', '2', '-1'], 'mu': ['1', '3', '1/2']}]}, ['wxz', 'oracle'])

    from_colored = OperatorRecipe('wxz-colored', 'dual-numbers',
                                  {'source': 'colored', 'p': '1', 'q': '3', 'colors': ['1', '2'], 's': '1', 't': '2'})
    from_super = OperatorRecipe('wxz-colored', 'super-d2',
                                {'source': 'super-colored', 'z': 'auto-center', 'colors': ['1', '2', '3'],
                                 'alpha_table': {'second': {'1': '1', '2': '2', '3': '3'}},
                                 'beta_table': {'constant': '1'}, 's': '1', 't': '2'})

    return reports + run_suite(from_colored, ['wxz', 'oracle']) + run_suite(from_super, ['wxz', 'oracle'])


def split() -> List[VerificationReport]:
    examples = [OperatorRecipe('split', None, {'dim': 2, 'c': 1,
                                               'f': [{'i': 0, 'j': 0, 'coords': ['1', '0']}]}),
                OperatorRecipe('split', None, {'dim': 3, 'c': 2,
                                               'f': [{'i': 0, 'j': 1, 'coords': ['1', '1', '0']}],
                                               'g': [{'i': 1, 'j': 1, 'coords': ['1', '0', '0']},
                                                     {'i': 0, 'j': 0, 'coords': ['0', '2', '0']}]})]
    reports = [report for recipe in examples for report in run_suite(recipe, ['qybe', 'oracle'])]

    params = {'family': 'split', 'dim': '2', 'c': '1'}
    try:
        build_split(2, 1, [[[0, 0], [0, 0]], [[1, 0], [0, 0]]], [[[0, 0], [0, 0]], [[0, 0], [0, 0]]])
        reports.append(VerificationReport('hypothesis-rejected', params, Outcome.FAILS,
                                          {'expected': 'HypothesisViolated', 'observed': 'built'}))
    except HypothesisViolated as error:
        reports.append(VerificationReport('hypothesis-rejected', params, Outcome.HOLDS, reason=str(error)))

    return reports


def super_phi() -> List[VerificationReport]:
    reports = []
    for structure, z in (('super-d2', 'auto-center'), ('heisenberg3', 'z')):
        recipe = OperatorRecipe('super-phi', structure, {'z': z})
        reports += sweep(recipe, {'axes': [{'alpha': ['0', '1', '5', '-1/2']}]}, ['braid', 'inverse', 'oracle'])

        recipe = OperatorRecipe('super-phi-ab', structure, {'z': z})
        reports += sweep(recipe, {'axes': [{'alpha': ['0', '1', '5', '-1/2']}, {'beta': ['1', '2', '1/3']}]},
                         ['braid', 'inverse', 'oracle'])

    return reports + lie_specialization()


def lie_specialization() -> List[VerificationReport]:
    """On a purely even algebra phi equals alpha [x, y] (x) z + y (x) x entry by entry."""
    algebra = catalog('heisenberg3')
    z = algebra.basis_vector('z')
    field = algebra.field

    reports = []
    for alpha in ('0', '1', '5', '-1/2'):
        value = field.parse(alpha)
        expected = build_classical_r(algebra, z).scaled(value) + twist(algebra.dim, field)
        reports.append(compare('lie-specialization', build_super_phi(algebra, z, value), expected,
                               {'family': 'super-phi', 'structure': 'heisenberg3', 'alpha': alpha},
                               algebra.basis_names))

    return reports


def super_colored() -> List[VerificationReport]:
    satisfying = OperatorRecipe('super-colored', 'super-d2',
                                {'z': 'auto-center', 'colors': ['1', '2', '3'],
                                 'alpha_table': {'second': {'1': '1', '2': '2', '3': '3'}},
                                 'beta_table': {'constant': '1'}})
    violating = OperatorRecipe('super-colored', 'gl2',
                               {'z': 'c', 'colors': ['1', '2', '3'],
                                'alpha_table': {'constant': '1'},
                                'beta_table': {'first': {'1': '1', '2': '2', '3': '3'}}})
    params = {'family': 'super-colored', 'structure': 'gl2'}

    return run_suite(satisfying, ['colored', 'constraint', 'oracle']) + \
        [expect_failure('colored-violating-table', run_suite(violating, ['colored']), params),
         expect_failure('constraint-violating-table', run_suite(violating, ['constraint']), params)]


def gtheta() -> List[VerificationReport]:
    recipe = OperatorRecipe('gtheta', 'gtheta-z4z4', {'z': 'z'})
    reports = sweep(recipe, {'axes': [{'alpha': ['0', '1', '[0,1]']}]}, ['qybe', 'inverse', 'gtheta-condition', 'oracle'])

    bad = OperatorRecipe('gtheta', 'gtheta-bad', {'z': 'z', 'alpha': '1'})
    params = {'family': 'gtheta', 'structure': 'gtheta-bad', 'alpha': '1'}
    return reports + [expect_failure('qybe-gtheta-bad', run_suite(bad, ['qybe']), params),
                      expect_failure('gtheta-condition-gtheta-bad', run_suite(bad, ['gtheta-condition']), params)]


def classical() -> List[VerificationReport]:
    recipes = [OperatorRecipe('classical-r', 'heisenberg3', {'z': 'z'}),
               OperatorRecipe('classical-r', 'super-d2', {'z': 'auto-center'})]
    reports = [report for recipe in recipes for report in run_suite(recipe, ['classical', 'oracle'])]

    algebra = catalog('sl2')
    r = build_classical_r(algebra, algebra.basis_vector('h'), check_center=False)
    params = {'family': 'classical-r', 'structure': 'sl2', 'z': 'h'}
    return reports + [expect_failure('classical-non-central', [check_classical(r, params, algebra.basis_names)], params)]


def mutations() -> List[VerificationReport]:
    cases = [(OperatorRecipe('dn', 'm2', {'alpha': '1', 'beta': '5', 'gamma': '1'}), 'qybe'),
             (OperatorRecipe('super-phi', 'super-d2', {'z': 'auto-center', 'alpha': '1'}), 'braid'),
             (OperatorRecipe('gtheta', 'gtheta-z4z4', {'z': 'z', 'alpha': '1'}), 'qybe'),
             (OperatorRecipe('colored', 'dual-numbers', {'p': '1', 'q': '2', 'colors': ['0', '1', '2']}), 'colored-qybe')]

    return [mutation_test(recipe, check, seed=0).with_params({'family': recipe.family, 'structure': recipe.structure_ref})
            for recipe, check in cases]


def search_f2() -> List[VerificationReport]:
    result = census(2, True, scan(2, True))
    counts = result['summary']
    params = {'field': 'f2', 'invertible': 'true', 'solutions': str(counts['solutions'])}

    complete = counts['contains_identity'] and counts['contains_twist'] and counts['all_family_members_found'] \
        and counts['reverified'] == counts['solutions']
    if complete:
        return [VerificationReport('search-dim2', params, Outcome.HOLDS)]

    return [VerificationReport('search-dim2', params, Outcome.FAILS, counts)]


PRESETS = {
    'paper-all': [('dn cases', dn_cases),
                  ('dn invalid case', dn_invalid),
                  ('twist equivalence', twist_equivalence),
                  ('canonical dimension-2 family', dim2_canonical),
                  ('colored family', colored),
                  ('one-parameter family', one_param),
                  ('WXZ systems', wxz),
                  ('split construction', split),
                  ('superalgebra bracket twist', super_phi),
                  ('colored superalgebra family', super_colored),
                  ('(G, theta) family', gtheta),
                  ('classical r-matrix', classical),
                  ('mutation harness', mutations),
                  ('dimension-2 search over F_2', search_f2)]
}


def run_preset(name: str) -> List[VerificationReport]:
    if name not in PRESETS:
        raise RecipeError(f"Unknown preset '{name}' (known: {', '.join(PRESETS)})")

    reports = []
    for title, group in PRESETS[name]:
        logging.info(f"Preset {name}: {title}")
        reports += group()

    return reports
