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
import logging
from typing import List, Optional

import numpy as np

from yang_baxter_ops.errors import YangBaxterError, InvalidCase, NotInvertibleParams, Singular, RecipeError
from yang_baxter_ops.oracle import ORACLE_CHECKS, oracle_equivalence, mutation_test
from yang_baxter_ops.operators import gtheta_condition
from yang_baxter_ops.recipes import OperatorRecipe, COLORED_FAMILIES
from yang_baxter_ops.verify import VerificationReport, Outcome, check_braid, check_qybe, check_yb_commutator_zero, \
    check_colored_suite, check_one_param, check_wxz, check_classical, check_inverse_pair, check_invertible, \
    check_twist_equivalence

DEFAULT_SUITES = {
    'dn': ['braid', 'inverse', 'twist-equivalence'],
    'dim2-canonical': ['qybe', 'invertible', 'yb-commutator'],
    'colored': ['colored', 'inverse'],
    'one-param': ['one-param', 'inverse'],
    'wxz-algebra': ['wxz'],
    'wxz-colored': ['wxz'],
    'split': ['qybe'],
    'super-phi': ['braid', 'inverse', 'twist-equivalence'],
    'super-phi-ab': ['braid', 'inverse', 'twist-equivalence'],
    'super-colored': ['colored', 'constraint'],
    'gtheta': ['qybe', 'inverse', 'gtheta-condition'],
    'classical-r': ['classical']
}

CHECKS = ('braid', 'qybe', 'yb-commutator', 'invertible', 'inverse', 'twist-equivalence', 'colored', 'one-param',
          'wxz', 'classical', 'constraint', 'gtheta-condition', 'oracle', 'mutation')

# Parameters outside the operator's domain skip the affected check instead of failing the run.
PRECONDITION_ERRORS = (InvalidCase, NotInvertibleParams, Singular)

ORACLE_NAMES = {'colored': 'colored-qybe'}


def parse_suite(text: Optional[str], family: str) -> List[str]:
    if text is None:
        return list(DEFAULT_SUITES[family])

    checks = [check.strip() for check in text.split(',') if check.strip()]
    for check in checks:
        if check not in CHECKS:
            raise RecipeError(f"Unknown check '{check}' (known: {', '.join(CHECKS)})")

    return checks


def recipe_params(recipe: OperatorRecipe) -> dict:
    """The scalar parameters of a recipe, as strings, for report records."""
    params = {'family': recipe.family}
    if recipe.structure_ref is not None:
        params['structure'] = recipe.structure_ref
    for name, value in sorted(recipe.params.items()):
        if isinstance(value, (str, int, float)):
            params[name] = str(value)

    return params


class SuiteRun:
    """Runs named checks against one recipe, building its operators at most once."""

    def __init__(self, recipe: OperatorRecipe, seed: int = 0):
        assert(isinstance(recipe, OperatorRecipe))

        self.recipe = recipe
        self.seed = seed
        self.params = recipe_params(recipe)
        self._built = None

    @property
    def built(self) -> dict:
        if self._built is None:
            self._built = self.recipe.build()

        return self._built

    def operator(self, name: str = 'R'):
        if name not in self.built:
            raise RecipeError(f"Family '{self.recipe.family}' does not produce the operator {name}")

        value = self.built[name]
        return value() if callable(value) else value

    def run(self, checks: List[str]) -> List[VerificationReport]:
        reports = []
        for check in checks:
            try:
                reports += self.run_check(check)
            except PRECONDITION_ERRORS as error:
                reports.append(VerificationReport.skipped(check, self.params, str(error)))

        return reports

    def run_check(self, check: str) -> List[VerificationReport]:
        recipe = self.recipe
        basis = recipe.basis_names
        params = self.params

        if check == 'braid':
            return [check_braid(self.operator(), params, basis)]
        if check == 'qybe':
            return [check_qybe(self.operator(), params, basis)]
        if check == 'yb-commutator':
            return [check_yb_commutator_zero(self.operator(), params, basis)]
        if check == 'invertible':
            return [check_invertible(self.operator(), params)]
        if check == 'twist-equivalence':
            return [check_twist_equivalence(self.operator(), params)]
        if check == 'classical':
            return [check_classical(self.operator(), params, basis)]
        if check == 'wxz':
            return [check_wxz(self.operator('W'), self.operator('X'), self.operator('Z'), params, basis)]
        if check == 'colored':
            return check_colored_suite(recipe.colored_family(), params, basis)
        if check == 'one-param':
            return [check_one_param(recipe.colored_family(), *recipe.spectral(), params, basis)]
        if check == 'inverse':
            return self._inverse()
        if check == 'constraint':
            return [self._constraint()]
        if check == 'gtheta-condition':
            return [self._gtheta_condition()]
        if check == 'oracle':
            return self._oracle()
        if check == 'mutation':
            return self._mutation()

        raise RecipeError(f"Unknown check '{check}'")

    def _inverse(self) -> List[VerificationReport]:
        recipe = self.recipe
        single = recipe.family == 'one-param' and 's' in recipe.params
        if single or recipe.family not in ('colored', 'one-param'):
            return [check_inverse_pair(self.operator(), self.operator('R_inverse'), self.params, recipe.basis_names)]

        # every ordered pair of colors; R(u, v) outside the invertible region is skipped
        family = recipe.colored_family()
        field = family.field
        reports = []
        for u, v in itertools.product(family.colors, repeat=2):
            params = {**self.params, 'u': field.format(u), 'v': field.format(v)}
            try:
                reports.append(check_inverse_pair(family(u, v), family.inverse(u, v), params, recipe.basis_names))
            except PRECONDITION_ERRORS as error:
                reports.append(VerificationReport.skipped('inverse', params, str(error)))

        return reports

    def _constraint(self) -> VerificationReport:
        table = self.recipe.table()
        violation = table.constraint_violation()
        if violation is None:
            return VerificationReport('constraint', self.params, Outcome.HOLDS)

        field = table.field
        witness = dict(zip(('u', 'v', 'w'), (field.format(color) for color in violation)))
        return VerificationReport('constraint', self.params, Outcome.FAILS, witness,
                                  reason="beta(u,w) alpha(v,w) != alpha(u,w) beta(v,w)")

    def _gtheta_condition(self) -> VerificationReport:
        structure = self.recipe.structure
        z = self.recipe.z()
        if gtheta_condition(structure, z):
            return VerificationReport('gtheta-condition', self.params, Outcome.HOLDS)

        theta = structure.theta
        field = structure.field
        g = next(structure.grades[i] for i, value in enumerate(z) if value)
        for a in [g] + sorted(set(structure.grades)):
            for left, right in ((g, a), (a, g)):
                if theta(left, right) != 1:
                    witness = {'left': list(left), 'right': list(right), 'theta': field.format(theta(left, right))}
                    return VerificationReport('gtheta-condition', self.params, Outcome.FAILS, witness)

        raise AssertionError("gtheta_condition failed without a failing grade pair")

    def _oracle_checks(self) -> List[str]:
        checks = []
        for check in DEFAULT_SUITES[self.recipe.family]:
            name = ORACLE_NAMES.get(check, check)
            if name in ORACLE_CHECKS and (name != 'inverse' or self.recipe.family not in COLORED_FAMILIES):
                checks.append(name)
        if self.recipe.family in ('dn', 'super-phi', 'super-phi-ab', 'gtheta', 'split', 'dim2-canonical') \
                and 'qybe' not in checks:
            checks.append('qybe')

        return checks

    def _oracle(self) -> List[VerificationReport]:
        reports = []
        for check in self._oracle_checks():
            try:
                reports.append(oracle_equivalence(self.recipe, check, self.params))
            except PRECONDITION_ERRORS as error:
                reports.append(VerificationReport.skipped(f"oracle-{check}", self.params, str(error)))
            except RecipeError as error:
                # no closed-form inverse at these parameters
                if check != 'inverse':
                    raise
                reports.append(VerificationReport.skipped(f"oracle-{check}", self.params, str(error)))

        return reports

    def _mutation(self) -> List[VerificationReport]:
        checks = self._oracle_checks()
        if self.recipe.structure is None or not checks:
            return [VerificationReport.skipped('mutation', self.params, "no structure constants to perturb")]

        return [mutation_test(self.recipe, checks[0], self.seed).with_params(self.params)]


def run_suite(recipe: OperatorRecipe, checks: Optional[List[str]] = None, seed: int = 0) -> List[VerificationReport]:
    checks = checks if checks is not None else DEFAULT_SUITES[recipe.family]
    logging.info(f"Running {', '.join(checks)} on {recipe.family}"
                 f"{' over ' + recipe.structure_ref if recipe.structure_ref else ''}")

    return SuiteRun(recipe, seed).run(checks)


def grid_points(grid: dict, seed: int = 0) -> List[dict]:
    """Zips the value lists inside each axis, takes the product across axes, then applies ties."""
    if not isinstance(grid, dict) or not isinstance(grid.get('axes'), list):
        raise RecipeError("A grid needs a list of 'axes'")

    points = [{}]
    for axis in grid['axes']:
        if not isinstance(axis, dict) or not axis:
            raise RecipeError("Every grid axis must map parameter names to value lists")
        lengths = {len(values) for values in axis.values()}
        if len(lengths) != 1:
            raise RecipeError(f"Value lists of one axis must have equal lengths, got {sorted(lengths)}")

        names = list(axis.keys())
        rows = [dict(zip(names, (str(value) for value in values))) for values in zip(*axis.values())]
        points = [{**point, **row} for point in points for row in rows]

    for target, source in grid.get('tie', {}).items():
        for point in points:
            if source not in point:
                raise RecipeError(f"Tie {target} -> {source} refers to a parameter that is not on the grid")
            point[target] = point[source]

    if 'sample' in grid:
        count = int(grid['sample'])
        if count < len(points):
            chosen = np.random.default_rng(seed).choice(len(points), size=count, replace=False)
            points = [points[index] for index in sorted(chosen)]

    return points


def sweep(recipe: OperatorRecipe, grid: dict, checks: Optional[List[str]] = None, seed: int = 0) -> List[VerificationReport]:
    """The recipe's suite at every grid point; ordered by point, then by check name."""
    checks = checks if checks is not None else DEFAULT_SUITES[recipe.family]
    points = grid_points(grid, seed)
    logging.info(f"Sweeping {recipe.family} over {len(points)} grid points")

    reports = []
    for number, point in enumerate(points):
        point_recipe = recipe.with_params(point)
        try:
            point_reports = SuiteRun(point_recipe, seed).run(checks)
        except RecipeError:
            raise
        except YangBaxterError as error:
            logging.warning(f"Skipping grid point {point}: {error}")
            point_reports = [VerificationReport.skipped(check, recipe_params(point_recipe), str(error)) for check in checks]

        point_reports = [report.with_params({'point': str(number)}) for report in point_reports]
        reports += sorted(point_reports, key=lambda report: report.check)

    return reports


def aggregate(reports: List[VerificationReport]) -> Outcome:
    """Holds unless some check fails; skipped checks do not count against a run."""
    if any(report.fails for report in reports):
        return Outcome.FAILS

    return Outcome.HOLDS
