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

import argparse
import json
import logging
import sys

from yang_baxter_ops.catalog import CATALOG, catalog
from yang_baxter_ops.errors import YangBaxterError
from yang_baxter_ops.presets import PRESETS, run_preset
from yang_baxter_ops.recipes import OperatorRecipe
from yang_baxter_ops.reports import emit
from yang_baxter_ops.search import FIELDS, DEFAULT_CHUNK_SIZE, run_search
from yang_baxter_ops.structures import validate, load_structure
from yang_baxter_ops.suites import PRECONDITION_ERRORS, parse_suite, run_suite, sweep, aggregate
from yang_baxter_ops.tensor import operator_to_table
from yang_baxter_ops.util import initialize_logging, load_json, to_json, write_or_print
from yang_baxter_ops.verify import VerificationReport, Outcome

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_USAGE = 2


class YangBaxterOps:
    """Tool to build Yang-Baxter operators and verify their identities exactly."""

    def __init__(self, args: list):
        parser = argparse.ArgumentParser(prog='yang-baxter-ops')
        commands = parser.add_subparsers(dest='command')
        commands.required = True

        validate_parser = commands.add_parser('validate', help="Validate a structure file or catalog entry")
        validate_parser.add_argument("structure", help="Structure file or catalog name", type=str)
        validate_parser.add_argument("--seed", help="Seed for sampled color function checks (default: 0)", type=int, default=0)
        self._add_output(validate_parser)

        build_parser = commands.add_parser('build-op', help="Build the operators of a recipe as matrix tables")
        build_parser.add_argument("recipe", help="Recipe file", type=str)
        build_parser.add_argument("--out", help="File to save the operator tables to", required=True, type=str)

        verify_parser = commands.add_parser('verify', help="Run a check suite on a recipe")
        verify_parser.add_argument("recipe", help="Recipe file", type=str)
        verify_parser.add_argument("--suite", help="Comma-separated checks (default: the family's suite)", type=str)
        verify_parser.add_argument("--seed", help="Seed for the mutation harness (default: 0)", type=int, default=0)
        self._add_output(verify_parser)

        sweep_parser = commands.add_parser('sweep', help="Run a recipe's suite at every point of a parameter grid")
        sweep_parser.add_argument("recipe", help="Recipe file", type=str)
        sweep_parser.add_argument("--grid", help="Grid file", required=True, type=str)
        sweep_parser.add_argument("--suite", help="Comma-separated checks (default: the family's suite)", type=str)
        sweep_parser.add_argument("--seed", help="Seed for sampled grid points (default: 0)", type=int, default=0)
        self._add_output(sweep_parser)

        search_parser = commands.add_parser('search', help="Exhaustive dimension-2 constant QYBE search over F_2 or F_3")
        search_parser.add_argument("--field", help="Prime field to search", required=True, choices=sorted(FIELDS))
        search_parser.add_argument("--invertible", help="Keep invertible solutions only", dest='invertible', action='store_true')
        search_parser.add_argument("--out", help="File to save the census to", required=True, type=str)
        search_parser.add_argument("--chunk-size", help=f"Candidates per chunk (default: {DEFAULT_CHUNK_SIZE})",
                                   type=int, default=DEFAULT_CHUNK_SIZE)

        preset_parser = commands.add_parser('preset', help="Run a bundled verification preset")
        preset_parser.add_argument("name", help="Preset name", choices=sorted(PRESETS))
        self._add_output(preset_parser)

        self.arguments = parser.parse_args(args)

        initialize_logging()

    @staticmethod
    def _add_output(parser: argparse.ArgumentParser):
        parser.add_argument("-o", "--output", help="File to save the report to", required=False, type=str)

        parser_mode = parser.add_mutually_exclusive_group()
        parser_mode.add_argument('--text', help="Show the report as a text table (default)", dest='json', action='store_false')
        parser_mode.add_argument('--json', help="Show the report as JSON records", dest='json', action='store_true')

    def main(self) -> int:
        command = self.arguments.command.replace('-', '_')
        return getattr(self, command)()

    def _emit(self, title: str, reports: list) -> int:
        emit(title, reports, self.arguments.output, self.arguments.json)
        return EXIT_FAILS if aggregate(reports) == Outcome.FAILS else EXIT_HOLDS

    def validate(self) -> int:
        structure = resolve_structure_unchecked(self.arguments.structure)
        report = validate(structure, self.arguments.seed)
        params = {'structure': structure.name, 'kind': structure.kind}

        if report.valid:
            result = VerificationReport('validate', params, Outcome.HOLDS)
        else:
            witness = {'check': report.check,
                       'basis': [str(value) for value in report.witness] if report.witness is not None else None,
                       'message': report.message}
            result = VerificationReport('validate', params, Outcome.FAILS, witness)

        return self._emit(f"Validation of {structure.name}", [result])

    def build_op(self) -> int:
        recipe = OperatorRecipe.load(self.arguments.recipe)
        operators = {}
        for name, value in recipe.build().items():
            try:
                operators[name] = operator_to_table(value() if callable(value) else value)
            except PRECONDITION_ERRORS as error:
                logging.warning(f"Not writing {name}: {error}")

        write_or_print(to_json({'family': recipe.family, 'operators': operators}), self.arguments.out)
        logging.info(f"Wrote {', '.join(operators)} to {self.arguments.out}")
        return EXIT_HOLDS

    def verify(self) -> int:
        recipe = OperatorRecipe.load(self.arguments.recipe)
        reports = run_suite(recipe, parse_suite(self.arguments.suite, recipe.family), self.arguments.seed)

        return self._emit(f"Verification of {self.arguments.recipe}", reports)

    def sweep(self) -> int:
        recipe = OperatorRecipe.load(self.arguments.recipe)
        grid = load_json(self.arguments.grid)
        reports = sweep(recipe, grid, parse_suite(self.arguments.suite, recipe.family), self.arguments.seed)

        return self._emit(f"Sweep of {self.arguments.recipe} over {self.arguments.grid}", reports)

    def search(self) -> int:
        p = FIELDS[self.arguments.field]
        result = run_search(p, self.arguments.invertible, self.arguments.out, self.arguments.chunk_size)

        counts = result['summary']
        logging.info(f"Found {counts['solutions']} solutions over F_{p}, {counts['family_matches']} family matches, "
                     f"{counts['reverified']} re-verified")
        return EXIT_HOLDS if counts['reverified'] == counts['solutions'] else EXIT_FAILS

    def preset(self) -> int:
        reports = run_preset(self.arguments.name)
        return self._emit(f"Preset {self.arguments.name}", reports)


def resolve_structure_unchecked(reference: str):
    """Like resolve_structure, without rejecting invalid structure files."""
    if reference in CATALOG:
        return catalog(reference)

    return load_structure(reference)


def run(argv: list) -> int:
    """Exit code 0 when every check holds, 1 when one fails, 2 on usage or input errors."""
    try:
        tool = YangBaxterOps(argv)
    except SystemExit as error:
        return EXIT_USAGE if error.code else EXIT_HOLDS

    try:
        return tool.main()
    except (YangBaxterError, OSError, json.JSONDecodeError) as error:
        logging.error(f"{type(error).__name__}: {error}")
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(run(sys.argv[1:]))
