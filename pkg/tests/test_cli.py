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

import json
from pathlib import Path

from yang_baxter_ops.cli import run
from yang_baxter_ops.search import DEFAULT_CHUNK_SIZE
from yang_baxter_ops.tensor import operator_from_table
from yang_baxter_ops.verify import VerificationReport, Outcome, check_qybe

ROOT = Path(__file__).parent.parent


def recipe(name: str) -> str:
    return str(ROOT / "recipes" / f"{name}.json")


def read(path) -> dict:
    with open(str(path), 'r') as file:
        return json.load(file)


def test_verify_exits_with_zero_when_every_check_holds(tmp_path):
    # given
    out = tmp_path / "report.json"

    # when
    code = run(["verify", recipe("dn-case1-dual"), "--json", "-o", str(out)])

    # then
    assert code == 0
    result = read(out)
    assert result['summary'] == {'checks': 3, 'holds': 3, 'fails': 0, 'skipped': 0, 'outcome': 'holds'}
    assert [report['check'] for report in result['reports']] == ['braid', 'inverse', 'twist-equivalence']


def test_verify_exits_with_one_on_a_failing_check(tmp_path):
    # given
    out = tmp_path / "report.json"

    # when
    code = run(["verify", recipe("gtheta-bad"), "--json", "-o", str(out)])

    # then
    assert code == 1
    reports = read(out)['reports']
    assert reports[0]['outcome'] == 'fails'
    assert reports[0]['witness']['lhs'] != reports[0]['witness']['rhs']


def test_verify_with_explicit_suite(tmp_path):
    # given
    out = tmp_path / "report.json"

    # when
    code = run(["verify", recipe("dim2-canonical"), "--suite", "qybe,oracle", "--json", "-o", str(out)])

    # then
    assert code == 0
    assert [report['check'] for report in read(out)['reports']] == ['qybe', 'oracle-qybe', 'oracle-yb-commutator']


def test_skipped_checks_do_not_fail_the_run(tmp_path):
    # given
    out = tmp_path / "report.json"

    # when
    code = run(["verify", recipe("dn-invalid"), "--suite", "inverse", "--json", "-o", str(out)])

    # then
    assert code == 0
    assert read(out)['summary']['skipped'] == 1


def test_text_report_file(tmp_path):
    # given
    out = tmp_path / "report.txt"

    # when
    code = run(["verify", recipe("super-colored-gl2-violating"), "--suite", "constraint", "-o", str(out)])

    # then
    assert code == 1
    text = out.read_text()
    assert "constraint" in text
    assert '{"u": "1", "v": "2", "w": "1"}' in text
    assert "Overall outcome: fails" in text
    assert "Generated at" not in text


def test_text_report_on_console_has_timestamp(capsys):
    # when
    code = run(["verify", recipe("classical-heisenberg")])

    # then
    assert code == 0
    assert "Generated at" in capsys.readouterr().out


def test_usage_and_input_errors_exit_with_two(tmp_path):
    # then
    assert run([]) == 2
    assert run(["verify"]) == 2
    assert run(["search", "--field", "f5", "--out", str(tmp_path / "out.json")]) == 2
    assert run(["verify", str(tmp_path / "missing.json")]) == 2
    assert run(["verify", recipe("dn-case1-dual"), "--suite", "hexagon"]) == 2


def test_malformed_recipe_exits_with_two(tmp_path):
    # given
    broken = tmp_path / "broken.json"
    broken.write_text('{"family": "dn", "structure": "dual-numbers", "params": {"alpha": "1/0"')
    unknown = tmp_path / "unknown.json"
    unknown.write_text('{"family": "quantum-double", "params": {}}')
    bad_scalar = tmp_path / "bad-scalar.json"
    bad_scalar.write_text('{"family": "dn", "structure": "dual-numbers", '
                          '"params": {"alpha": "1/0", "beta": "1", "gamma": "1"}}')

    # then
    assert run(["verify", str(broken)]) == 2
    assert run(["verify", str(unknown)]) == 2
    assert run(["verify", str(bad_scalar)]) == 2


def test_validate_catalog_structure():
    # then
    assert run(["validate", "heisenberg3"]) == 0


def test_validate_reports_associativity_witness(tmp_path):
    # given
    out = tmp_path / "validation.json"

    # when
    code = run(["validate", str(ROOT / "structures" / "dual-numbers-perturbed.json"), "--json", "-o", str(out)])

    # then
    assert code == 1
    witness = read(out)['reports'][0]['witness']
    assert witness['check'] == 'associativity'
    assert witness['basis'] == ['x', '1', 'x']


def test_build_op_writes_exact_tables(tmp_path):
    # given
    out = tmp_path / "operators.json"

    # when
    code = run(["build-op", recipe("dim2-canonical"), "--out", str(out)])

    # then
    assert code == 0
    operators = read(out)['operators']
    assert operators['R']['rows'][2] == ['0', '-1', '2', '0']
    assert check_qybe(operator_from_table(operators['R'])).holds


def test_build_op_skips_missing_inverse(tmp_path):
    # given
    out = tmp_path / "operators.json"

    # when
    code = run(["build-op", recipe("dn-invalid"), "--out", str(out)])

    # then
    assert code == 0
    assert list(read(out)['operators'].keys()) == ['R']


def test_sweep_reports_are_byte_identical(tmp_path):
    # given
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    arguments = ["sweep", recipe("one-param-spectral"), "--grid", str(ROOT / "grids" / "one-param-boundary.json"), "--json"]

    # when
    codes = [run(arguments + ["-o", str(first)]), run(arguments + ["-o", str(second)])]

    # then
    assert codes == [0, 0]
    assert first.read_bytes() == second.read_bytes()
    assert read(first)['summary']['skipped'] == 1


def test_search_command(tmp_path, mocker):
    # given
    out = str(tmp_path / "census.json")
    run_search = mocker.patch('yang_baxter_ops.cli.run_search',
                              return_value={'summary': {'solutions': 3, 'reverified': 3, 'family_matches': 2}})

    # when
    code = run(["search", "--field", "f2", "--invertible", "--out", out])

    # then
    assert code == 0
    run_search.assert_called_once_with(2, True, out, DEFAULT_CHUNK_SIZE)


def test_search_command_fails_when_reverification_disagrees(tmp_path, mocker):
    # given
    mocker.patch('yang_baxter_ops.cli.run_search',
                 return_value={'summary': {'solutions': 3, 'reverified': 2, 'family_matches': 2}})

    # when
    code = run(["search", "--field", "f3", "--out", str(tmp_path / "census.json"), "--chunk-size", "100"])

    # then
    assert code == 1


def test_preset_command(tmp_path, mocker):
    # given
    out = tmp_path / "preset.json"
    run_preset = mocker.patch('yang_baxter_ops.cli.run_preset',
                              return_value=[VerificationReport('qybe', {}, Outcome.HOLDS),
                                            VerificationReport.skipped('inverse', {}, "boundary")])

    # when
    code = run(["preset", "paper-all", "--json", "-o", str(out)])

    # then
    assert code == 0
    run_preset.assert_called_once_with('paper-all')
    assert read(out)['title'] == "Preset paper-all"


def test_unknown_preset():
    # then
    assert run(["preset", "everything"]) == 2
