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
from typing import List, Optional

from texttable import Texttable

from yang_baxter_ops.suites import aggregate
from yang_baxter_ops.util import generated_at, to_json, write_or_print
from yang_baxter_ops.verify import VerificationReport, Outcome

HIDDEN_PARAMS = ('family', 'structure')


def summary(reports: List[VerificationReport]) -> dict:
    return {'checks': len(reports),
            'holds': sum(1 for report in reports if report.outcome == Outcome.HOLDS),
            'fails': sum(1 for report in reports if report.outcome == Outcome.FAILS),
            'skipped': sum(1 for report in reports if report.outcome == Outcome.SKIPPED),
            'outcome': aggregate(reports).value}


def format_params(params: dict) -> str:
    return ", ".join(f"{name}={value}" for name, value in sorted(params.items()) if name not in HIDDEN_PARAMS)


def format_detail(report: VerificationReport) -> str:
    if report.witness is not None:
        return json.dumps(report.witness, sort_keys=True)

    return report.reason or ""


def reports_text(title: str, reports: List[VerificationReport], timestamp: bool) -> str:
    data = [[str(number + 1), report.check, format_params(report.params), report.outcome.value, format_detail(report)]
            for number, report in enumerate(reports)]

    table = Texttable(max_width=250)
    table.set_deco(Texttable.HEADER)
    table.set_cols_dtype(['t', 't', 't', 't', 't'])
    table.set_cols_align(['r', 'l', 'l', 'l', 'l'])
    table.set_cols_width([5, 24, 60, 8, 100])
    table.add_rows([["#", "Check", "Parameters", "Outcome", "Witness / reason"]] + data)

    counts = summary(reports)
    result = f"{title}:" + "\n" + \
             f"" + "\n" + \
             table.draw() + "\n" + \
             f"" + "\n" + \
             f"Total number of checks: {counts['checks']}" + "\n" + \
             f"Holds: {counts['holds']}, fails: {counts['fails']}, skipped: {counts['skipped']}" + "\n" + \
             f"Overall outcome: {counts['outcome']}"

    # report files carry no timestamp
    if timestamp:
        result += "\n" + f"" + "\n" + generated_at()

    return result


def reports_json(title: str, reports: List[VerificationReport]) -> str:
    return to_json({'title': title,
                    'summary': summary(reports),
                    'reports': [report.to_json() for report in reports]})


def emit(title: str, reports: List[VerificationReport], output: Optional[str], as_json: bool):
    if as_json:
        write_or_print(reports_json(title, reports), output)
    else:
        write_or_print(reports_text(title, reports, timestamp=output is None), output)
