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
import time
from enum import Enum
from pprint import pformat
from typing import List, Optional

from yang_baxter_ops.errors import BadDimension, DimMismatch, BadParameter, Singular
from yang_baxter_ops.operators import ColoredFamily
from yang_baxter_ops.tensor import LinearOperator, lift, first_difference, basis_labels, identity, twist, \
    zero_operator, invert


class Outcome(Enum):
    HOLDS = 'holds'
    FAILS = 'fails'
    SKIPPED = 'skipped'


class VerificationReport:
    def __init__(self, check: str, params: dict, outcome: Outcome, witness: Optional[dict] = None,
                 reason: Optional[str] = None, elapsed: float = 0.0):
        assert(isinstance(check, str))
        assert(isinstance(params, dict))
        assert(isinstance(outcome, Outcome))
        assert(outcome != Outcome.FAILS or witness is not None)

        self.check = check
        self.params = params
        self.outcome = outcome
        self.witness = witness
        self.reason = reason
        self.elapsed = elapsed

    @property
    def holds(self) -> bool:
        return self.outcome == Outcome.HOLDS

    @property
    def fails(self) -> bool:
        return self.outcome == Outcome.FAILS

    @staticmethod
    def skipped(check: str, params: dict, reason: str) -> 'VerificationReport':
        return VerificationReport(check, params, Outcome.SKIPPED, reason=reason)

    def with_params(self, params: dict) -> 'VerificationReport':
        return VerificationReport(self.check, {**params, **self.params}, self.outcome, self.witness, self.reason, self.elapsed)

    def to_json(self) -> dict:
        return {'check': self.check,
                'params': self.params,
                'outcome': self.outcome.value,
                'witness': self.witness,
                'reason': self.reason}

    def __repr__(self):
        return pformat(self.to_json())


def _labels(index: int, n: int, factors: int, basis_names: Optional[list]) -> list:
    labels = basis_labels(index, n, factors)
    if basis_names is not None:
        return [basis_names[label] for label in labels]

    return list(labels)


def witness_for(lhs: LinearOperator, rhs: LinearOperator, basis_names: Optional[list] = None) -> Optional[dict]:
    """The first differing entry in lexicographic order, decoded into basis tuples."""
    difference = first_difference(lhs, rhs)
    if difference is None:
        return None

    row, col = difference
    factors = lhs.factors
    return {'row': row,
            'col': col,
            'input': _labels(col, lhs.base_dim, factors, basis_names),
            'output': _labels(row, lhs.base_dim, factors, basis_names),
            'lhs': lhs.field.format(lhs.entries[row, col]),
            'rhs': rhs.field.format(rhs.entries[row, col])}


def compare(check: str, lhs: LinearOperator, rhs: LinearOperator, params: Optional[dict] = None,
            basis_names: Optional[list] = None, started: Optional[float] = None) -> VerificationReport:
    witness = witness_for(lhs, rhs, basis_names)
    elapsed = time.time() - started if started is not None else 0.0

    return VerificationReport(check, params or {}, Outcome.HOLDS if witness is None else Outcome.FAILS, witness,
                              elapsed=elapsed)


def _require_square(r: LinearOperator):
    assert(isinstance(r, LinearOperator))
    if r.dim != r.base_dim ** 2:
        raise BadDimension(f"Operator of dimension {r.dim} does not act on V (x) V with dim V = {r.base_dim}")


def _require_same(*operators: LinearOperator):
    for operator in operators[1:]:
        if operator.dim != operators[0].dim or operator.base_dim != operators[0].base_dim:
            raise DimMismatch(f"Operators of dimension {operators[0].dim} and {operator.dim} cannot be combined")


def braid_sides(r: LinearOperator):
    r12, r23 = lift(r, '12'), lift(r, '23')
    return r12 @ r23 @ r12, r23 @ r12 @ r23


def check_braid(r: LinearOperator, params: Optional[dict] = None, basis_names: Optional[list] = None) -> VerificationReport:
    """R12 R23 R12 = R23 R12 R23."""
    _require_square(r)
    started = time.time()
    lhs, rhs = braid_sides(r)

    return compare('braid', lhs, rhs, params, basis_names, started)


def yb_sides(r: LinearOperator, s: LinearOperator, t: LinearOperator):
    r12, s13, t23 = lift(r, '12'), lift(s, '13'), lift(t, '23')
    return r12 @ s13 @ t23, t23 @ s13 @ r12


def check_qybe(r: LinearOperator, params: Optional[dict] = None, basis_names: Optional[list] = None) -> VerificationReport:
    """R12 R13 R23 = R23 R13 R12."""
    _require_square(r)
    started = time.time()
    lhs, rhs = yb_sides(r, r, r)

    return compare('qybe', lhs, rhs, params, basis_names, started)


def yb_commutator(r: LinearOperator, s: LinearOperator, t: LinearOperator) -> LinearOperator:
    """[R, S, T] = R12 S13 T23 - T23 S13 R12."""
    for operator in (r, s, t):
        _require_square(operator)
    _require_same(r, s, t)

    lhs, rhs = yb_sides(r, s, t)
    return lhs - rhs


def check_yb_commutator_zero(r: LinearOperator, params: Optional[dict] = None,
                             basis_names: Optional[list] = None) -> VerificationReport:
    started = time.time()
    value = yb_commutator(r, r, r)

    return compare('yb-commutator', value, zero_operator(r.field, value.dim, r.base_dim), params, basis_names, started)


def check_colored_qybe(family: ColoredFamily, u, v, w, params: Optional[dict] = None,
                       basis_names: Optional[list] = None, check: str = 'colored-qybe') -> VerificationReport:
    """R12(u,v) R13(u,w) R23(v,w) = R23(v,w) R13(u,w) R12(u,v)."""
    assert(isinstance(family, ColoredFamily))
    started = time.time()
    field = family.field
    lhs, rhs = yb_sides(family(u, v), family(u, w), family(v, w))

    colors = {'u': field.format(field.coerce(u)), 'v': field.format(field.coerce(v)), 'w': field.format(field.coerce(w))}
    return compare(check, lhs, rhs, {**(params or {}), **colors}, basis_names, started)


def check_colored_suite(family: ColoredFamily, params: Optional[dict] = None,
                        basis_names: Optional[list] = None) -> List[VerificationReport]:
    """Every ordered color triple over the family's color set, in lexicographic order."""
    return [check_colored_qybe(family, u, v, w, params, basis_names)
            for u, v, w in itertools.product(family.colors, repeat=3)]


def check_one_param(family: ColoredFamily, s1, s2, s3, params: Optional[dict] = None,
                    basis_names: Optional[list] = None) -> VerificationReport:
    """S12(s1/s2) S13(s1/s3) S23(s2/s3) = S23(s2/s3) S13(s1/s3) S12(s1/s2)."""
    if any(not family.field.coerce(s) for s in (s1, s2, s3)):
        raise BadParameter("Spectral parameters s1, s2, s3 must be nonzero")

    report = check_colored_qybe(family, s1, s2, s3, params, basis_names, check='one-param')
    field = family.field
    report.params = {**(params or {}), 's1': field.format(field.coerce(s1)), 's2': field.format(field.coerce(s2)),
                     's3': field.format(field.coerce(s3))}

    return report


WXZ_CONDITIONS = ('WWW', 'ZZZ', 'WXX', 'XXZ')


def check_wxz(w: LinearOperator, x: LinearOperator, z: LinearOperator, params: Optional[dict] = None,
              basis_names: Optional[list] = None) -> VerificationReport:
    """[W,W,W] = [Z,Z,Z] = [W,X,X] = [X,X,Z] = 0."""
    _require_same(w, x, z)
    started = time.time()
    operators = {'W': w, 'X': x, 'Z': z}

    for condition in WXZ_CONDITIONS:
        r, s, t = (operators[name] for name in condition)
        lhs, rhs = yb_sides(r, s, t)
        report = compare('wxz', lhs, rhs, params, basis_names, started)
        if report.fails:
            report.witness['condition'] = f"[{','.join(condition)}]"
            return report

    return VerificationReport('wxz', params or {}, Outcome.HOLDS, elapsed=time.time() - started)


def classical_sides(r: LinearOperator):
    r12, r13, r23 = lift(r, '12'), lift(r, '13'), lift(r, '23')
    return r12 @ r13 + r12 @ r23 + r13 @ r23, r13 @ r12 + r23 @ r12 + r23 @ r13


def check_classical(r: LinearOperator, params: Optional[dict] = None, basis_names: Optional[list] = None) -> VerificationReport:
    """[r12, r13] + [r12, r23] + [r13, r23] = 0."""
    _require_square(r)
    started = time.time()
    lhs, rhs = classical_sides(r)

    return compare('classical', lhs, rhs, params, basis_names, started)


def check_inverse_pair(r: LinearOperator, r_inverse: LinearOperator, params: Optional[dict] = None,
                       basis_names: Optional[list] = None) -> VerificationReport:
    _require_same(r, r_inverse)
    started = time.time()
    eye = identity(r.field, r.dim, r.base_dim)

    report = compare('inverse', r @ r_inverse, eye, params, basis_names, started)
    if report.holds:
        report = compare('inverse', r_inverse @ r, eye, params, basis_names, started)

    return report


def check_invertible(r: LinearOperator, params: Optional[dict] = None) -> VerificationReport:
    started = time.time()
    try:
        invert(r)
    except Singular as error:
        return VerificationReport('invertible', params or {}, Outcome.FAILS,
                                  {'kernel': [r.field.format(value) for value in error.certificate]},
                                  elapsed=time.time() - started)

    return VerificationReport('invertible', params or {}, Outcome.HOLDS, elapsed=time.time() - started)


def check_twist_equivalence(r: LinearOperator, params: Optional[dict] = None) -> VerificationReport:
    """braid(R), qybe(R o tau) and qybe(tau o R) agree."""
    _require_square(r)
    started = time.time()
    tau = twist(r.base_dim, r.field)

    outcomes = {'braid': check_braid(r).outcome.value,
                'qybe_r_tau': check_qybe(r @ tau).outcome.value,
                'qybe_tau_r': check_qybe(tau @ r).outcome.value}
    params = {**(params or {}), **outcomes}
    elapsed = time.time() - started

    if len(set(outcomes.values())) == 1:
        return VerificationReport('twist-equivalence', params, Outcome.HOLDS, elapsed=elapsed)

    return VerificationReport('twist-equivalence', params, Outcome.FAILS, outcomes, elapsed=elapsed)
