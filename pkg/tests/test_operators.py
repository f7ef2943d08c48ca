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

from fractions import Fraction

import pytest

from yang_baxter_ops.catalog import dual_numbers, m2, poly3, heisenberg3, sl2, gl2, super_d2, gtheta_z4z4, gtheta_bad
from yang_baxter_ops.errors import DimTooSmall, InvalidCase, BadParameter, NotInvertibleParams, HypothesisViolated, \
    NotEvenCentral, NotCentral, InhomogeneousZ, UnknownColor
from yang_baxter_ops.model import AssociativeAlgebra, GThetaLieAlgebra, ColorFunction, FiniteAbelianGroup, \
    structure_tensor
from yang_baxter_ops.numeric import RATIONALS, PrimeField
from yang_baxter_ops.operators import DnCase, build_dn, dn_case, dn_inverse, build_dim2_canonical, \
    dim2_canonical_members, build_colored, colored_inverse, colored_family, build_one_param, one_param_inverse, \
    one_param_family, build_wxz_algebra, wxz_from_colored, ParamTable, build_super_phi, super_phi_inverse, \
    build_super_phi_ab, super_phi_ab_inverse, build_super_colored, super_colored_family, gtheta_condition, \
    build_gtheta, gtheta_inverse, build_classical_r, build_split
from yang_baxter_ops.tensor import identity, twist
from yang_baxter_ops.verify import check_braid, check_qybe, check_inverse_pair, check_colored_suite, check_one_param, \
    check_wxz, check_classical, check_invertible

ONE_DIMENSIONAL = AssociativeAlgebra(RATIONALS, structure_tensor(RATIONALS, 1, {(0, 0): [1]}), [1], ['1'], 'k')


@pytest.mark.parametrize("alpha, beta, gamma, case", [(1, 1, 1, DnCase.CASE_I),
                                                      (2, 3, 2, DnCase.CASE_I),
                                                      (5, 2, 2, DnCase.CASE_II),
                                                      (0, 0, 3, DnCase.CASE_III),
                                                      (1, 2, 3, DnCase.INVALID),
                                                      (0, 0, 0, DnCase.INVALID),
                                                      (1, 0, 1, DnCase.INVALID)])
def test_dn_case_classification(alpha, beta, gamma, case):
    # then
    assert dn_case(alpha, beta, gamma) == case


def test_dn_operator_on_dual_numbers():
    # given
    algebra = dual_numbers()

    # when
    r = build_dn(algebra, 1, 2, 3)

    # then
    # x (x) x -> -3 x (x) x, since x x = 0
    assert r.column(3) == {3: -3}
    # 1 (x) x -> x (x) 1 + 2 (1 (x) x) - 3 (1 (x) x)
    assert r.column(1) == {2: 1, 1: -1}


@pytest.mark.parametrize("algebra", [dual_numbers(), m2(), poly3()])
@pytest.mark.parametrize("alpha, beta, gamma", [(1, 1, 1), (2, Fraction(1, 3), 2), (Fraction(-1, 2), 5, 5), (0, 0, 7)])
def test_dn_operators_satisfy_braid_relation_and_invert(algebra, alpha, beta, gamma):
    # when
    r = build_dn(algebra, alpha, beta, gamma)
    r_inverse = dn_inverse(algebra, alpha, beta, gamma)

    # then
    assert check_braid(r).holds
    assert check_inverse_pair(r, r_inverse).holds


def test_dn_inverse_outside_the_cases():
    # then
    with pytest.raises(InvalidCase):
        dn_inverse(dual_numbers(), 1, 2, 3)


def test_dn_needs_two_dimensions():
    # then
    with pytest.raises(DimTooSmall):
        build_dn(ONE_DIMENSIONAL, 1, 1, 1)


@pytest.mark.parametrize("q", [1, 2, -1, Fraction(1, 3)])
@pytest.mark.parametrize("eta", [0, 1])
def test_dim2_canonical_family(q, eta):
    # when
    r = build_dim2_canonical(q, eta)

    # then
    assert check_qybe(r).holds
    assert check_invertible(r).holds


def test_dim2_canonical_parameters_are_checked():
    # then
    with pytest.raises(BadParameter):
        build_dim2_canonical(0, 1)

    with pytest.raises(BadParameter):
        build_dim2_canonical(2, 2)


def test_dim2_canonical_members_over_f3():
    # when
    members = dim2_canonical_members(PrimeField(3))

    # then
    assert len(members) == 4
    assert all(check_qybe(member).holds for member in members)


@pytest.mark.parametrize("p, q", [(1, 2), (3, 5)])
def test_colored_operators_satisfy_colored_qybe(p, q):
    # given
    family = colored_family(dual_numbers(), p, q, [0, 1, 2])

    # when
    reports = check_colored_suite(family)

    # then
    assert len(reports) == 27
    assert all(report.holds for report in reports)


def test_colored_operators_on_m2():
    # given
    family = colored_family(m2(), 1, 2, [1, 3])

    # then
    assert all(report.holds for report in check_colored_suite(family))


def test_colored_inverse():
    # given
    algebra = dual_numbers()

    # when
    r = build_colored(algebra, 1, 2, 1, 0)
    r_inverse = colored_inverse(algebra, 1, 2, 1, 0)

    # then
    assert check_inverse_pair(r, r_inverse).holds


def test_colored_operator_at_equal_colors_is_a_scaled_twist():
    # when
    r = build_colored(dual_numbers(), 1, 2, 3, 3)

    # then
    assert r == twist(2, RATIONALS).scaled(3)


def test_colored_inverse_needs_invertible_parameters():
    # then
    with pytest.raises(NotInvertibleParams):
        colored_inverse(dual_numbers(), 1, 2, 2, 1)

    with pytest.raises(NotInvertibleParams):
        colored_inverse(dual_numbers(), 1, 1, 1, 1)


def test_one_param_operator_satisfies_spectral_qybe():
    # given
    family = one_param_family(dual_numbers(), 2, [6, 3, 1])

    # when
    report = check_one_param(family, 6, 3, 1)

    # then
    assert report.holds
    assert report.params == {'s1': '6', 's2': '3', 's3': '1'}


def test_one_param_spectral_parameters_must_be_nonzero():
    # given
    family = one_param_family(dual_numbers(), 2, [1, 2])

    # then
    with pytest.raises(BadParameter):
        check_one_param(family, 0, 1, 2)

    with pytest.raises(BadParameter):
        build_one_param(dual_numbers(), 2, 0)


def test_one_param_inverse_and_its_boundary():
    # given
    algebra = dual_numbers()

    # then
    assert check_inverse_pair(build_one_param(algebra, 2, 3), one_param_inverse(algebra, 2, 3)).holds

    for s in (2, Fraction(1, 2)):
        with pytest.raises(NotInvertibleParams) as error:
            one_param_inverse(algebra, 2, s)
        assert "non-invertible boundary" in str(error.value)


@pytest.mark.parametrize("algebra", [dual_numbers(), m2()])
@pytest.mark.parametrize("lam, mu", [(2, 3), (0, 1), (Fraction(1, 2), -4)])
def test_wxz_system_from_an_algebra(algebra, lam, mu):
    # when
    w, x, z = build_wxz_algebra(algebra, lam, mu)

    # then
    assert check_wxz(w, x, z).holds


def test_wxz_system_from_colored_operators():
    # given
    family = colored_family(dual_numbers(), 1, 3, [1, 2])

    # when
    w, x, z = wxz_from_colored(family, 1, 2)

    # then
    assert check_wxz(w, x, z).holds
    assert x == family(1, 2)


def test_split_operator_satisfies_qybe():
    # given
    f = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
    f[0][0] = [1, 0]
    g = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
    g[0][0] = [2, 0]

    # when
    r = build_split(2, 1, f, g)

    # then
    assert r.column(0) == {0 * 2 + 1: 1, 1 * 2 + 0: 2}
    assert check_qybe(r).holds


def test_split_operator_hypothesis():
    # given
    f = [[[0, 0], [0, 1]], [[0, 0], [0, 0]]]
    g = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]

    # then
    with pytest.raises(HypothesisViolated):
        build_split(2, 1, f, g)

    with pytest.raises(BadParameter):
        build_split(2, 2, g, g)


@pytest.mark.parametrize("alpha", [0, 1, 5, Fraction(-1, 2)])
def test_super_phi_on_super_d2(alpha):
    # given
    algebra = super_d2()

    # when
    r = build_super_phi(algebra, [0, 1], alpha)

    # then
    assert check_braid(r).holds
    assert check_inverse_pair(r, super_phi_inverse(algebra, [0, 1], alpha)).holds


def test_super_phi_swaps_odd_vectors_with_a_sign():
    # when
    r = build_super_phi(super_d2(), [0, 1], 0)

    # then
    # u (x) u -> -u (x) u
    assert r.column(0) == {0: -1}
    # u (x) z -> z (x) u
    assert r.column(1) == {2: 1}


@pytest.mark.parametrize("alpha, beta", [(1, 1), (5, 2), (Fraction(1, 3), -1)])
def test_super_phi_ab_on_heisenberg_algebra(alpha, beta):
    # given
    algebra = heisenberg3()

    # when
    r = build_super_phi_ab(algebra, [0, 0, 1], alpha, beta)

    # then
    assert check_braid(r).holds
    assert check_inverse_pair(r, super_phi_ab_inverse(algebra, [0, 0, 1], alpha, beta)).holds


def test_super_phi_needs_an_even_central_z():
    # then
    with pytest.raises(NotEvenCentral):
        build_super_phi(super_d2(), [1, 0], 1)

    with pytest.raises(NotEvenCentral):
        build_super_phi(sl2(), [0, 0, 1], 1)

    with pytest.raises(BadParameter):
        build_super_phi_ab(heisenberg3(), [0, 0, 1], 1, 0)


def test_super_colored_operators_with_compatible_tables():
    # given
    table = ParamTable(RATIONALS, [1, 2, 3], ParamTable.second({1: 1, 2: 2, 3: 3}), ParamTable.constant(1))
    family = super_colored_family(super_d2(), [0, 1], table)

    # when
    reports = check_colored_suite(family)

    # then
    assert table.constraint_violation() is None
    assert all(report.holds for report in reports)


def test_super_colored_operator_entries():
    # given
    table = ParamTable(RATIONALS, [1, 2], ParamTable.constant(3), ParamTable.constant(2))

    # when
    r = build_super_colored(super_d2(), [0, 1], table, 1, 2)

    # then
    # u (x) u -> 3 z (x) z - 2 u (x) u
    assert r.column(0) == {3: 3, 0: -2}


def test_constraint_violation_witness():
    # given
    table = ParamTable(RATIONALS, [1, 2, 3], ParamTable.constant(1), ParamTable.first({1: 1, 2: 2, 3: 3}))

    # then
    assert table.constraint_violation() == (1, 2, 1)
    assert build_super_colored(gl2(), [0, 0, 0, 1], table, 1, 2).dim == 16


def test_param_table_rejects_unknown_colors():
    # given
    table = ParamTable(RATIONALS, [1, 2], ParamTable.constant(1), ParamTable.constant(1))

    # then
    with pytest.raises(UnknownColor):
        table.alpha(4, 1)

    with pytest.raises(BadParameter):
        ParamTable(RATIONALS, [1, 1], ParamTable.constant(1), ParamTable.constant(1))


@pytest.mark.parametrize("alpha", [0, 1, [0, 1]])
def test_gtheta_operator_on_z4z4(alpha):
    # given
    algebra = gtheta_z4z4()
    alpha = algebra.field.parse(str(alpha).replace(' ', ''))
    z = [0, 0, 0, 0, 1]

    # when
    r = build_gtheta(algebra, z, alpha)

    # then
    assert gtheta_condition(algebra, z)
    assert check_qybe(r).holds
    assert check_inverse_pair(r, gtheta_inverse(algebra, z, alpha)).holds


def test_gtheta_operator_with_odd_central_element_fails():
    # given
    algebra = gtheta_bad()
    z = [0, 0, 1]

    # when
    r = build_gtheta(algebra, z, 1)

    # then
    assert not gtheta_condition(algebra, z)
    assert check_qybe(r).fails


def test_gtheta_needs_central_homogeneous_z():
    # given
    theta = ColorFunction(FiniteAbelianGroup([2]), [[0]], RATIONALS)
    abelian = GThetaLieAlgebra(RATIONALS, structure_tensor(RATIONALS, 2), [(0,), (1,)], theta, ['a', 'b'], 'abelian')

    # then
    with pytest.raises(NotCentral):
        build_gtheta(gtheta_z4z4(), [1, 0, 0, 0, 0], 1)

    with pytest.raises(InhomogeneousZ):
        build_gtheta(abelian, [1, 1], 1)


def test_classical_r_matrix_on_heisenberg_algebra():
    # when
    r = build_classical_r(heisenberg3(), [0, 0, 1])

    # then
    assert check_classical(r).holds
    assert check_invertible(r).fails


def test_classical_r_matrix_on_superalgebra_uses_even_part():
    # when
    r = build_classical_r(super_d2(), [0, 1])

    # then
    assert r.dim == 1
    assert check_classical(r).holds


def test_classical_r_matrix_with_non_central_z():
    # then
    with pytest.raises(NotCentral):
        build_classical_r(sl2(), [0, 0, 1])

    assert check_classical(build_classical_r(sl2(), [0, 0, 1], check_center=False)).fails


def test_identity_and_twist_are_solutions():
    # given
    eye = identity(RATIONALS, 4, 2)
    tau = twist(2, RATIONALS)

    # then
    assert check_qybe(eye).holds
    assert check_braid(tau).holds
