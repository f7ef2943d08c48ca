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
from hypothesis import given, settings, strategies as st

from yang_baxter_ops.errors import FieldMismatch, ParseError, WrongFieldKind, BadParameter
from yang_baxter_ops.numeric import RATIONALS, Cyclotomic, PrimeField, field_arithmetic, root_of_unity, \
    root_of_unity_of_order, parse_rational, format_rational, field_from_json, field_for_exponent, scalar_format

fractions = st.fractions(max_denominator=50).filter(lambda value: abs(value) < 1000)


def test_rational_division():
    # then
    assert field_arithmetic(Fraction(1), Fraction(2), 'div') == Fraction(1, 2)


def test_rational_division_by_zero():
    # then
    with pytest.raises(ZeroDivisionError):
        field_arithmetic(Fraction(1), Fraction(0), 'div')


def test_zeta4_squared_is_minus_one():
    # given
    field = Cyclotomic(4)
    zeta = root_of_unity(field, 1)

    # then
    assert field_arithmetic(zeta, zeta, 'mul') == -1


def test_inverse_of_one_plus_zeta3():
    # given
    field = Cyclotomic(3)
    zeta = root_of_unity(field, 1)

    # when
    result = field_arithmetic(field.one(), field.one() + zeta, 'div')

    # then
    assert result == -zeta


def test_mixed_fields_are_rejected():
    # then
    with pytest.raises(FieldMismatch):
        field_arithmetic(Fraction(1), Cyclotomic(4).one(), 'add')

    with pytest.raises(FieldMismatch):
        Cyclotomic(4).one() + Cyclotomic(3).one()


def test_root_of_unity_order():
    # given
    field = Cyclotomic(6)

    # then
    assert root_of_unity(field, 0) == 1
    assert root_of_unity(field, 2) ** 3 == 1
    assert root_of_unity(field, 2) != 1
    assert root_of_unity(field, 3) == -1
    assert root_of_unity(field, 6) == 1


def test_root_of_unity_needs_cyclotomic_field():
    # then
    with pytest.raises(WrongFieldKind):
        root_of_unity(RATIONALS, 1)

    with pytest.raises(WrongFieldKind):
        root_of_unity(PrimeField(5), 1)


def test_root_of_unity_of_order_reduces_to_available_roots():
    # then
    assert root_of_unity_of_order(RATIONALS, 2, 4) == -1
    assert root_of_unity_of_order(RATIONALS, 4, 4) == 1
    assert root_of_unity_of_order(Cyclotomic(8), 1, 4) == Cyclotomic(8).zeta(2)

    with pytest.raises(WrongFieldKind):
        root_of_unity_of_order(RATIONALS, 1, 4)


def test_cyclotomic_parse_and_format():
    # given
    field = Cyclotomic(4)

    # when
    value = field.parse("[1/2,-3]")

    # then
    assert value.coefficients == (Fraction(1, 2), Fraction(-3))
    assert field.format(value) == "[1/2,-3]"
    assert field.parse("5") == 5


def test_parse_error_carries_position():
    # then
    with pytest.raises(ParseError) as error:
        parse_rational("12x")
    assert error.value.position == 2

    with pytest.raises(ParseError) as error:
        Cyclotomic(4).parse("[1,2/]")
    assert error.value.position == 5


def test_parse_rational_rejects_zero_denominator():
    # then
    with pytest.raises(ParseError):
        parse_rational("3/0")


def test_format_rational():
    # then
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(-7)) == "-7"


def test_prime_field_arithmetic():
    # given
    field = PrimeField(7)

    # then
    assert field.coerce(3) * field.coerce(5) == 1
    assert field.coerce(3) / field.coerce(5) == 2
    assert field.coerce(Fraction(1, 2)) == 4
    assert field.format(field.coerce(-1)) == "6"

    with pytest.raises(ZeroDivisionError):
        field.one() / field.zero()


def test_prime_field_needs_prime():
    # then
    with pytest.raises(BadParameter):
        PrimeField(9)


def test_cyclotomic_needs_order_two_or_more():
    # then
    with pytest.raises(BadParameter):
        Cyclotomic(1)


def test_field_descriptions():
    # then
    assert field_from_json({'kind': 'rationals'}) == RATIONALS
    assert field_from_json({'kind': 'cyclotomic', 'order': 12}) == Cyclotomic(12)
    assert field_from_json({'kind': 'prime', 'p': 3}) == PrimeField(3)
    assert field_for_exponent(2) == RATIONALS
    assert field_for_exponent(4) == Cyclotomic(4)

    with pytest.raises(WrongFieldKind):
        field_from_json({'kind': 'reals'})


def test_scalar_format_uses_the_value_field():
    # then
    assert scalar_format(Fraction(2, 3)) == "2/3"
    assert scalar_format(Cyclotomic(3).zeta(1)) == "[0,1]"


@given(fractions, fractions, fractions)
def test_cyclotomic_field_axioms(a, b, c):
    # given
    field = Cyclotomic(5)
    zeta = field.zeta(1)
    x, y, w = a + b * zeta, b - c * zeta ** 2, c + a * zeta ** 3

    # then
    assert (x + y) * w == x * w + y * w
    assert (x * y) * w == x * (y * w)
    if y:
        assert (x / y) * y == x


@given(st.integers(min_value=0, max_value=10 ** 6), st.integers(min_value=1, max_value=10 ** 6))
def test_prime_field_inverse(a, b):
    # given
    field = PrimeField(101)
    x, y = field.coerce(a), field.coerce(b)

    # then
    if y:
        assert (x / y) * y == x
        assert y ** -1 * y == 1


@given(fractions)
def test_rational_round_trip_through_text(value):
    # then
    assert RATIONALS.parse(RATIONALS.format(value)) == value


cyclotomic_orders = st.integers(min_value=2, max_value=36)
primes = st.sampled_from([2, 3, 5, 7, 11, 101, 65537])


@st.composite
def cyclotomic_numbers(draw):
    field = Cyclotomic(draw(cyclotomic_orders))
    coefficients = draw(st.lists(fractions, min_size=field.degree, max_size=field.degree))
    return field, field.parse("[" + ",".join(map(format_rational, coefficients)) + "]")


@settings(deadline=None)
@given(cyclotomic_numbers())
def test_cyclotomic_round_trip_through_text(number):
    # given
    field, value = number

    # then
    assert field.parse(field.format(value)) == value


@given(primes, st.integers(min_value=-10 ** 9, max_value=10 ** 9))
def test_residue_round_trip_through_text(p, value):
    # given
    field = PrimeField(p)
    residue = field.coerce(value)

    # then
    assert field.parse(field.format(residue)) == residue


@settings(deadline=None)
@given(cyclotomic_orders)
def test_root_of_unity_is_a_root_of_the_cyclotomic_polynomial(m):
    # given
    field = Cyclotomic(m)
    zeta = root_of_unity(field, 1)

    # when
    value = field.zero()
    for power, coefficient in enumerate(field.modulus):
        value = value + coefficient * zeta ** power

    # then
    assert zeta ** m == 1
    assert not value
    assert all(zeta ** k != 1 for k in range(1, m))
