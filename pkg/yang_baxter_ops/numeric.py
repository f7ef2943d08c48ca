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

import operator
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional, Tuple

import sympy

from yang_baxter_ops.errors import FieldMismatch, WrongFieldKind, ParseError, BadParameter

DIGITS = '0123456789'

_X = sympy.Symbol('x')


def _scan_digits(text: str, position: int) -> int:
    while position < len(text) and text[position] in DIGITS:
        position += 1
    return position


def parse_rational(text: str, offset: int = 0) -> Fraction:
    """Parses `[-]digits[/digits]` into a Fraction in lowest terms.

    `offset` is added to error positions, so that entries of a cyclotomic vector
    report their position within the whole text.
    """
    assert(isinstance(text, str))

    position = 1 if text.startswith('-') else 0
    end = _scan_digits(text, position)
    if end == position:
        raise ParseError(f"Expected digits in '{text}'", offset + end)

    numerator = int(text[:end])
    if end == len(text):
        return Fraction(numerator)

    if text[end] != '/':
        raise ParseError(f"Unexpected character '{text[end]}' in '{text}'", offset + end)

    denominator_end = _scan_digits(text, end + 1)
    if denominator_end == end + 1:
        raise ParseError(f"Expected denominator digits in '{text}'", offset + end + 1)
    if denominator_end != len(text):
        raise ParseError(f"Unexpected character '{text[denominator_end]}' in '{text}'", offset + denominator_end)

    denominator = int(text[end + 1:])
    if denominator == 0:
        raise ParseError(f"Zero denominator in '{text}'", offset + end + 1)

    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)

    return f"{value.numerator}/{value.denominator}"


class ScalarField:
    kind = None

    def zero(self):
        raise NotImplementedError()

    def one(self):
        raise NotImplementedError()

    def coerce(self, value):
        raise NotImplementedError()

    def parse(self, text: str):
        raise NotImplementedError()

    def format(self, value) -> str:
        raise NotImplementedError()

    def to_json(self) -> dict:
        raise NotImplementedError()

    def contains(self, value) -> bool:
        return field_of(value) == self

    def __repr__(self):
        return self.name()

    def name(self) -> str:
        raise NotImplementedError()


class Rationals(ScalarField):
    kind = 'rationals'

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)

        raise FieldMismatch(f"Cannot use {value!r} as a rational")

    def parse(self, text: str) -> Fraction:
        return parse_rational(text)

    def format(self, value) -> str:
        return format_rational(self.coerce(value))

    def to_json(self) -> dict:
        return {'kind': self.kind}

    def name(self) -> str:
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash(self.kind)


RATIONALS = Rationals()


@lru_cache(maxsize=None)
def cyclotomic_modulus(order: int) -> Tuple[int, ...]:
    """Coefficients of the order-th cyclotomic polynomial, lowest degree first."""
    coefficients = sympy.Poly(sympy.cyclotomic_poly(order, _X), _X).all_coeffs()
    return tuple(int(coefficient) for coefficient in reversed(coefficients))


class Cyclotomic(ScalarField):
    kind = 'cyclotomic'

    def __init__(self, order: int):
        assert(isinstance(order, int))
        if order < 2:
            raise BadParameter(f"Cyclotomic order must be at least 2, got {order}")

        self.order = order
        self.modulus = cyclotomic_modulus(order)
        self.degree = len(self.modulus) - 1
        assert self.degree == int(sympy.totient(order))
        assert self.modulus[-1] == 1

        # x^d = sum(reduction[i] * x^i)
        self.reduction = tuple(-coefficient for coefficient in self.modulus[:-1])
        self._modulus_poly = sympy.Poly(list(reversed(self.modulus)), _X, domain=sympy.QQ)

    def zero(self):
        return CyclotomicNumber(self, (Fraction(0),) * self.degree)

    def one(self):
        return self.embed(1)

    def embed(self, value) -> 'CyclotomicNumber':
        return CyclotomicNumber(self, (Fraction(value),) + (Fraction(0),) * (self.degree - 1))

    def generator(self) -> 'CyclotomicNumber':
        if self.degree == 1:
            return CyclotomicNumber(self, (Fraction(self.reduction[0]),))

        return CyclotomicNumber(self, tuple(Fraction(1 if i == 1 else 0) for i in range(self.degree)))

    def zeta(self, k: int, order: Optional[int] = None) -> 'CyclotomicNumber':
        """Returns zeta_order^k as an element of this field; `order` must divide the field's order."""
        if order is None:
            order = self.order
        if self.order % order != 0:
            raise WrongFieldKind(f"{self.name()} does not contain the primitive {order}-th roots of unity")

        return self.generator() ** ((k * (self.order // order)) % self.order)

    def coerce(self, value):
        if isinstance(value, CyclotomicNumber):
            if value.field != self:
                raise FieldMismatch(f"Element of {value.field.name()} used in {self.name()}")
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return self.embed(value)
        if isinstance(value, str):
            return self.parse(value)

        raise FieldMismatch(f"Cannot use {value!r} in {self.name()}")

    def multiply(self, a: tuple, b: tuple) -> 'CyclotomicNumber':
        degree = self.degree
        product = [Fraction(0)] * (2 * degree - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        product[i + j] += x * y

        for k in range(2 * degree - 2, degree - 1, -1):
            top = product[k]
            if top:
                for i, coefficient in enumerate(self.reduction):
                    if coefficient:
                        product[k - degree + i] += top * coefficient

        return CyclotomicNumber(self, product[:degree])

    def invert(self, number: 'CyclotomicNumber') -> 'CyclotomicNumber':
        if not number:
            raise ZeroDivisionError(f"Division by zero in {self.name()}")

        poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(number.coefficients)],
                          _X, domain=sympy.QQ)
        inverse = poly.invert(self._modulus_poly)
        coefficients = [Fraction(int(c.p), int(c.q)) for c in reversed(inverse.all_coeffs())]
        coefficients += [Fraction(0)] * (self.degree - len(coefficients))

        return CyclotomicNumber(self, coefficients)

    def parse(self, text: str) -> 'CyclotomicNumber':
        assert(isinstance(text, str))
        if not text.startswith('['):
            return self.embed(parse_rational(text))
        if not text.endswith(']'):
            raise ParseError(f"Expected ']' at the end of '{text}'", len(text))

        entries = text[1:-1].split(',')
        if len(entries) != self.degree:
            raise ParseError(f"Expected {self.degree} coefficients in '{text}', got {len(entries)}", 1)

        coefficients = []
        position = 1
        for entry in entries:
            coefficients.append(parse_rational(entry, offset=position))
            position += len(entry) + 1

        return CyclotomicNumber(self, coefficients)

    def format(self, value) -> str:
        value = self.coerce(value)
        return "[" + ",".join(map(format_rational, value.coefficients)) + "]"

    def to_json(self) -> dict:
        return {'kind': self.kind, 'order': self.order}

    def name(self) -> str:
        return f"Q(zeta_{self.order})"

    def __eq__(self, other):
        return isinstance(other, Cyclotomic) and other.order == self.order

    def __hash__(self):
        return hash((self.kind, self.order))


class CyclotomicNumber:
    """Element of Q(zeta_m), stored as coefficients of 1, zeta, ..., zeta^(d-1) reduced mod Phi_m."""

    __slots__ = ('field', 'coefficients')

    def __init__(self, field: Cyclotomic, coefficients):
        assert(isinstance(field, Cyclotomic))
        coefficients = tuple(coefficients)
        assert(len(coefficients) == field.degree)

        self.field = field
        self.coefficients = coefficients

    def _coerce(self, other) -> Optional['CyclotomicNumber']:
        if isinstance(other, CyclotomicNumber):
            if other.field != self.field:
                raise FieldMismatch(f"Cannot combine {self.field.name()} and {other.field.name()}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.embed(other)

        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return CyclotomicNumber(self.field, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return CyclotomicNumber(self.field, tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return other - self

    def __neg__(self):
        return CyclotomicNumber(self.field, tuple(-a for a in self.coefficients))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self or not other:
            return self.field.zero()

        return self.field.multiply(self.coefficients, other.coefficients)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return self * self.field.invert(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return other * self.field.invert(self)

    def __pow__(self, exponent: int):
        assert(isinstance(exponent, int))
        if exponent < 0:
            return self.field.invert(self) ** (-exponent)

        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1

        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return self.coefficients == other.coefficients

    def __hash__(self):
        if not any(self.coefficients[1:]):
            return hash(self.coefficients[0])

        return hash((self.field.order, self.coefficients))

    def __bool__(self):
        return any(self.coefficients)

    def __repr__(self):
        return self.field.format(self)


class PrimeField(ScalarField):
    kind = 'prime'

    def __init__(self, p: int):
        assert(isinstance(p, int))
        if not sympy.isprime(p):
            raise BadParameter(f"{p} is not a prime")

        self.p = p

    def zero(self):
        return Residue(self, 0)

    def one(self):
        return Residue(self, 1)

    def coerce(self, value):
        if isinstance(value, Residue):
            if value.field != self:
                raise FieldMismatch(f"Element of {value.field.name()} used in {self.name()}")
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Residue(self, value % self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in {self.name()}")
            return Residue(self, value.numerator * pow(value.denominator, self.p - 2, self.p) % self.p)
        if isinstance(value, str):
            return self.parse(value)

        raise FieldMismatch(f"Cannot use {value!r} in {self.name()}")

    def parse(self, text: str) -> 'Residue':
        assert(isinstance(text, str))
        end = _scan_digits(text, 0)
        if end == 0:
            raise ParseError(f"Expected a decimal residue in '{text}'", 0)
        if end != len(text):
            raise ParseError(f"Unexpected character '{text[end]}' in '{text}'", end)

        value = int(text)
        if value >= self.p:
            raise ParseError(f"Residue {value} is not below {self.p}", 0)

        return Residue(self, value)

    def format(self, value) -> str:
        return str(self.coerce(value).value)

    def to_json(self) -> dict:
        return {'kind': self.kind, 'p': self.p}

    def name(self) -> str:
        return f"F_{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash((self.kind, self.p))


class Residue:
    __slots__ = ('field', 'value')

    def __init__(self, field: PrimeField, value: int):
        assert(isinstance(field, PrimeField))
        assert(isinstance(value, int))
        assert(0 <= value < field.p)

        self.field = field
        self.value = value

    def _coerce(self, other) -> Optional['Residue']:
        if isinstance(other, Residue):
            if other.field != self.field:
                raise FieldMismatch(f"Cannot combine {self.field.name()} and {other.field.name()}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.coerce(other)

        return None

    def _new(self, value: int) -> 'Residue':
        return Residue(self.field, value % self.field.p)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return self._new(self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return self._new(self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return self._new(other.value - self.value)

    def __neg__(self):
        return self._new(-self.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return self._new(self.value * other.value)

    __rmul__ = __mul__

    def inverse(self) -> 'Residue':
        if self.value == 0:
            raise ZeroDivisionError(f"Division by zero in {self.field.name()}")

        return self._new(pow(self.value, self.field.p - 2, self.field.p))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return other * self.inverse()

    def __pow__(self, exponent: int):
        assert(isinstance(exponent, int))
        if exponent < 0:
            return self.inverse() ** (-exponent)

        return self._new(pow(self.value, exponent, self.field.p))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return self.value == other.value

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return str(self.value)


def field_of(value) -> ScalarField:
    if isinstance(value, Fraction):
        return RATIONALS
    if isinstance(value, (CyclotomicNumber, Residue)):
        return value.field

    raise FieldMismatch(f"{value!r} is not a scalar")


def field_from_json(data: dict) -> ScalarField:
    assert(isinstance(data, dict))

    kind = data.get('kind')
    if kind == Rationals.kind:
        return RATIONALS
    if kind == Cyclotomic.kind:
        return Cyclotomic(int(data['order']))
    if kind == PrimeField.kind:
        return PrimeField(int(data['p']))

    raise WrongFieldKind(f"Unknown field kind '{kind}'")


def field_for_exponent(exponent: int) -> ScalarField:
    """The smallest field of this library holding all exponent-th roots of unity."""
    if exponent <= 2:
        return RATIONALS

    return Cyclotomic(exponent)


def root_of_unity(field: ScalarField, k: int):
    if not isinstance(field, Cyclotomic):
        raise WrongFieldKind(f"{field.name()} is not a cyclotomic field")

    return field.zeta(k)


def root_of_unity_of_order(field: ScalarField, k: int, order: int):
    """zeta_order^k in `field`, provided that power lies in it (Q holds only +1 and -1)."""
    k %= order
    reduced_order = order // gcd(k, order) if k else 1
    reduced_k = k * reduced_order // order

    if reduced_order == 1:
        return field.one()
    if isinstance(field, Cyclotomic) and field.order % reduced_order == 0:
        return field.zeta(reduced_k, order=reduced_order)
    if isinstance(field, (Rationals, Cyclotomic)) and reduced_order == 2:
        return -field.one()

    raise WrongFieldKind(f"{field.name()} does not contain the primitive {reduced_order}-th roots of unity")


OPERATIONS = {
    'add': operator.add,
    'sub': operator.sub,
    'mul': operator.mul,
    'div': operator.truediv,
    'eq': operator.eq
}


def field_arithmetic(a, b, op: str):
    if op == 'neg':
        return -a
    if op not in OPERATIONS:
        raise BadParameter(f"Unknown operation '{op}'")
    if field_of(a) != field_of(b):
        raise FieldMismatch(f"Cannot {op} elements of {field_of(a).name()} and {field_of(b).name()}")

    return OPERATIONS[op](a, b)


def scalar_parse(text: str, field: ScalarField):
    return field.parse(text)


def scalar_format(value) -> str:
    return field_of(value).format(value)
