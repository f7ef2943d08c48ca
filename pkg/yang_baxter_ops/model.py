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
import math
from functools import reduce
from pprint import pformat
from typing import List, Optional, Tuple

import numpy as np

from yang_baxter_ops.errors import UnknownName, BadDimension
from yang_baxter_ops.numeric import ScalarField, root_of_unity_of_order


def structure_tensor(field: ScalarField, dim: int, entries: Optional[dict] = None) -> np.ndarray:
    """N x N x N object array; `entries` maps (i, j) to the coordinates of e_i * e_j."""
    tensor = np.full((dim, dim, dim), field.zero(), dtype=object)
    for (i, j), coords in (entries or {}).items():
        for k, value in enumerate(coords):
            tensor[i, j, k] = field.coerce(value)

    return tensor


class Structure:
    kind = None

    def __init__(self, field: ScalarField, constants: np.ndarray, basis_names: List[str], name: str):
        assert(isinstance(field, ScalarField))
        assert(isinstance(constants, np.ndarray))
        assert(isinstance(basis_names, list))
        assert(isinstance(name, str))

        if constants.shape != (len(basis_names),) * 3:
            raise BadDimension(f"Structure constants of shape {constants.shape} do not match {len(basis_names)} basis vectors")

        self.field = field
        self.constants = constants
        self.basis_names = basis_names
        self.name = name

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def index(self, basis_name: str) -> int:
        if basis_name not in self.basis_names:
            raise UnknownName(f"'{basis_name}' is not a basis vector of {self.name}")

        return self.basis_names.index(basis_name)

    def basis_vector(self, basis_name: str) -> list:
        index = self.index(basis_name)
        return [self.field.one() if i == index else self.field.zero() for i in range(self.dim)]

    def product(self, i: int, j: int) -> np.ndarray:
        return self.constants[i, j]

    def product_of_vectors(self, x, y) -> np.ndarray:
        """Bilinear extension of the basis products to coordinate vectors."""
        result = np.full(self.dim, self.field.zero(), dtype=object)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        result = result + self.constants[i, j] * (a * b)

        return result

    def __repr__(self):
        return f"{type(self).__name__}({self.name}, dim={self.dim}, field={self.field.name()})"


class AssociativeAlgebra(Structure):
    kind = 'associative'

    def __init__(self, field: ScalarField, mult: np.ndarray, unit: list, basis_names: List[str], name: str):
        super().__init__(field, mult, basis_names, name)
        assert(len(unit) == self.dim)

        self.unit = [field.coerce(value) for value in unit]

    @property
    def mult(self) -> np.ndarray:
        return self.constants


class LieSuperalgebra(Structure):
    """Z_2-graded algebra with super antisymmetric bracket; a Lie algebra when every grade is 0."""

    kind = 'super'

    def __init__(self, field: ScalarField, bracket: np.ndarray, grades: List[int], basis_names: List[str], name: str):
        super().__init__(field, bracket, basis_names, name)
        assert(len(grades) == self.dim)
        assert(all(grade in (0, 1) for grade in grades))

        self.grades = list(grades)

    @property
    def bracket(self) -> np.ndarray:
        return self.constants

    def is_purely_even(self) -> bool:
        return not any(self.grades)

    def sign(self, i: int, j: int) -> int:
        return -1 if self.grades[i] and self.grades[j] else 1


class FiniteAbelianGroup:
    def __init__(self, orders: List[int]):
        assert(isinstance(orders, list))
        if any(order < 1 for order in orders):
            raise BadDimension(f"Cyclic orders must be positive, got {orders}")

        self.orders = list(orders)

    @property
    def exponent(self) -> int:
        return reduce(lambda a, b: a * b // math.gcd(a, b), self.orders, 1)

    @property
    def rank(self) -> int:
        return len(self.orders)

    def identity(self) -> Tuple[int, ...]:
        return (0,) * self.rank

    def normalize(self, element) -> Tuple[int, ...]:
        assert(len(element) == self.rank)
        return tuple(int(a) % n for a, n in zip(element, self.orders))

    def add(self, a, b) -> Tuple[int, ...]:
        return self.normalize([x + y for x, y in zip(a, b)])

    def generators(self) -> List[Tuple[int, ...]]:
        return [tuple(1 if i == j else 0 for i in range(self.rank)) for j in range(self.rank)]

    def elements(self) -> List[Tuple[int, ...]]:
        return list(itertools.product(*[range(order) for order in self.orders]))

    def __eq__(self, other):
        return isinstance(other, FiniteAbelianGroup) and other.orders == self.orders

    def __repr__(self):
        return " x ".join(f"Z_{order}" for order in self.orders) or "Z_1"


class ColorFunction:
    """theta(a, b) = zeta_e^(a^T t b), e the exponent of the group."""

    def __init__(self, group: FiniteAbelianGroup, exponents: List[List[int]], field: ScalarField):
        assert(isinstance(group, FiniteAbelianGroup))
        assert(isinstance(field, ScalarField))
        if len(exponents) != group.rank or any(len(row) != group.rank for row in exponents):
            raise BadDimension(f"Exponent matrix must be {group.rank} x {group.rank}")

        self.group = group
        self.exponents = np.array(exponents, dtype=np.int64).reshape(group.rank, group.rank) % max(group.exponent, 1)
        self.field = field

    def exponent_of(self, a, b) -> int:
        e = self.group.exponent
        return int(np.asarray(a, dtype=np.int64) @ self.exponents @ np.asarray(b, dtype=np.int64)) % e if e > 1 else 0

    def __call__(self, a, b):
        return root_of_unity_of_order(self.field, self.exponent_of(a, b), self.group.exponent)

    def __repr__(self):
        return pformat({'group': repr(self.group), 'exponents': self.exponents.tolist()})


class GThetaLieAlgebra(Structure):
    kind = 'gtheta'

    def __init__(self, field: ScalarField, bracket: np.ndarray, grades: List[tuple], theta: ColorFunction,
                 basis_names: List[str], name: str):
        super().__init__(field, bracket, basis_names, name)
        assert(isinstance(theta, ColorFunction))
        assert(len(grades) == self.dim)

        self.theta = theta
        self.group = theta.group
        self.grades = [self.group.normalize(grade) for grade in grades]

    @property
    def bracket(self) -> np.ndarray:
        return self.constants

    def theta_of_basis(self, i: int, j: int):
        return self.theta(self.grades[i], self.grades[j])


class ValidationReport:
    def __init__(self, structure: str, check: str, valid: bool, witness: Optional[tuple] = None, message: Optional[str] = None):
        assert(isinstance(structure, str))
        assert(isinstance(check, str))
        assert(isinstance(valid, bool))

        self.structure = structure
        self.check = check
        self.valid = valid
        self.witness = witness
        self.message = message

    def __bool__(self):
        return self.valid

    def __repr__(self):
        return pformat(vars(self))
