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

from functools import reduce
from typing import List, Optional, Tuple

import numpy as np

from yang_baxter_ops.errors import BadDimension, DimMismatch, FieldMismatch, Singular
from yang_baxter_ops.numeric import ScalarField, field_from_json

LIFT_POSITIONS = ('12', '13', '23')


def _sparse_rows(matrix: np.ndarray) -> list:
    return [[(k, value) for k, value in enumerate(row) if value] for row in matrix]


def _multiply(a: np.ndarray, b: np.ndarray, zero) -> np.ndarray:
    # only nonzero products are formed
    result = np.full((a.shape[0], b.shape[1]), zero, dtype=object)
    b_rows = _sparse_rows(b)
    for i, row in enumerate(_sparse_rows(a)):
        accumulated = {}
        for j, x in row:
            for k, y in b_rows[j]:
                if k in accumulated:
                    accumulated[k] = accumulated[k] + x * y
                else:
                    accumulated[k] = x * y
        for k, value in accumulated.items():
            result[i, k] = value

    return result


class LinearOperator:
    """Exact D x D matrix of a map on V^{(x)2} or V^{(x)3}, where N = `base_dim` = dim V.

    Entry [row, col] is the coefficient of basis vector `row` in the image of basis vector `col`,
    so composition A o B is the matrix product A @ B. The basis vector v_i (x) v_j has index i*N + j
    and v_i (x) v_j (x) v_k has index i*N^2 + j*N + k.
    """

    def __init__(self, field: ScalarField, entries, base_dim: int):
        assert(isinstance(field, ScalarField))
        assert(isinstance(base_dim, int))

        entries = np.array(entries, dtype=object)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise BadDimension(f"Operator matrix must be square, got shape {entries.shape}")

        self.field = field
        self.dim = entries.shape[0]
        self.base_dim = base_dim
        self.entries = np.array([[field.coerce(value) for value in row] for row in entries], dtype=object) \
            .reshape(self.dim, self.dim)

    @property
    def factors(self) -> int:
        if self.dim == self.base_dim ** 2:
            return 2
        if self.dim == self.base_dim ** 3:
            return 3

        return 1

    def _check_compatible(self, other: 'LinearOperator'):
        assert(isinstance(other, LinearOperator))
        if other.field != self.field:
            raise FieldMismatch(f"Cannot combine operators over {self.field.name()} and {other.field.name()}")
        if other.dim != self.dim:
            raise DimMismatch(f"Cannot combine operators of dimension {self.dim} and {other.dim}")

    def _new(self, entries: np.ndarray) -> 'LinearOperator':
        return LinearOperator(self.field, entries, self.base_dim)

    def __matmul__(self, other: 'LinearOperator') -> 'LinearOperator':
        self._check_compatible(other)
        return self._new(_multiply(self.entries, other.entries, self.field.zero()))

    def __add__(self, other: 'LinearOperator') -> 'LinearOperator':
        self._check_compatible(other)
        return self._new(self.entries + other.entries)

    def __sub__(self, other: 'LinearOperator') -> 'LinearOperator':
        self._check_compatible(other)
        return self._new(self.entries - other.entries)

    def __neg__(self) -> 'LinearOperator':
        return self._new(-self.entries)

    def scaled(self, scalar) -> 'LinearOperator':
        scalar = self.field.coerce(scalar)
        return self._new(np.array([[value * scalar for value in row] for row in self.entries], dtype=object))

    def transpose(self) -> 'LinearOperator':
        return self._new(self.entries.T)

    def column(self, index: int) -> dict:
        """Nonzero coordinates of the image of basis vector `index`."""
        return {row: value for row, value in enumerate(self.entries[:, index]) if value}

    def is_zero(self) -> bool:
        return not any(value for value in self.entries.flat)

    def __eq__(self, other):
        if not isinstance(other, LinearOperator):
            return NotImplemented

        return other.field == self.field and other.dim == self.dim and first_difference(self, other) is None

    def __hash__(self):
        return hash((self.dim, tuple(self.entries.flat)))

    def __repr__(self):
        return f"LinearOperator(dim={self.dim}, base_dim={self.base_dim}, field={self.field.name()})"


def identity(field: ScalarField, dim: int, base_dim: int) -> LinearOperator:
    return diagonal(field, [field.one()] * dim, base_dim)


def zero_operator(field: ScalarField, dim: int, base_dim: int) -> LinearOperator:
    return LinearOperator(field, np.full((dim, dim), field.zero(), dtype=object), base_dim)


def diagonal(field: ScalarField, values: list, base_dim: int) -> LinearOperator:
    entries = np.full((len(values), len(values)), field.zero(), dtype=object)
    for i, value in enumerate(values):
        entries[i, i] = value

    return LinearOperator(field, entries, base_dim)


def from_rows(field: ScalarField, rows: list, base_dim: Optional[int] = None) -> LinearOperator:
    if base_dim is None:
        base_dim = infer_base_dim(len(rows))

    return LinearOperator(field, [[field.coerce(value) for value in row] for row in rows], base_dim)


def infer_base_dim(dim: int) -> int:
    root = int(round(dim ** 0.5))
    if root * root == dim:
        return root

    raise BadDimension(f"Cannot infer the factor dimension of a {dim} x {dim} operator")


def kron(a: LinearOperator, b: LinearOperator) -> LinearOperator:
    """(A (x) B)[i*dimB + j, k*dimB + l] = A[i,k] B[j,l]."""
    assert(isinstance(a, LinearOperator))
    assert(isinstance(b, LinearOperator))
    if a.field != b.field:
        raise FieldMismatch(f"Cannot take the tensor product of operators over {a.field.name()} and {b.field.name()}")

    if a.base_dim != b.base_dim:
        raise DimMismatch(f"Cannot take the tensor product of operators on factors of dimension {a.base_dim} and {b.base_dim}")

    return LinearOperator(a.field, np.kron(a.entries, b.entries), a.base_dim)


def permutation_operator(field: ScalarField, targets: List[int], base_dim: int) -> LinearOperator:
    """Sends basis vector `index` to basis vector `targets[index]`."""
    entries = np.full((len(targets), len(targets)), field.zero(), dtype=object)
    for index, target in enumerate(targets):
        entries[target, index] = field.one()

    return LinearOperator(field, entries, base_dim)


def twist(n: int, field: ScalarField) -> LinearOperator:
    assert(isinstance(n, int))
    if n < 1:
        raise BadDimension(f"Twist needs a positive dimension, got {n}")

    return permutation_operator(field, [j * n + i for i in range(n) for j in range(n)], n)


def swap23_permutation(n: int) -> np.ndarray:
    """Index of v_i (x) v_k (x) v_j for every index of v_i (x) v_j (x) v_k."""
    i, j, k = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing='ij')
    return (i * n * n + k * n + j).reshape(-1)


def lift(r: LinearOperator, position: str) -> LinearOperator:
    assert(isinstance(r, LinearOperator))
    n = r.base_dim
    if r.dim != n * n:
        raise BadDimension(f"Operator of dimension {r.dim} does not act on V (x) V with dim V = {n}")

    eye = np.full((n, n), r.field.zero(), dtype=object)
    for i in range(n):
        eye[i, i] = r.field.one()

    if position == '12':
        return LinearOperator(r.field, np.kron(r.entries, eye), n)
    if position == '23':
        return LinearOperator(r.field, np.kron(eye, r.entries), n)
    if position == '13':
        permutation = swap23_permutation(n)
        r12 = np.kron(r.entries, eye)
        return LinearOperator(r.field, r12[permutation][:, permutation], n)

    raise BadDimension(f"Unknown lift position '{position}', expected one of {', '.join(LIFT_POSITIONS)}")


def compose_chain(operators: List[LinearOperator]) -> LinearOperator:
    """[A, B, C] is A o B o C."""
    assert(isinstance(operators, list))
    if not operators:
        raise DimMismatch("Cannot compose an empty chain")

    for operator in operators[1:]:
        if operator.dim != operators[0].dim:
            raise DimMismatch(f"Cannot compose operators of dimension {operators[0].dim} and {operator.dim}")

    return reduce(lambda a, b: a @ b, operators)


def commutator(a: LinearOperator, b: LinearOperator) -> LinearOperator:
    return a @ b - b @ a


def first_difference(a: LinearOperator, b: LinearOperator) -> Optional[Tuple[int, int]]:
    """First (row, col) in lexicographic order where the two matrices differ."""
    if a.dim != b.dim:
        raise DimMismatch(f"Cannot compare operators of dimension {a.dim} and {b.dim}")

    for row in range(a.dim):
        for col in range(a.dim):
            if a.entries[row, col] != b.entries[row, col]:
                return row, col

    return None


def basis_labels(index: int, n: int, factors: int) -> Tuple[int, ...]:
    """Decodes a flat tensor basis index into the tuple of factor indices."""
    labels = []
    for _ in range(factors):
        labels.append(index % n)
        index //= n

    return tuple(reversed(labels))


def row_reduce(field: ScalarField, rows: list) -> Tuple[list, list]:
    """Reduced row echelon form and the list of pivot columns."""
    matrix = [[field.coerce(value) for value in row] for row in rows]
    if not matrix:
        return [], []

    n_rows, n_cols = len(matrix), len(matrix[0])
    pivots = []
    pivot_row = 0
    for pivot_col in range(n_cols):
        for i_row in range(pivot_row, n_rows):
            if matrix[i_row][pivot_col]:
                break
        else:
            continue

        matrix[pivot_row], matrix[i_row] = matrix[i_row], matrix[pivot_row]
        pivot = matrix[pivot_row][pivot_col]
        matrix[pivot_row] = [value / pivot for value in matrix[pivot_row]]
        for r in range(n_rows):
            factor = matrix[r][pivot_col]
            if r != pivot_row and factor:
                matrix[r] = [value - factor * pivot_value for value, pivot_value in zip(matrix[r], matrix[pivot_row])]

        pivots.append(pivot_col)
        pivot_row += 1
        if pivot_row == n_rows:
            break

    return matrix, pivots


def nullspace(field: ScalarField, rows: list, n_cols: Optional[int] = None) -> List[list]:
    """Kernel basis of the matrix: one vector per free column, with 1 at that column."""
    if n_cols is None:
        assert rows
        n_cols = len(rows[0])
    if not rows:
        return [[field.one() if i == j else field.zero() for i in range(n_cols)] for j in range(n_cols)]

    reduced, pivots = row_reduce(field, rows)
    free = [col for col in range(n_cols) if col not in pivots]

    basis = []
    for free_col in free:
        vector = [field.zero()] * n_cols
        vector[free_col] = field.one()
        for r, pivot_col in enumerate(pivots):
            vector[pivot_col] = -reduced[r][free_col]
        basis.append(vector)

    return basis


def invert(a: LinearOperator) -> LinearOperator:
    """Gauss-Jordan elimination on [A | I], pivoting on the first nonzero entry."""
    assert(isinstance(a, LinearOperator))
    field = a.field
    n = a.dim
    augmented = [list(a.entries[i]) + [field.one() if i == j else field.zero() for j in range(n)] for i in range(n)]

    for col in range(n):
        for pivot_row in range(col, n):
            if augmented[pivot_row][col]:
                break
        else:
            certificate = nullspace(field, [list(row) for row in a.entries])[0]
            raise Singular(f"Operator of dimension {n} is singular", certificate)

        augmented[col], augmented[pivot_row] = augmented[pivot_row], augmented[col]
        pivot = augmented[col][col]
        augmented[col] = [value / pivot for value in augmented[col]]
        for r in range(n):
            factor = augmented[r][col]
            if r != col and factor:
                augmented[r] = [value - factor * pivot_value for value, pivot_value in zip(augmented[r], augmented[col])]

    return LinearOperator(field, [row[n:] for row in augmented], a.base_dim)


def operator_to_table(operator: LinearOperator) -> dict:
    return {'field': operator.field.to_json(),
            'n': operator.dim,
            'base_dim': operator.base_dim,
            'rows': [[operator.field.format(value) for value in row] for row in operator.entries]}


def operator_from_table(table: dict) -> LinearOperator:
    assert(isinstance(table, dict))
    field = field_from_json(table['field'])
    rows = table['rows']
    if len(rows) != int(table['n']) or any(len(row) != len(rows) for row in rows):
        raise BadDimension(f"Table declares n = {table['n']} but rows do not form a square of that size")

    base_dim = int(table['base_dim']) if 'base_dim' in table else infer_base_dim(len(rows))
    return LinearOperator(field, [[field.parse(value) for value in row] for row in rows], base_dim)
