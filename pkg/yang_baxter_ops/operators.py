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

from enum import Enum
from pprint import pformat
from typing import Callable, List, Optional, Tuple, Union

import numpy as np

from yang_baxter_ops.errors import DimTooSmall, InvalidCase, BadParameter, NotInvertibleParams, \
    HypothesisViolated, NotEvenCentral, NotCentral, InhomogeneousZ, UnknownColor
from yang_baxter_ops.model import AssociativeAlgebra, LieSuperalgebra, GThetaLieAlgebra, Structure
from yang_baxter_ops.numeric import ScalarField, RATIONALS, PrimeField
from yang_baxter_ops.structures import is_central, even_part
from yang_baxter_ops.tensor import LinearOperator, identity, twist

Triple = Tuple[LinearOperator, LinearOperator, LinearOperator]


def product_matrix(structure: Structure) -> np.ndarray:
    """N x N^2 matrix of a (x) b -> ab (or [a, b])."""
    n = structure.dim
    return structure.constants.reshape(n * n, n).T


def swapped_product_matrix(structure: Structure) -> np.ndarray:
    """N x N^2 matrix of a (x) b -> ba (or [b, a])."""
    n = structure.dim
    return structure.constants.transpose(1, 0, 2).reshape(n * n, n).T


def column(field: ScalarField, vector) -> np.ndarray:
    return np.array([field.coerce(value) for value in vector], dtype=object).reshape(-1, 1)


def _operator(field: ScalarField, entries: np.ndarray, n: int) -> LinearOperator:
    return LinearOperator(field, entries, n)


def _twist(field: ScalarField, n: int) -> np.ndarray:
    return twist(n, field).entries


def _identity(field: ScalarField, n: int) -> np.ndarray:
    return identity(field, n * n, n).entries


def _diagonal(field: ScalarField, values: list) -> np.ndarray:
    entries = np.full((len(values), len(values)), field.zero(), dtype=object)
    for i, value in enumerate(values):
        entries[i, i] = field.coerce(value)

    return entries


def _require_dim(structure: Structure):
    if structure.dim < 2:
        raise DimTooSmall(f"{structure.name} has dimension {structure.dim}, the construction needs at least 2")


class DnCase(Enum):
    CASE_I = 'case-i'
    CASE_II = 'case-ii'
    CASE_III = 'case-iii'
    INVALID = 'invalid'


def build_dn(algebra: AssociativeAlgebra, alpha, beta, gamma) -> LinearOperator:
    """a (x) b -> alpha ab (x) 1 + beta 1 (x) ab - gamma a (x) b."""
    assert(isinstance(algebra, AssociativeAlgebra))
    _require_dim(algebra)
    field = algebra.field
    alpha, beta, gamma = field.coerce(alpha), field.coerce(beta), field.coerce(gamma)

    mu = product_matrix(algebra)
    unit = column(field, algebra.unit)
    entries = np.kron(mu, unit) * alpha + np.kron(unit, mu) * beta - _identity(field, algebra.dim) * gamma

    return _operator(field, entries, algebra.dim)


def dn_case(alpha, beta, gamma) -> DnCase:
    if alpha == gamma and gamma != 0 and beta != 0:
        return DnCase.CASE_I
    if beta == gamma and gamma != 0 and alpha != 0:
        return DnCase.CASE_II
    if alpha == 0 and beta == 0 and gamma != 0:
        return DnCase.CASE_III

    return DnCase.INVALID


def dn_inverse(algebra: AssociativeAlgebra, alpha, beta, gamma) -> LinearOperator:
    field = algebra.field
    alpha, beta, gamma = field.coerce(alpha), field.coerce(beta), field.coerce(gamma)

    case = dn_case(alpha, beta, gamma)
    if case == DnCase.INVALID:
        raise InvalidCase(f"(alpha, beta, gamma) = ({alpha}, {beta}, {gamma}) matches none of the invertible cases")
    if case == DnCase.CASE_III:
        return build_dn(algebra, 0, 0, 1 / gamma)

    return build_dn(algebra, 1 / beta, 1 / alpha, 1 / gamma)


def build_dim2_canonical(q, eta, field: ScalarField = RATIONALS) -> LinearOperator:
    q, eta = field.coerce(q), field.coerce(eta)
    if not q:
        raise BadParameter("q must be nonzero")
    if eta != 0 and eta != 1:
        raise BadParameter(f"eta must be 0 or 1, got {field.format(eta)}")

    zero, one = field.zero(), field.one()
    rows = [[one, zero, zero, zero],
            [zero, one, zero, zero],
            [zero, one - q, q, zero],
            [eta, zero, zero, -q]]

    return _operator(field, rows, 2)


def dim2_canonical_members(field: PrimeField) -> List[LinearOperator]:
    """Every member of the canonical dimension-2 family over a prime field."""
    assert(isinstance(field, PrimeField))
    return [build_dim2_canonical(q, eta, field) for q in range(1, field.p) for eta in (0, 1)]


def build_colored(algebra: AssociativeAlgebra, p, q, u, v) -> LinearOperator:
    """a (x) b -> p(u - v) 1 (x) ab + q(u - v) ab (x) 1 - (pu - qv) b (x) a."""
    assert(isinstance(algebra, AssociativeAlgebra))
    _require_dim(algebra)
    field = algebra.field
    p, q, u, v = (field.coerce(value) for value in (p, q, u, v))

    mu = product_matrix(algebra)
    unit = column(field, algebra.unit)
    entries = np.kron(unit, mu) * (p * (u - v)) + np.kron(mu, unit) * (q * (u - v)) - \
        _twist(field, algebra.dim) * (p * u - q * v)

    return _operator(field, entries, algebra.dim)


def colored_inverse(algebra: AssociativeAlgebra, p, q, u, v) -> LinearOperator:
    assert(isinstance(algebra, AssociativeAlgebra))
    _require_dim(algebra)
    field = algebra.field
    p, q, u, v = (field.coerce(value) for value in (p, q, u, v))

    if p * u == q * v or q * u == p * v:
        raise NotInvertibleParams("The colored operator is invertible only when pu != qv and qu != pv")

    denominator = (q * u - p * v) * (p * u - q * v)
    mu_swapped = swapped_product_matrix(algebra)
    unit = column(field, algebra.unit)
    entries = np.kron(mu_swapped, unit) * (p * (u - v) / denominator) + \
        np.kron(unit, mu_swapped) * (q * (u - v) / denominator) - \
        _twist(field, algebra.dim) * (1 / (p * u - q * v))

    return _operator(field, entries, algebra.dim)


def build_one_param(algebra: AssociativeAlgebra, q, s) -> LinearOperator:
    """The spectral operator with e^lambda realized as s."""
    s = algebra.field.coerce(s)
    if not s:
        raise BadParameter("s = e^lambda must be nonzero")

    return build_colored(algebra, 1, q, s, 1)


def one_param_inverse(algebra: AssociativeAlgebra, q, s) -> LinearOperator:
    field = algebra.field
    q, s = field.coerce(q), field.coerce(s)
    if not s:
        raise BadParameter("s = e^lambda must be nonzero")
    if s == q or s * q == 1:
        raise NotInvertibleParams("non-invertible boundary, e^lambda must differ from q and 1/q")

    return colored_inverse(algebra, 1, q, s, 1)


def build_wxz_algebra(algebra: AssociativeAlgebra, lam, mu) -> Triple:
    assert(isinstance(algebra, AssociativeAlgebra))
    field = algebra.field
    lam, mu = field.coerce(lam), field.coerce(mu)

    product = product_matrix(algebra)
    unit = column(field, algebra.unit)
    ab_1 = np.kron(product, unit)
    one_ab = np.kron(unit, product)
    b_a = _twist(field, algebra.dim)

    w = _operator(field, ab_1 + one_ab * lam - b_a, algebra.dim)
    x = _operator(field, ab_1 + one_ab - b_a, algebra.dim)
    z = _operator(field, ab_1 * mu + one_ab - b_a, algebra.dim)

    return w, x, z


class ParamTable:
    """Finite tables alpha, beta : X x X -> k over an explicit color set X."""

    def __init__(self, field: ScalarField, colors: list, alpha: Callable, beta: Callable):
        assert(isinstance(field, ScalarField))
        colors = [field.coerce(color) for color in colors]
        if len(set(colors)) != len(colors):
            raise BadParameter("Colors must be distinct")

        self.field = field
        self.colors = colors
        self._alpha = alpha
        self._beta = beta

    @staticmethod
    def constant(value) -> Callable:
        return lambda u, v: value

    @staticmethod
    def first(values: dict) -> Callable:
        """alpha(u, v) = f(u)."""
        return lambda u, v: values[u]

    @staticmethod
    def second(values: dict) -> Callable:
        """alpha(u, v) = f(v)."""
        return lambda u, v: values[v]

    @staticmethod
    def pairs(values: dict) -> Callable:
        return lambda u, v: values[(u, v)]

    def _check_color(self, color):
        if self.field.coerce(color) not in self.colors:
            raise UnknownColor(f"Color {self.field.format(self.field.coerce(color))} is not in the color set")

    def alpha(self, u, v):
        self._check_color(u)
        self._check_color(v)
        return self.field.coerce(self._alpha(self.field.coerce(u), self.field.coerce(v)))

    def beta(self, u, v):
        self._check_color(u)
        self._check_color(v)
        return self.field.coerce(self._beta(self.field.coerce(u), self.field.coerce(v)))

    def constraint_violation(self) -> Optional[tuple]:
        """First (u, v, w) with beta(u,w) alpha(v,w) != alpha(u,w) beta(v,w), or None."""
        for u in self.colors:
            for v in self.colors:
                for w in self.colors:
                    if self.beta(u, w) * self.alpha(v, w) != self.alpha(u, w) * self.beta(v, w):
                        return u, v, w

        return None

    def __repr__(self):
        return pformat({'colors': [self.field.format(color) for color in self.colors]})


def _coordinates(structure: Structure, z) -> np.ndarray:
    if len(z) != structure.dim:
        raise BadParameter(f"z needs {structure.dim} coordinates, got {len(z)}")

    return np.array([structure.field.coerce(value) for value in z], dtype=object)


def _require_even_central(algebra: LieSuperalgebra, z) -> np.ndarray:
    z = _coordinates(algebra, z)
    if not is_central(algebra, z):
        raise NotEvenCentral(f"z is not in the center of {algebra.name}")
    if any(value for value, grade in zip(z, algebra.grades) if grade):
        raise NotEvenCentral(f"z has odd components in {algebra.name}")

    return z


def graded_signs(algebra: LieSuperalgebra) -> list:
    n = algebra.dim
    return [algebra.sign(i, j) for i in range(n) for j in range(n)]


def _graded_twist(algebra: LieSuperalgebra) -> np.ndarray:
    """x (x) y -> (-1)^(|x||y|) y (x) x."""
    field = algebra.field
    return _twist(field, algebra.dim) @ _diagonal(field, graded_signs(algebra))


def build_super_phi_ab(algebra: LieSuperalgebra, z, alpha, beta) -> LinearOperator:
    """x (x) y -> alpha [x, y] (x) z + (-1)^(|x||y|) beta y (x) x."""
    assert(isinstance(algebra, LieSuperalgebra))
    field = algebra.field
    z = _require_even_central(algebra, z)
    alpha, beta = field.coerce(alpha), field.coerce(beta)
    if not beta:
        raise BadParameter("beta must be nonzero")

    entries = np.kron(product_matrix(algebra), column(field, z)) * alpha + _graded_twist(algebra) * beta
    return _operator(field, entries, algebra.dim)


def super_phi_ab_inverse(algebra: LieSuperalgebra, z, alpha, beta) -> LinearOperator:
    """x (x) y -> (alpha / beta^2) z (x) [x, y] + (-1)^(|x||y|) (1 / beta) y (x) x."""
    assert(isinstance(algebra, LieSuperalgebra))
    field = algebra.field
    z = _require_even_central(algebra, z)
    alpha, beta = field.coerce(alpha), field.coerce(beta)
    if not beta:
        raise BadParameter("beta must be nonzero")

    entries = np.kron(column(field, z), product_matrix(algebra)) * (alpha / (beta * beta)) + \
        _graded_twist(algebra) * (1 / beta)
    return _operator(field, entries, algebra.dim)


def build_super_phi(algebra: LieSuperalgebra, z, alpha) -> LinearOperator:
    return build_super_phi_ab(algebra, z, alpha, 1)


def super_phi_inverse(algebra: LieSuperalgebra, z, alpha) -> LinearOperator:
    return super_phi_ab_inverse(algebra, z, alpha, 1)


def build_super_colored(algebra: LieSuperalgebra, z, table: ParamTable, u, v) -> LinearOperator:
    """a (x) b -> alpha(u,v) [a, b] (x) z + beta(u,v) (-1)^(|a||b|) a (x) b."""
    assert(isinstance(algebra, LieSuperalgebra))
    assert(isinstance(table, ParamTable))
    field = algebra.field
    z = _require_even_central(algebra, z)

    entries = np.kron(product_matrix(algebra), column(field, z)) * table.alpha(u, v) + \
        _diagonal(field, graded_signs(algebra)) * table.beta(u, v)
    return _operator(field, entries, algebra.dim)


def _require_homogeneous_central(algebra: GThetaLieAlgebra, z) -> Tuple[np.ndarray, tuple]:
    z = _coordinates(algebra, z)
    if not is_central(algebra, z):
        raise NotCentral(f"z is not in the center of {algebra.name}")

    grades = {algebra.grades[i] for i, value in enumerate(z) if value}
    if len(grades) > 1:
        raise InhomogeneousZ(f"z mixes the grades {sorted(grades)}")

    return z, grades.pop() if grades else algebra.group.identity()


def gtheta_condition(algebra: GThetaLieAlgebra, z) -> bool:
    """theta(g, a) = theta(a, g) = theta(g, g) = 1 for every grade a of L, g the grade of z."""
    _, g = _require_homogeneous_central(algebra, z)
    theta = algebra.theta

    if theta(g, g) != 1:
        return False

    return all(theta(g, a) == 1 and theta(a, g) == 1 for a in set(algebra.grades))


def theta_values(algebra: GThetaLieAlgebra, swapped: bool = False) -> list:
    n = algebra.dim
    if swapped:
        return [algebra.theta_of_basis(j, i) for i in range(n) for j in range(n)]

    return [algebra.theta_of_basis(i, j) for i in range(n) for j in range(n)]


def build_gtheta(algebra: GThetaLieAlgebra, z, alpha) -> LinearOperator:
    """x (x) y -> alpha [x, y] (x) z + theta(a, b) x (x) y."""
    assert(isinstance(algebra, GThetaLieAlgebra))
    field = algebra.field
    z, _ = _require_homogeneous_central(algebra, z)

    entries = np.kron(product_matrix(algebra), column(field, z)) * field.coerce(alpha) + \
        _diagonal(field, theta_values(algebra))
    return _operator(field, entries, algebra.dim)


def gtheta_inverse(algebra: GThetaLieAlgebra, z, alpha) -> LinearOperator:
    """x (x) y -> alpha [y, x] (x) z + theta(b, a) x (x) y."""
    assert(isinstance(algebra, GThetaLieAlgebra))
    field = algebra.field
    z, _ = _require_homogeneous_central(algebra, z)

    entries = np.kron(swapped_product_matrix(algebra), column(field, z)) * field.coerce(alpha) + \
        _diagonal(field, theta_values(algebra, swapped=True))
    return _operator(field, entries, algebra.dim)


def build_classical_r(algebra: Union[LieSuperalgebra, GThetaLieAlgebra], z, check_center: bool = True) -> LinearOperator:
    """x (x) y -> [x, y] (x) z on the even part of a superalgebra.

    `check_center=False` skips the centrality precondition, which only counterexamples want.
    """
    z = _coordinates(algebra, z)
    if isinstance(algebra, LieSuperalgebra) and not algebra.is_purely_even():
        if any(value for value, grade in zip(z, algebra.grades) if grade):
            raise NotCentral(f"z has odd components in {algebra.name}")
        z = [value for value, grade in zip(z, algebra.grades) if not grade]
        algebra = even_part(algebra)

    field = algebra.field
    z = _coordinates(algebra, z)
    if check_center and not is_central(algebra, z):
        raise NotCentral(f"z is not in the center of {algebra.name}")

    return _operator(field, np.kron(product_matrix(algebra), column(field, z)), algebra.dim)


class ColoredFamily:
    """An operator family R(u, v) over a finite color set, evaluated lazily and cached."""

    def __init__(self, name: str, field: ScalarField, base_dim: int, colors: list,
                 build: Callable, inverse: Optional[Callable] = None):
        assert(isinstance(name, str))
        assert(isinstance(field, ScalarField))

        self.name = name
        self.field = field
        self.base_dim = base_dim
        self.colors = [field.coerce(color) for color in colors]
        self._build = build
        self._inverse = inverse
        self._cache = {}

    def __call__(self, u, v) -> LinearOperator:
        key = (self.field.coerce(u), self.field.coerce(v))
        if key not in self._cache:
            self._cache[key] = self._build(*key)

        return self._cache[key]

    def has_inverse(self) -> bool:
        return self._inverse is not None

    def inverse(self, u, v) -> LinearOperator:
        assert self._inverse is not None
        return self._inverse(self.field.coerce(u), self.field.coerce(v))

    def __repr__(self):
        return f"ColoredFamily({self.name}, colors={[self.field.format(color) for color in self.colors]})"


def colored_family(algebra: AssociativeAlgebra, p, q, colors: list) -> ColoredFamily:
    return ColoredFamily('colored', algebra.field, algebra.dim, colors,
                         lambda u, v: build_colored(algebra, p, q, u, v),
                         lambda u, v: colored_inverse(algebra, p, q, u, v))


def super_colored_family(algebra: LieSuperalgebra, z, table: ParamTable) -> ColoredFamily:
    return ColoredFamily('super-colored', algebra.field, algebra.dim, table.colors,
                         lambda u, v: build_super_colored(algebra, z, table, u, v))


def one_param_family(algebra: AssociativeAlgebra, q, colors: list) -> ColoredFamily:
    """S(s_u / s_v) as a family over multiplicative spectral parameters."""
    return ColoredFamily('one-param', algebra.field, algebra.dim, colors,
                         lambda u, v: build_one_param(algebra, q, u / v),
                         lambda u, v: one_param_inverse(algebra, q, u / v))


def wxz_from_colored(family: ColoredFamily, s, t) -> Triple:
    """W = R(s, s), X = R(s, t), Z = R(t, t)."""
    assert(isinstance(family, ColoredFamily))
    return family(s, s), family(s, t), family(t, t)


def build_split(n: int, c_index: int, f, g, field: ScalarField = RATIONALS) -> LinearOperator:
    """v (x) w -> f(v (x) w) (x) c + c (x) g(v (x) w), with f, g given as N x N x N coefficient tensors."""
    assert(isinstance(n, int))
    if not 0 <= c_index < n:
        raise BadParameter(f"c index {c_index} is outside 0..{n - 1}")

    tensors = []
    for label, tensor in (('f', f), ('g', g)):
        tensor = np.array([[[field.coerce(value) for value in row] for row in plane] for plane in tensor], dtype=object)
        if tensor.shape != (n, n, n):
            raise BadParameter(f"{label} must be an {n} x {n} x {n} tensor, got shape {tensor.shape}")
        if any(tensor[c_index].flat) or any(tensor[:, c_index].flat):
            raise HypothesisViolated(f"{label} does not vanish on V (x) c + c (x) V")
        tensors.append(tensor.reshape(n * n, n).T)

    c = column(field, [field.one() if i == c_index else field.zero() for i in range(n)])
    return _operator(field, np.kron(tensors[0], c) + np.kron(c, tensors[1]), n)
