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

from typing import List

from yang_baxter_ops.errors import UnknownName
from yang_baxter_ops.model import AssociativeAlgebra, LieSuperalgebra, GThetaLieAlgebra, ColorFunction, \
    FiniteAbelianGroup, Structure, structure_tensor
from yang_baxter_ops.numeric import RATIONALS, Cyclotomic
from yang_baxter_ops.structures import validate


def _unit_vector(dim: int, index: int, coefficient: int = 1) -> list:
    return [coefficient if i == index else 0 for i in range(dim)]


def dual_numbers() -> AssociativeAlgebra:
    mult = structure_tensor(RATIONALS, 2, {(0, 0): [1, 0],
                                           (0, 1): [0, 1],
                                           (1, 0): [0, 1]})
    return AssociativeAlgebra(RATIONALS, mult, [1, 0], ['1', 'x'], 'dual-numbers')


def m2() -> AssociativeAlgebra:
    # e_ij e_kl = delta_jk e_il, basis index 2i + j
    entries = {}
    for i in range(2):
        for j in range(2):
            for l in range(2):
                entries[(2 * i + j, 2 * j + l)] = _unit_vector(4, 2 * i + l)

    mult = structure_tensor(RATIONALS, 4, entries)
    return AssociativeAlgebra(RATIONALS, mult, [1, 0, 0, 1], ['e11', 'e12', 'e21', 'e22'], 'm2')


def poly3() -> AssociativeAlgebra:
    entries = {(a, b): _unit_vector(3, a + b) for a in range(3) for b in range(3) if a + b < 3}
    mult = structure_tensor(RATIONALS, 3, entries)
    return AssociativeAlgebra(RATIONALS, mult, [1, 0, 0], ['1', 'x', 'x2'], 'poly3')


def heisenberg3() -> LieSuperalgebra:
    bracket = structure_tensor(RATIONALS, 3, {(0, 1): [0, 0, 1],
                                              (1, 0): [0, 0, -1]})
    return LieSuperalgebra(RATIONALS, bracket, [0, 0, 0], ['e', 'f', 'z'], 'heisenberg3')


def _sl2_entries(dim: int) -> dict:
    return {(0, 1): _unit_vector(dim, 2),
            (1, 0): _unit_vector(dim, 2, -1),
            (2, 0): _unit_vector(dim, 0, 2),
            (0, 2): _unit_vector(dim, 0, -2),
            (2, 1): _unit_vector(dim, 1, -2),
            (1, 2): _unit_vector(dim, 1, 2)}


def sl2() -> LieSuperalgebra:
    bracket = structure_tensor(RATIONALS, 3, _sl2_entries(3))
    return LieSuperalgebra(RATIONALS, bracket, [0, 0, 0], ['e', 'f', 'h'], 'sl2')


def gl2() -> LieSuperalgebra:
    """sl2 plus the central direction c."""
    bracket = structure_tensor(RATIONALS, 4, _sl2_entries(4))
    return LieSuperalgebra(RATIONALS, bracket, [0, 0, 0, 0], ['e', 'f', 'h', 'c'], 'gl2')


def super_d2() -> LieSuperalgebra:
    bracket = structure_tensor(RATIONALS, 2, {(0, 0): [0, 1]})
    return LieSuperalgebra(RATIONALS, bracket, [1, 0], ['u', 'z'], 'super-d2')


def gtheta_z4z4() -> GThetaLieAlgebra:
    """theta(a, b) = i^(a1 b2 - a2 b1) on Z_4 x Z_4."""
    field = Cyclotomic(4)
    theta = ColorFunction(FiniteAbelianGroup([4, 4]), [[0, 1], [3, 0]], field)
    bracket = structure_tensor(field, 5, {(0, 1): _unit_vector(5, 4),
                                          (1, 0): _unit_vector(5, 4, -1),
                                          (2, 3): _unit_vector(5, 4),
                                          (3, 2): _unit_vector(5, 4, -1)})
    return GThetaLieAlgebra(field, bracket, [(1, 0), (3, 0), (0, 1), (0, 3), (0, 0)], theta,
                            ['x', 'w', 'y', "y'", 'z'], 'gtheta-z4z4')


def gtheta_bad() -> GThetaLieAlgebra:
    """Sign bicharacter on Z_2 with a central z of odd grade, so theta(g, g) = -1."""
    theta = ColorFunction(FiniteAbelianGroup([2]), [[1]], RATIONALS)
    bracket = structure_tensor(RATIONALS, 3, {(0, 1): [0, 0, 1],
                                              (1, 0): [0, 0, -1]})
    return GThetaLieAlgebra(RATIONALS, bracket, [(0,), (1,), (1,)], theta, ['x', 'y', 'z'], 'gtheta-bad')


CATALOG = {
    'dual-numbers': dual_numbers,
    'm2': m2,
    'poly3': poly3,
    'heisenberg3': heisenberg3,
    'sl2': sl2,
    'gl2': gl2,
    'super-d2': super_d2,
    'gtheta-z4z4': gtheta_z4z4,
    'gtheta-bad': gtheta_bad
}


def catalog_names() -> List[str]:
    return list(CATALOG.keys())


def catalog(name: str) -> Structure:
    if name not in CATALOG:
        raise UnknownName(f"No catalog structure named '{name}' (known: {', '.join(CATALOG)})")

    structure = CATALOG[name]()
    report = validate(structure)
    assert report.valid, f"Catalog structure '{name}' failed {report.check}: {report.message}"

    return structure
