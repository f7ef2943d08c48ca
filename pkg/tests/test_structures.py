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

from pathlib import Path

import pytest

from yang_baxter_ops.catalog import CATALOG, catalog, heisenberg3, sl2, super_d2, gtheta_z4z4
from yang_baxter_ops.errors import UnknownName, RecipeError
from yang_baxter_ops.model import LieSuperalgebra, ColorFunction, FiniteAbelianGroup, structure_tensor
from yang_baxter_ops.numeric import RATIONALS, Cyclotomic
from yang_baxter_ops.structures import validate, validate_color_function, compute_center, is_central, even_part, \
    as_gtheta, load_structure, structure_from_json, structure_to_json

STRUCTURES = Path(__file__).parent.parent / "structures"


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_structures_are_valid(name):
    # when
    report = validate(catalog(name))

    # then
    assert report.valid


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_structure_files_match_the_catalog(name):
    # given
    expected = structure_to_json(catalog(name))

    # when
    loaded = load_structure(str(STRUCTURES / f"{name}.json"))

    # then
    assert validate(loaded).valid
    assert structure_to_json(loaded) == expected


def test_unknown_catalog_name():
    # then
    with pytest.raises(UnknownName):
        catalog('so3')


def test_perturbed_dual_numbers_fail_associativity_first():
    # given
    structure = load_structure(str(STRUCTURES / "dual-numbers-perturbed.json"))

    # when
    report = validate(structure)

    # then
    assert not report.valid
    assert report.check == 'associativity'
    assert report.witness == ('x', '1', 'x')


def test_missing_unit_law_is_reported():
    # given
    data = structure_to_json(catalog('dual-numbers'))
    data['unit'] = ["0", "1"]

    # when
    report = validate(structure_from_json(data))

    # then
    assert not report.valid
    assert report.check == 'left-unit'
    assert report.witness == ('1',)


def test_bracket_without_antisymmetry_is_rejected():
    # given
    bracket = structure_tensor(RATIONALS, 3, {(0, 1): [0, 0, 1]})
    algebra = LieSuperalgebra(RATIONALS, bracket, [0, 0, 0], ['e', 'f', 'z'], 'broken')

    # when
    report = validate(algebra)

    # then
    assert report.check == 'super-antisymmetry'
    assert report.witness == ('e', 'f')


def test_bracket_breaking_parity_is_rejected():
    # given
    bracket = structure_tensor(RATIONALS, 2, {(0, 1): [0, 1], (1, 0): [0, -1]})
    algebra = LieSuperalgebra(RATIONALS, bracket, [1, 0], ['u', 'z'], 'broken')

    # when
    report = validate(algebra)

    # then
    assert report.check == 'grading'
    assert report.witness == ('u', 'z', 'z')


def test_non_skew_color_function_is_rejected():
    # given
    theta = ColorFunction(FiniteAbelianGroup([3]), [[1]], Cyclotomic(3))

    # when
    report = validate_color_function(theta)

    # then
    assert report.check == 'theta-skew'
    assert report.witness == ((1,), (1,))


def test_color_function_needs_enough_roots_of_unity():
    # given
    theta = ColorFunction(FiniteAbelianGroup([4, 4]), [[0, 1], [3, 0]], RATIONALS)

    # when
    report = validate_color_function(theta)

    # then
    assert report.check == 'theta-field'


def test_color_function_values():
    # given
    algebra = gtheta_z4z4()
    i = algebra.field.zeta(1)

    # then
    assert algebra.theta((1, 0), (0, 1)) == i
    assert algebra.theta((0, 1), (1, 0)) == -i
    assert algebra.theta((1, 0), (3, 0)) == 1


def test_center_of_heisenberg_algebra():
    # when
    center = compute_center(heisenberg3())

    # then
    assert center == [[0, 0, 1]]


def test_sl2_has_trivial_center():
    # then
    assert compute_center(sl2()) == []
    assert not is_central(sl2(), [0, 0, 1])


def test_even_center_of_super_d2():
    # given
    algebra = super_d2()

    # when
    center = compute_center(algebra, even_only=True)

    # then
    assert center == [[0, 1]]
    assert is_central(algebra, [0, 1])


def test_even_center_of_gtheta_algebra():
    # when
    center = compute_center(gtheta_z4z4(), even_only=True)

    # then
    assert center == [[0, 0, 0, 0, 1]]


def test_even_part_drops_odd_directions():
    # when
    even = even_part(super_d2())

    # then
    assert even.basis_names == ['z']
    assert even.is_purely_even()
    assert validate(even).valid


def test_superalgebra_as_gtheta_algebra():
    # when
    algebra = as_gtheta(super_d2())

    # then
    assert validate(algebra).valid
    assert algebra.theta((1,), (1,)) == -1


def test_structure_file_with_unknown_kind():
    # then
    with pytest.raises(RecipeError):
        structure_from_json({'kind': 'jordan', 'dim': 1, 'bracket': []})


def test_structure_file_with_missing_key():
    # then
    with pytest.raises(RecipeError):
        structure_from_json({'kind': 'super', 'dim': 1})
