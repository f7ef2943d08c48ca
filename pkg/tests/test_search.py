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
import os

import numpy as np
import pytest

from yang_baxter_ops.errors import UnsupportedField
from yang_baxter_ops.numeric import PrimeField
from yang_baxter_ops.operators import dim2_canonical_members
from yang_baxter_ops.search import candidates, determinants, search_chunk, search_dim2, run_search, census
from yang_baxter_ops.tensor import LinearOperator, identity, twist
from yang_baxter_ops.verify import check_qybe, check_invertible

CHUNK_SIZE = 2 ** 12

# entries of the identity read as base-2 digits, first entry most significant
IDENTITY_INDEX = 0b1000010000100001

# exhaustive counts over F_2, all solutions and invertible ones
F2_SOLUTIONS = 399
F2_INVERTIBLE_SOLUTIONS = 49

F2 = PrimeField(2)


@pytest.fixture(scope='module')
def f2_solutions():
    return search_dim2(2, False, CHUNK_SIZE)


def test_candidates_enumerate_base_p_digits():
    # when
    batch = candidates(2, IDENTITY_INDEX, IDENTITY_INDEX + 2)

    # then
    assert batch.shape == (2, 4, 4)
    assert (batch[0] == np.eye(4, dtype=np.int64)).all()
    assert batch[1][3].tolist() == [0, 0, 1, 0]
    assert candidates(3, 1, 2)[0][3].tolist() == [0, 0, 0, 1]
    assert candidates(3, 2, 3)[0][3].tolist() == [0, 0, 0, 2]


def test_determinants_mod_p():
    # given
    batch = np.array([np.eye(4, dtype=np.int64),
                      np.zeros((4, 4), dtype=np.int64),
                      np.diag([1, 2, 2, 1]).astype(np.int64)])

    # then
    assert determinants(batch, 3).tolist() == [1, 0, 1]
    assert determinants(batch, 2).tolist() == [1, 0, 0]


def test_vectorized_filter_agrees_with_matrix_qybe():
    # given
    start, stop = IDENTITY_INDEX - 128, IDENTITY_INDEX + 128

    # when
    found = search_chunk(2, start, stop, False)

    # then
    expected = []
    for matrix in candidates(2, start, stop):
        flat = [int(value) for value in matrix.flat]
        if check_qybe(LinearOperator(F2, matrix.tolist(), 2)).holds:
            expected.append(flat)
    assert found == expected
    assert [1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1] in found


def test_f2_census_contains_known_solutions(f2_solutions):
    # then
    assert len(f2_solutions) == F2_SOLUTIONS
    assert identity(F2, 4, 2) in f2_solutions
    assert twist(2, F2) in f2_solutions
    for member in dim2_canonical_members(F2):
        assert member in f2_solutions


def test_f2_solutions_are_sorted_and_distinct(f2_solutions):
    # given
    keys = [tuple(int(value) for value in solution.entries.flat) for solution in f2_solutions]

    # then
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_invertible_only_search(f2_solutions):
    # when
    invertible = search_dim2(2, True, CHUNK_SIZE)

    # then
    assert len(invertible) == F2_INVERTIBLE_SOLUTIONS
    assert invertible == [solution for solution in f2_solutions if check_invertible(solution).holds]


def test_unsupported_field():
    # then
    with pytest.raises(UnsupportedField):
        search_dim2(5, False)


def test_census_summary():
    # given
    flat_identity = [1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1]
    flat_twist = [1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1]

    # when
    result = census(2, False, [flat_identity, flat_twist])

    # then
    assert result['summary'] == {'solutions': 2,
                                 'reverified': 2,
                                 'family_matches': 1,
                                 'family_members': 2,
                                 'all_family_members_found': False,
                                 'contains_identity': True,
                                 'contains_twist': True}
    assert result['solutions'][0]['family_match'] == "dim2-canonical q=1 eta=0"
    assert result['solutions'][0]['identity']
    assert result['solutions'][1]['twist']


def test_run_search_writes_census(tmp_path, f2_solutions):
    # given
    out = str(tmp_path / "census.json")

    # when
    result = run_search(2, False, out, CHUNK_SIZE)

    # then
    with open(out, 'r') as file:
        assert json.load(file) == result
    assert result['summary']['solutions'] == F2_SOLUTIONS
    assert result['summary']['solutions'] == len(f2_solutions)
    assert result['summary']['reverified'] == len(f2_solutions)
    assert result['summary']['all_family_members_found']
    assert not os.path.exists(out + ".partial")


def test_run_search_resumes_from_checkpoint(tmp_path):
    # given
    out = str(tmp_path / "census.json")
    flat_identity = [1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1]
    with open(out + ".partial", 'w') as file:
        json.dump({'p': 2, 'invertible_only': False, 'chunk_size': CHUNK_SIZE,
                   'next_start': 2 ** 16, 'solutions': [flat_identity]}, file)

    # when
    result = run_search(2, False, out, CHUNK_SIZE)

    # then
    assert result['summary']['solutions'] == 1
    assert result['solutions'][0]['identity']


def test_run_search_ignores_checkpoint_with_other_flags(tmp_path, f2_solutions):
    # given
    out = str(tmp_path / "census.json")
    with open(out + ".partial", 'w') as file:
        json.dump({'p': 2, 'invertible_only': True, 'chunk_size': CHUNK_SIZE,
                   'next_start': 2 ** 16, 'solutions': []}, file)

    # when
    result = run_search(2, False, out, CHUNK_SIZE)

    # then
    assert result['summary']['solutions'] == len(f2_solutions)


def test_search_output_is_reproducible(tmp_path):
    # given
    first, second = str(tmp_path / "first.json"), str(tmp_path / "second.json")

    # when
    run_search(2, True, first, CHUNK_SIZE)
    run_search(2, True, second, 2 ** 10)

    # then
    with open(first, 'rb') as file_first, open(second, 'rb') as file_second:
        assert file_first.read() == file_second.read()
