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
import json
import logging
import os
from typing import List, Optional

import filelock
import numpy as np

from yang_baxter_ops.errors import UnsupportedField
from yang_baxter_ops.numeric import PrimeField
from yang_baxter_ops.operators import dim2_canonical_members
from yang_baxter_ops.oracle import reverify_matrix
from yang_baxter_ops.tensor import LinearOperator, identity, twist

FIELDS = {'f2': 2, 'f3': 3}
SUPPORTED_PRIMES = (2, 3)
DEFAULT_CHUNK_SIZE = 3 ** 10

ENTRIES = 16

# R[b, i, j, l, m] acting on the named pair of factors of v[b, ., ., .]
APPLY = {'12': 'bijlm,blmk->bijk',
         '23': 'bjklm,bilm->bijk',
         '13': 'bikln,bljn->bijk'}

PERMUTATIONS = [(permutation, (-1) ** sum(1 for a, b in itertools.combinations(permutation, 2) if a > b))
                for permutation in itertools.permutations(range(4))]


def _check_prime(p: int):
    if p not in SUPPORTED_PRIMES:
        raise UnsupportedField(f"The dimension-2 search supports F_2 and F_3 only, got p = {p}")


def candidates(p: int, start: int, stop: int) -> np.ndarray:
    """Candidates start..stop-1 as (B, 4, 4) matrices; the first entry is the most significant base-p digit."""
    indices = np.arange(start, stop, dtype=np.int64)
    powers = p ** np.arange(ENTRIES - 1, -1, -1, dtype=np.int64)
    return ((indices[:, None] // powers[None, :]) % p).reshape(-1, 4, 4)


def _apply(r: np.ndarray, vectors: np.ndarray, position: str, p: int) -> np.ndarray:
    return np.einsum(APPLY[position], r, vectors) % p


def qybe_mask(batch: np.ndarray, p: int) -> np.ndarray:
    """R12 R13 R23 = R23 R13 R12, compared one basis column at a time on the shrinking set of survivors."""
    r = batch.reshape(-1, 2, 2, 2, 2)
    alive = np.arange(len(batch))

    for column in itertools.product(range(2), repeat=3):
        if len(alive) == 0:
            break

        survivors = r[alive]
        start = np.zeros((len(alive), 2, 2, 2), dtype=np.int64)
        start[(slice(None),) + column] = 1

        lhs = _apply(survivors, _apply(survivors, _apply(survivors, start, '23', p), '13', p), '12', p)
        rhs = _apply(survivors, _apply(survivors, _apply(survivors, start, '12', p), '13', p), '23', p)
        alive = alive[np.all((lhs == rhs).reshape(len(alive), -1), axis=1)]

    mask = np.zeros(len(batch), dtype=bool)
    mask[alive] = True
    return mask


def determinants(batch: np.ndarray, p: int) -> np.ndarray:
    """Leibniz expansion of 4 x 4 determinants mod p."""
    total = np.zeros(len(batch), dtype=np.int64)
    for permutation, sign in PERMUTATIONS:
        term = np.ones(len(batch), dtype=np.int64)
        for row, col in enumerate(permutation):
            term = term * batch[:, row, col] % p
        total = (total + sign * term) % p

    return total


def search_chunk(p: int, start: int, stop: int, require_invertible: bool) -> List[List[int]]:
    batch = candidates(p, start, stop)
    batch = batch[qybe_mask(batch, p)]
    if require_invertible and len(batch):
        batch = batch[determinants(batch, p) != 0]

    return [[int(value) for value in matrix.flat] for matrix in batch]


def _to_operator(field: PrimeField, flat: List[int]) -> LinearOperator:
    return LinearOperator(field, np.array(flat, dtype=object).reshape(4, 4).tolist(), 2)


def scan(p: int, require_invertible: bool, chunk_size: int = DEFAULT_CHUNK_SIZE) -> List[List[int]]:
    _check_prime(p)
    total = p ** ENTRIES

    solutions = []
    for start in range(0, total, chunk_size):
        solutions += search_chunk(p, start, min(start + chunk_size, total), require_invertible)

    return solutions


def search_dim2(p: int, require_invertible: bool, chunk_size: int = DEFAULT_CHUNK_SIZE) -> List[LinearOperator]:
    """Every 4 x 4 matrix over F_p solving the constant QYBE, in lexicographic order of entries."""
    solutions = scan(p, require_invertible, chunk_size)
    field = PrimeField(p)

    return [_to_operator(field, flat) for flat in solutions]


def _load_checkpoint(path: str, p: int, require_invertible: bool, chunk_size: int) -> Optional[dict]:
    if not os.path.isfile(path):
        return None

    with open(path, 'r') as file:
        checkpoint = json.load(file)

    if checkpoint.get('p') != p or checkpoint.get('invertible_only') != require_invertible \
            or checkpoint.get('chunk_size') != chunk_size:
        logging.warning(f"Ignoring checkpoint {path} written with different flags")
        return None

    return checkpoint


def _save_checkpoint(path: str, checkpoint: dict):
    with open(path, 'w') as file:
        json.dump(checkpoint, file)


def census(p: int, require_invertible: bool, solutions: List[List[int]]) -> dict:
    """Solution list with per-entry flags and summary counts; free of timestamps.

    `reverified` counts solutions that pass the exact QYBE again outside the einsum filter. Search
    results have no structure constants, so that second check applies the same matrix pointwise and
    only guards the filter and the lifts, not the matrix itself.
    """
    field = PrimeField(p)
    family = {tuple(field.format(value) for value in member.entries.flat): (q, eta)
              for member, (q, eta) in zip(dim2_canonical_members(field),
                                          [(q, eta) for q in range(1, p) for eta in (0, 1)])}
    identity_key = tuple(field.format(value) for value in identity(field, 4, 2).entries.flat)
    twist_key = tuple(field.format(value) for value in twist(2, field).entries.flat)

    entries = []
    reverified = 0
    for flat in solutions:
        operator = _to_operator(field, flat)
        key = tuple(field.format(value) for value in flat)
        if reverify_matrix(operator):
            reverified += 1
        match = family.get(key)
        entries.append({'rows': [list(key[row * 4:row * 4 + 4]) for row in range(4)],
                        'family_match': f"dim2-canonical q={match[0]} eta={match[1]}" if match else None,
                        'identity': key == identity_key,
                        'twist': key == twist_key})

    keys = {tuple(value for row in entry['rows'] for value in row) for entry in entries}
    return {'field': f"f{p}",
            'p': p,
            'invertible_only': require_invertible,
            'candidates': p ** ENTRIES,
            'summary': {'solutions': len(entries),
                        'reverified': reverified,
                        'family_matches': sum(1 for entry in entries if entry['family_match']),
                        'family_members': len(family),
                        'all_family_members_found': all(key in keys for key in family),
                        'contains_identity': identity_key in keys,
                        'contains_twist': twist_key in keys},
            'solutions': entries}


def run_search(p: int, require_invertible: bool, out: str, chunk_size: int = DEFAULT_CHUNK_SIZE) -> dict:
    """Chunked scan with a checkpoint at `<out>.partial`; writes the census to `out` and returns it."""
    _check_prime(p)
    total = p ** ENTRIES
    partial = out + ".partial"

    with filelock.FileLock(out + ".lock"):
        checkpoint = _load_checkpoint(partial, p, require_invertible, chunk_size)

    if checkpoint is None:
        checkpoint = {'p': p, 'invertible_only': require_invertible, 'chunk_size': chunk_size,
                      'next_start': 0, 'solutions': []}
    else:
        logging.info(f"Resuming search over F_{p} from candidate {checkpoint['next_start']} of {total}")

    for start in range(checkpoint['next_start'], total, chunk_size):
        stop = min(start + chunk_size, total)
        checkpoint['solutions'] += search_chunk(p, start, stop, require_invertible)
        checkpoint['next_start'] = stop

        with filelock.FileLock(out + ".lock"):
            _save_checkpoint(partial, checkpoint)
        logging.info(f"Searched {stop} of {total} candidates over F_{p}, {len(checkpoint['solutions'])} solutions so far")

    result = census(p, require_invertible, checkpoint['solutions'])
    with filelock.FileLock(out + ".lock"):
        with open(out, 'w') as file:
            file.write(json.dumps(result, indent=True, sort_keys=True))
        if os.path.isfile(partial):
            os.remove(partial)

    return result
