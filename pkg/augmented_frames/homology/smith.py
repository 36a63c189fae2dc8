#
# Copyright The NOMAD Authors.
#
# This file is part of NOMAD. See https://nomad-lab.eu for further info.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

"""Smith normal form of sparse integer matrices."""

# pylint: disable=too-many-branches

from math import gcd
from typing import Dict, List, Mapping, Optional, Set, Tuple

import numpy as np

from augmented_frames.utils.exceptions import PreconditionViolated

SparseRows = Dict[int, Dict[int, int]]


def to_sparse_rows(matrix) -> SparseRows:
    """Nonzero entries per row from a numpy array, nested lists or a row mapping."""
    if isinstance(matrix, Mapping):
        return {int(r): {int(c): int(v) for c, v in row.items() if v != 0}
                for r, row in matrix.items()}
    if hasattr(matrix, "rows") and isinstance(matrix.rows, Mapping):
        return to_sparse_rows(matrix.rows)
    if isinstance(matrix, (list, tuple)) and len(matrix) == 0:
        return {}
    arr = np.asarray(matrix, dtype=object)
    if arr.size == 0:
        return {}
    if arr.ndim != 2:
        raise PreconditionViolated(f"Expected a two-dimensional matrix, got {arr.ndim} dimensions !")
    rows: SparseRows = {}
    for r, c in zip(*np.nonzero(arr)):
        rows.setdefault(int(r), {})[int(c)] = int(arr[r, c])
    return rows


class _Eliminator():
    """Row and column operations on sparse rows with a column index."""

    def __init__(self, rows: SparseRows):
        self.rows = {r: dict(row) for r, row in rows.items() if row}
        self.col_rows: Dict[int, Set[int]] = {}
        for r, row in self.rows.items():
            for c in row:
                self.col_rows.setdefault(c, set()).add(r)

    def _set(self, r: int, c: int, value: int):
        row = self.rows[r]
        if value == 0:
            if c in row:
                del row[c]
                self.col_rows[c].discard(r)
        else:
            if c not in row:
                self.col_rows.setdefault(c, set()).add(r)
            row[c] = value

    def add_row(self, target: int, source: int, factor: int):
        """row[target] += factor * row[source]"""
        for c, value in list(self.rows[source].items()):
            self._set(target, c, self.rows[target].get(c, 0) + factor * value)

    def drop_row(self, r: int):
        for c in self.rows[r]:
            self.col_rows[c].discard(r)
        del self.rows[r]

    def min_entry(self) -> Optional[Tuple[int, int, int]]:
        best = None
        for r, row in self.rows.items():
            for c, value in row.items():
                if best is None or abs(value) < abs(best[2]):
                    best = (r, c, value)
                    if abs(value) == 1:
                        return best
        return best

    def eliminate_pivot(self, r: int, c: int) -> int:
        """Clear row r and column c around the pivot, returning |pivot|."""
        while True:
            pivot = self.rows[r][c]
            leftover = None
            for other in sorted(self.col_rows.get(c, set()) - {r}):
                self.add_row(other, r, -(self.rows[other][c] // pivot))
                value = self.rows[other].get(c, 0)
                if value != 0 and (leftover is None or abs(value) < abs(leftover[2])):
                    leftover = (other, c, value)
            if leftover is not None:
                r, c, _ = leftover
                continue
            # column c is zero off the pivot, column operations only touch row r
            for other_col, value in list(self.rows[r].items()):
                if other_col == c:
                    continue
                self._set(r, other_col, value - (value // pivot) * pivot)
                remainder = self.rows[r].get(other_col, 0)
                if remainder != 0 and (leftover is None or abs(remainder) < abs(leftover[2])):
                    leftover = (r, other_col, remainder)
            if leftover is not None:
                r, c, _ = leftover
                continue
            self.drop_row(r)
            return abs(pivot)


def divisibility_chain(diagonal: List[int]) -> List[int]:
    """Replace pairs by (gcd, lcm) until every entry divides the next."""
    values = sorted(abs(v) for v in diagonal)
    for i, _ in enumerate(values):
        for j in range(i + 1, len(values)):
            g = gcd(values[i], values[j])
            values[i], values[j] = g, values[i] * values[j] // g
    return values


def smith_normal_form(matrix) -> Tuple[List[int], int]:
    """Invariant factors d_1 | d_2 | ... | d_r and the rank r over Q."""
    work = _Eliminator(to_sparse_rows(matrix))
    diagonal = []
    while work.rows:
        entry = work.min_entry()
        if entry is None:
            break
        diagonal.append(work.eliminate_pivot(entry[0], entry[1]))
        for r in [r for r, row in work.rows.items() if not row]:
            work.drop_row(r)
    factors = divisibility_chain(diagonal)
    return factors, len(factors)
