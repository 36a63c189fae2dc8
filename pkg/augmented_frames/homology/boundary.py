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

"""Simplicial boundary matrices with the orientation of the global vertex order."""

from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from augmented_frames.complexes.simplicial import SimplicialComplex
from augmented_frames.utils.exceptions import PreconditionViolated


@dataclass
class BoundaryMatrix:
    """Sparse matrix of d_k: C_k -> C_(k-1), rows by (k-1)-simplices.

    For k = 0 the single row is the augmentation onto Z.
    """

    degree: int
    n_rows: int
    n_cols: int
    rows: Dict[int, Dict[int, int]] = field(default_factory=dict)

    def to_numpy(self) -> np.ndarray:
        dense = np.zeros((self.n_rows, self.n_cols), np.int64)
        for r, row in self.rows.items():
            for c, value in row.items():
                dense[r, c] = value
        return dense

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self.rows.values())


def boundary_matrix(cx: SimplicialComplex, k: int) -> BoundaryMatrix:
    if k < 0:
        raise PreconditionViolated(f"No boundary map in degree {k} !")
    columns = cx.simplices.get(k, [])
    if k == 0:
        rows = {0: {c: 1 for c in range(len(columns))}} if columns else {}
        return BoundaryMatrix(degree=0, n_rows=1, n_cols=len(columns), rows=rows)
    faces = cx.simplices.get(k - 1, [])
    position = {face: idx for idx, face in enumerate(faces)}
    rows: Dict[int, Dict[int, int]] = {}
    for c, simplex in enumerate(columns):
        for pos in range(len(simplex)):
            face = simplex[:pos] + simplex[pos + 1:]
            rows.setdefault(position[face], {})[c] = -1 if pos % 2 else 1
    return BoundaryMatrix(degree=k, n_rows=len(faces), n_cols=len(columns), rows=rows)
