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

"""Tits buildings of F_q^n for n = 2, 3 as flag complexes of subspaces."""

import logging
from itertools import product
from typing import Dict, List, Tuple

import numpy as np
from sympy import isprime

from augmented_frames.complexes.simplicial import SimplicialComplex
from augmented_frames.utils.definitions import MAX_FIELD_SIZE, VERBOSE
from augmented_frames.utils.exceptions import QTooLarge, PreconditionViolated

logger = logging.getLogger(__name__)


class FlagComplexFq(SimplicialComplex):
    """Order complex of the proper nonzero subspaces of F_q^n.

    A vertex is (dimension, normalized vector): the spanning vector of a
    point, or the normal vector of a plane for n = 3.
    """

    def __init__(self, q: int, n: int, vertices: List[Tuple[int, Tuple[int, ...]]],
                 simplices: Dict[int, List[Tuple[int, ...]]]):
        super().__init__(vertices, simplices)
        self.q = q
        self.n = n


def projective_points(q: int, n: int) -> np.ndarray:
    """Nonzero vectors of F_q^n whose first nonzero entry is 1, one per point."""
    rows = []
    for entries in product(range(q), repeat=n):
        nonzero = [value for value in entries if value != 0]
        if nonzero and nonzero[0] == 1:
            rows.append(entries)
    return np.asarray(rows, np.int64).reshape((-1, n))


def build_tits_fq(q: int, n: int, verbose: bool = VERBOSE) -> FlagComplexFq:
    """Flag complex of F_q^n: q+1 points for n = 2, point-line incidences for n = 3."""
    if q > MAX_FIELD_SIZE:
        raise QTooLarge(f"q = {q} exceeds {MAX_FIELD_SIZE} !")
    if isprime(q) is False:
        raise PreconditionViolated(f"q = {q} is not prime !")
    if n not in (2, 3):
        raise PreconditionViolated(f"Only n = 2, 3 are supported, got {n} !")
    points = projective_points(q, n)
    vertices = [(1, tuple(int(v) for v in row)) for row in points]
    simplices: Dict[int, List[Tuple[int, ...]]] = {}
    if n == 3:
        # planes of F_q^3 are kernels of the same normalized functionals
        offset = len(vertices)
        vertices += [(2, tuple(int(v) for v in row)) for row in points]
        incidence = np.mod(points @ points.T, q) == 0
        point_idx, plane_idx = np.nonzero(incidence)
        simplices[1] = [(int(i), int(offset + j)) for i, j in zip(point_idx, plane_idx)]
    if verbose is True:
        logger.info("Built T_%d(F_%d) with %d vertices", n, q, len(vertices))
    return FlagComplexFq(q, n, vertices, simplices)
