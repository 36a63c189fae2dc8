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

"""Exhaustive rational-grid sweeps of the planar unit lemmas."""

# pylint: disable=too-many-arguments

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Dict, List, Tuple

import numpy as np
import pandas as pd

from augmented_frames.quadring.quadring import \
    RingDescriptor, RingElement, FieldElement, make_ring
from augmented_frames.unitgeometry.unit_geometry import \
    lem0_witness, ball_graph_connected, lem2_witness
from augmented_frames.utils.definitions import \
    LEMMA_IDS, DEFAULT_GRID_DENOMINATOR, VERBOSE
from augmented_frames.utils.exceptions import \
    NotImaginary, PreconditionViolated, NoWitness

logger = logging.getLogger(__name__)


@dataclass
class SweepReport:
    """Outcome of a sweep; every failure is a counterexample candidate."""

    ring: str
    lemma: str
    grid_denominator: int
    tested: int
    failures: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return len(self.failures) == 0

    def to_json(self) -> dict:
        return {"ring": self.ring,
                "lemma": self.lemma,
                "grid_denominator": self.grid_denominator,
                "tested": self.tested,
                "failures": self.failures}

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([{"ring": self.ring,
                              "lemma": self.lemma,
                              "grid_denominator": self.grid_denominator,
                              "tested": self.tested,
                              "failures": len(self.failures),
                              "passed": self.passed}])


def grid_points(grid_denominator: int) -> List[FieldElement]:
    """(p + q*delta)/D for p, q in [-D, D], p-major."""
    span = np.arange(-grid_denominator, grid_denominator + 1)
    pp, qq = np.meshgrid(span, span, indexing="ij")
    return [FieldElement(Fraction(int(p), grid_denominator), Fraction(int(q), grid_denominator))
            for p, q in zip(pp.ravel(), qq.ravel())]


def elements_by_norm(ring: RingDescriptor, max_norm: int) -> Dict[int, List[RingElement]]:
    """Nonzero elements grouped by norm up to max_norm, for d < 0."""
    _, B, C = ring.norm_form
    k = Fraction(C) - Fraction(B * B, 4)
    y_max = isqrt(int(Fraction(max_norm) / k)) + 1
    groups: Dict[int, List[RingElement]] = {}
    for y in range(-y_max, y_max + 1):
        x_max = isqrt(max_norm) + abs(B * y) + 1
        for x in range(-x_max, x_max + 1):
            value = ring.norm(RingElement(x, y))
            if 0 < value <= max_norm:
                groups.setdefault(value, []).append(RingElement(x, y))
    return {value: sorted(members, key=lambda e: (e.x, e.y))
            for value, members in sorted(groups.items())}


def _lem0_tasks(ring: RingDescriptor, max_norm: int) -> List[Tuple[RingElement, RingElement]]:
    tasks = []
    for members in elements_by_norm(ring, max_norm).values():
        tasks.extend((a, b) for a in members for b in members)
    return tasks


def _grid_tasks(lemma_id: str, grid_denominator: int) -> list:
    points = grid_points(grid_denominator)
    if lemma_id == "LEM1":
        return points
    return [(z1, z2) for z1 in points for z2 in points]


def _check_chunk(d: int, lemma_id: str, tasks: list, experimental: bool) -> List[dict]:
    """Failures of one chunk of tasks; runs in worker processes."""
    ring = make_ring(d)
    failures = []
    for task in tasks:
        if lemma_id == "LEM1":
            connected, graph = ball_graph_connected(task, ring)
            if connected is False:
                failures.append({"z": task.to_json(), "vertices": len(graph.vertices)})
            continue
        try:
            if lemma_id == "LEM0":
                lem0_witness(task[0], task[1], ring, experimental=experimental)
            else:
                lem2_witness(task[0], task[1], ring, experimental=experimental)
        except NoWitness:
            key = ("a", "b") if lemma_id == "LEM0" else ("z1", "z2")
            failures.append({key[0]: task[0].to_json(), key[1]: task[1].to_json()})
    return failures


def _chunks(tasks: list, jobs: int) -> List[list]:
    size = max(1, -(-len(tasks) // jobs))
    return [tasks[start:start + size] for start in range(0, len(tasks), size)]


def sweep_lemma(ring: RingDescriptor, lemma_id: str,
                grid_denominator: int = DEFAULT_GRID_DENOMINATOR,
                jobs: int = 1, verbose: bool = VERBOSE) -> SweepReport:
    """Test a lemma on every grid point (LEM1), grid pair (LEM2) or equal-norm pair up to D (LEM0).

    Rings other than Gaussian and Eisenstein are swept experimentally, the
    failures are then data about those rings.
    """
    if lemma_id not in LEMMA_IDS:
        raise PreconditionViolated(f"Unknown lemma {lemma_id} !")
    if ring.units_finite is False:
        raise NotImaginary(f"{ring.spec} is not imaginary !")
    if grid_denominator < 1 or jobs < 1:
        raise PreconditionViolated(f"Need D >= 1 and jobs >= 1, got {grid_denominator}, {jobs} !")
    parms = {"experimental": True, "jobs": jobs, "verbose": verbose}
    if lemma_id == "LEM0":
        tasks: list = _lem0_tasks(ring, grid_denominator)
    else:
        tasks = _grid_tasks(lemma_id, grid_denominator)
    if parms["verbose"] is True:
        logger.info("Sweeping %s over %s with %d tasks", lemma_id, ring.spec, len(tasks))

    failures: List[dict] = []
    if jobs == 1 or len(tasks) < 2:
        failures = _check_chunk(ring.d, lemma_id, tasks, parms["experimental"])
    else:
        chunks = _chunks(tasks, jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map keeps chunk order, so failures stay in task order
            for part in pool.map(_check_chunk, [ring.d] * len(chunks),
                                 [lemma_id] * len(chunks), chunks,
                                 [parms["experimental"]] * len(chunks)):
                failures.extend(part)
    if failures:
        logger.warning("%s failed on %d of %d tasks over %s",
                       lemma_id, len(failures), len(tasks), ring.spec)
    return SweepReport(ring=ring.spec, lemma=lemma_id, grid_denominator=grid_denominator,
                       tested=len(tasks), failures=failures)
