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

"""Loops in BA_2(O) through span(e_1) whose homology class is nonzero."""

from dataclasses import dataclass, field
from typing import Dict, List, Sequence

from augmented_frames.quadring.quadring import RingDescriptor, RingElement, make_ring
from augmented_frames.quadring.units import is_unit
from augmented_frames.lattice.vectors import Vector, canonical_line, vector
from augmented_frames.lattice.frames import is_partial_frame
from augmented_frames.certify.span_classes import SpanClass, unit_span_class
from augmented_frames.certify.detours import flat_checks
from augmented_frames.utils.exceptions import \
    MissingPassage, MultiplePassages, NotALoop, NotEuclidean, NotPrimitive, ZeroVector
from augmented_frames.utils.string_handling import parse_ring_spec


@dataclass
class LoopCertificate:
    """Cyclic vertex list with the classes of the two neighbours of span(e_1)."""

    ring: RingDescriptor
    loop: List[Vector]
    left: SpanClass
    right: SpanClass
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def to_json(self) -> dict:
        return {"type": "loop",
                "ring": self.ring.spec,
                "loop": [v.to_json() for v in self.loop],
                "classes": {"left": self.left.to_json(), "right": self.right.to_json()},
                "checks": self.checks,
                "valid": self.valid}


def first_coordinate_ratio(v: Vector, ring: RingDescriptor) -> RingElement:
    """x / y for a neighbour (x, y) of span(e_1), y a unit."""
    return ring.mul(v[0].to_field(), ring.inverse(v[1])).to_ring()


def loop_nontrivial_certificate(ring: RingDescriptor, loop: Sequence[Vector]) -> LoopCertificate:
    """Valid iff the e_1-neighbours lie in different unit-span classes."""
    if ring.norm_euclidean is False:
        raise NotEuclidean(f"{ring.spec} is not norm-Euclidean !")
    loop = list(loop)
    if len(loop) < 3 or any(len(v) != 2 for v in loop):
        raise NotALoop(f"A loop in BA_2 needs at least 3 vertices of O^2, got {len(loop)} !")
    try:
        lines = [canonical_line(v, ring) for v in loop]
    except (ZeroVector, NotPrimitive) as exc:
        raise NotALoop(f"A loop vertex does not span a line, {exc}") from exc
    e1 = canonical_line(vector(1, 0), ring)
    passages = [idx for idx, line in enumerate(lines) if line == e1]
    if not passages:
        raise MissingPassage("The loop does not pass through span(e_1) !")
    if len(passages) > 1:
        raise MultiplePassages(f"The loop passes {len(passages)} times through span(e_1) !")
    if len(set(lines)) != len(lines):
        raise NotALoop("The loop repeats a vertex !")
    edges = {}
    for idx, (first, second) in enumerate(zip(loop, loop[1:] + loop[:1])):
        if is_partial_frame([first, second], ring) is False:
            raise NotALoop(f"Vertices {idx} and {(idx + 1) % len(loop)} do not span an edge !")
        edges[str(idx)] = True
    start = passages[0]
    before = loop[start - 1]
    after = loop[(start + 1) % len(loop)]
    # both neighbours span an edge with e_1, so their second coordinates are units
    left = unit_span_class(first_coordinate_ratio(before, ring), ring)
    right = unit_span_class(first_coordinate_ratio(after, ring), ring)
    checks = {"edges": edges,
              "single_passage": True,
              "neighbour_units": is_unit(before[1], ring) and is_unit(after[1], ring),
              "class_separation": left != right}
    return LoopCertificate(ring=ring, loop=loop, left=left, right=right,
                           checks=flat_checks(checks))


def loop_from_json(document: dict) -> LoopCertificate:
    ring = make_ring(parse_ring_spec(document["ring"]))
    return loop_nontrivial_certificate(ring, [Vector.from_json(v) for v in document["loop"]])
