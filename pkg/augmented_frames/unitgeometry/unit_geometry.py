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

"""Exact planar unit geometry of imaginary quadratic rings.

Distances are squared complex absolute values, i.e. field norms, of
differences in the fraction field. Every comparison is over Fraction.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor
from typing import List, Tuple

from augmented_frames.quadring.quadring import \
    RingDescriptor, RingElement, FieldElement
from augmented_frames.quadring.units import unit_group, is_unit
from augmented_frames.utils.definitions import GAUSS_EISENSTEIN_D
from augmented_frames.utils.exceptions import \
    NotImaginary, PreconditionViolated, NoWitness
from augmented_frames.utils.unionfind import UnionFind


def _require_imaginary(ring: RingDescriptor):
    if ring.units_finite is False:
        raise NotImaginary(f"{ring.spec} is not imaginary !")


def _require_planar_lemma(ring: RingDescriptor, experimental: bool):
    _require_imaginary(ring)
    if experimental is False and ring.d not in GAUSS_EISENSTEIN_D:
        raise PreconditionViolated(f"{ring.spec} is neither Gaussian nor Eisenstein, "
                                   f"pass experimental=True to run anyway !")


def distance_sq(a, b, ring: RingDescriptor) -> Fraction:
    """|a - b|^2 for ring or field elements a and b."""
    diff = FieldElement(Fraction(a.x) - Fraction(b.x), Fraction(a.y) - Fraction(b.y))
    return Fraction(ring.norm(diff))


@dataclass(frozen=True)
class BallGraph:
    """Cayley graph of the units restricted to the open unit ball around center."""

    center: FieldElement
    vertices: Tuple[RingElement, ...]
    edges: Tuple[Tuple[RingElement, RingElement], ...]

    def to_json(self) -> dict:
        return {"center": self.center.to_json(),
                "vertices": [x.to_json() for x in self.vertices],
                "edges": [[a.to_json(), b.to_json()] for a, b in self.edges]}


def lem0_witness(a: RingElement, b: RingElement, ring: RingDescriptor,
                 experimental: bool = False) -> RingElement:
    """First unit u in torsion order with |a - u*b| < |a|."""
    _require_planar_lemma(ring, experimental)
    size = ring.norm(a)
    if size <= 0 or ring.norm(b) != size:
        raise PreconditionViolated(f"Need N(a) = N(b) > 0, got {size} and {ring.norm(b)} !")
    for unit in unit_group(ring).torsion:
        if ring.norm(a - ring.mul(unit, b)) < size:
            return unit
    raise NoWitness(f"No unit reduces {a} against {b} in {ring.spec} !")


def _y_reach(ring: RingDescriptor) -> int:
    """Smallest T with T^2 * (C - B^2/4) >= 1, so |x + y*delta - z| < 1 forces |y - z.y| < T."""
    _, B, C = ring.norm_form
    k = Fraction(C) - Fraction(B * B, 4)
    reach = 1
    while reach * reach * k < 1:
        reach += 1
    return reach


@lru_cache(maxsize=65536)
def _ball_points_cached(z: FieldElement, ring: RingDescriptor) -> Tuple[RingElement, ...]:
    _, B, _ = ring.norm_form
    reach = _y_reach(ring)
    found = []
    for y in range(floor(z.y) - reach, ceil(z.y) + reach + 1):
        # the real part x + B*y/2 - (z.x + B*z.y/2) lies in (-1, 1)
        shift = z.x - Fraction(B, 2) * (y - z.y)
        for x in range(floor(shift) - 1, ceil(shift) + 2):
            if distance_sq(RingElement(x, y), z, ring) < 1:
                found.append(RingElement(x, y))
    return tuple(sorted(found, key=lambda e: (e.x, e.y)))


def ball_points(z: FieldElement, ring: RingDescriptor) -> List[RingElement]:
    """All x in O with |x - z|^2 < 1, sorted by coordinates."""
    _require_imaginary(ring)
    return list(_ball_points_cached(FieldElement(z.x, z.y), ring))


def _ball_graph(z: FieldElement, ring: RingDescriptor) -> BallGraph:
    points = ball_points(z, ring)
    edges = [(points[i], points[j])
             for i in range(len(points)) for j in range(i + 1, len(points))
             if is_unit(points[i] - points[j], ring)]
    return BallGraph(center=FieldElement(z.x, z.y), vertices=tuple(points), edges=tuple(edges))


def ball_graph_components(z: FieldElement, ring: RingDescriptor) -> List[List[RingElement]]:
    graph = _ball_graph(z, ring)
    forest = UnionFind(graph.vertices)
    for a, b in graph.edges:
        forest.join(a, b)
    return [list(group) for group in forest.groups()]


def ball_graph_connected(z: FieldElement, ring: RingDescriptor) -> Tuple[bool, BallGraph]:
    """Connectivity of the unit Cayley graph on the ball; an empty ball is not connected."""
    graph = _ball_graph(z, ring)
    forest = UnionFind(graph.vertices)
    for a, b in graph.edges:
        forest.join(a, b)
    return forest.count() == 1, graph


def lem2_witness(z1: FieldElement, z2: FieldElement, ring: RingDescriptor,
                 experimental: bool = False) -> Tuple[RingElement, RingElement]:
    """First (r1, r2) in sorted ball order with both residues and their sum inside the unit ball."""
    _require_planar_lemma(ring, experimental)
    target = FieldElement(z1.x + z2.x, z1.y + z2.y)
    for r1 in ball_points(z1, ring):
        for r2 in ball_points(z2, ring):
            if distance_sq(r1 + r2, target, ring) < 1:
                return r1, r2
    raise NoWitness(f"No simultaneous residues for {z1}, {z2} in {ring.spec} !")
