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

"""Truncated complexes B_n^m and BA_n^m of (augmented) partial frames and their links."""

# pylint: disable=too-many-arguments,too-many-locals,too-many-instance-attributes,too-many-branches

import logging
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from augmented_frames.quadring.quadring import RingDescriptor, RingElement
from augmented_frames.quadring.units import is_unit
from augmented_frames.lattice.vectors import \
    Vector, Line, canonical_line, is_primitive, standard_basis_vector
from augmented_frames.lattice.frames import \
    FrameSimplex, frame_simplex, is_partial_frame, line_in_span, F_value, \
    classify_additive
from augmented_frames.complexes.simplicial import SimplicialComplex
from augmented_frames.certify.span_classes import SpanClass, unit_span_class
from augmented_frames.utils.definitions import \
    KIND_B, KIND_BA, LINK_PLAIN, LINK_HAT, LINK_LT, STANDARD, ADDITIVE, \
    MAX_COMPLEX_RANK, DEFAULT_UNIT_WINDOW, DEFAULT_VERTEX_CAP, VERBOSE
from augmented_frames.utils.exceptions import \
    RankTooLarge, BoundTooLarge, NotASimplex, VertexAbsent, \
    PreconditionViolated, RingNotEuclidean

logger = logging.getLogger(__name__)


class FrameComplex(SimplicialComplex):
    """Finite truncation of a complex of (augmented) partial frames.

    Vertices are lines of O^(n+m) outside the span of the fixed lines. A
    vertex set sigma is a simplex iff fixed + sigma is a partial frame
    (kind B) or a partial frame or augmented partial frame (kind BA).
    witnesses maps additive simplices to the FrameSimplex of fixed + sigma.
    """

    def __init__(self, ring: RingDescriptor, n: int, m: int, bound: int, kind: str,
                 vertices: Sequence[Line], simplices: Dict[int, Iterable[Tuple[int, ...]]],
                 fixed: Sequence[Line] = (), unit_window: int = DEFAULT_UNIT_WINDOW,
                 witnesses: Optional[Dict[Tuple[int, ...], FrameSimplex]] = None):
        super().__init__(vertices, simplices)
        self.ring = ring
        self.n = n
        self.m = m
        self.bound = bound
        self.kind = kind
        self.fixed = list(fixed)
        self.unit_window = unit_window
        self.witnesses: Dict[Tuple[int, ...], FrameSimplex] = dict(witnesses or {})
        self.truncation_flags = {"bound": bound,
                                 "unit_window": unit_window,
                                 "windowed": ring.units_finite is False}
        self._index = {line.key: idx for idx, line in enumerate(self.vertices)}

    @property
    def rank(self) -> int:
        return self.n + self.m

    def index_of(self, line: Line) -> int:
        if line.key not in self._index:
            raise VertexAbsent(f"Line {line.rep} is not a vertex !")
        return self._index[line.key]

    def contains(self, line: Line) -> bool:
        return line.key in self._index

    def signature(self) -> Tuple[FrozenSet[bytes], FrozenSet[FrozenSet[bytes]]]:
        """Vertex keys and simplex key sets, independent of the vertex order."""
        keys = frozenset(line.key for line in self.vertices)
        faces = frozenset(frozenset(self.vertices[i].key for i in simplex)
                          for dim, members in self.simplices.items() if dim > 0
                          for simplex in members)
        return keys, faces

    def verify(self) -> bool:
        """Downward closure, the vertex span condition and all stored witnesses."""
        if self.is_downward_closed() is False:
            return False
        basis = [line.rep for line in self.fixed]
        if basis and any(line_in_span(line, basis, self.ring) for line in self.vertices):
            return False
        return all(simplex.kind == ADDITIVE and simplex.verify(self.ring)
                   for simplex in self.witnesses.values())

    def additive_classes(self) -> Dict[Tuple[int, ...], Optional[str]]:
        """INTERNAL or EXTERNAL per additive simplex, relative to the fixed lines."""
        return {simplex: classify_additive(frame, self.fixed)
                for simplex, frame in self.witnesses.items()}


def small_elements(ring: RingDescriptor, bound: int) -> List[RingElement]:
    """Ring elements with |N| <= bound; for d > 0 also |x|, |y| <= bound."""
    _, B, C = ring.norm_form
    found = []
    if ring.units_finite:
        # N = (x + By/2)^2 + k*y^2 with k = C - B^2/4 > 0
        k = Fraction(C) - Fraction(B * B, 4)
        y_max = isqrt(int(Fraction(bound) / k)) + 1
        for y in range(-y_max, y_max + 1):
            x_max = isqrt(bound) + abs(B * y) + 1
            for x in range(-x_max, x_max + 1):
                if ring.norm(RingElement(x, y)) <= bound:
                    found.append(RingElement(x, y))
    else:
        for x in range(-bound, bound + 1):
            for y in range(-bound, bound + 1):
                if abs(ring.norm(RingElement(x, y))) <= bound:
                    found.append(RingElement(x, y))
    return sorted(found, key=lambda e: (e.x, e.y))


class _SimplexTester():
    """Cached ambient simplex test of fixed + sigma."""

    def __init__(self, ring: RingDescriptor, kind: str, fixed: Sequence[Line],
                 vertices: Sequence[Line], unit_window: int):
        self.ring = ring
        self.kind = kind
        self.fixed = list(fixed)
        self.vertices = vertices
        self.unit_window = unit_window

    def test(self, indices: Sequence[int]) -> Optional[FrameSimplex]:
        lines = self.fixed + [self.vertices[i] for i in indices]
        if self.kind == KIND_B:
            rank = lines[0].rank
            if len(lines) <= rank and is_partial_frame([line.rep for line in lines], self.ring):
                return FrameSimplex(lines=tuple(lines), kind=STANDARD)
            return None
        return frame_simplex(lines, self.ring, self.unit_window)


def build_complex(ring: RingDescriptor, n: int, m: int, bound: int, kind: str = KIND_BA,
                  unit_window: int = DEFAULT_UNIT_WINDOW,
                  vertex_cap: int = DEFAULT_VERTEX_CAP,
                  verbose: bool = VERBOSE) -> FrameComplex:
    """Truncation of B_n^m or BA_n^m to lines whose canonical coordinates are small."""
    if n + m > MAX_COMPLEX_RANK:
        raise RankTooLarge(f"n + m = {n + m} exceeds {MAX_COMPLEX_RANK} !")
    if n < 1 or m < 0 or bound < 1:
        raise PreconditionViolated(f"Need n >= 1, m >= 0 and bound >= 1, got {n}, {m}, {bound} !")
    if kind not in (KIND_B, KIND_BA):
        raise PreconditionViolated(f"Unknown complex kind {kind} !")
    if ring.norm_euclidean is False:
        raise RingNotEuclidean(f"{ring.spec} is not norm-Euclidean !")
    rank = n + m
    parms = {"bound": bound, "kind": kind, "unit_window": unit_window,
             "vertex_cap": vertex_cap, "verbose": verbose}
    fixed = [canonical_line(standard_basis_vector(i, rank), ring) for i in range(m)]

    elements = small_elements(ring, bound)
    allowed = set(elements)
    candidates: Dict[bytes, Line] = {}
    for coords in product(elements, repeat=rank):
        if all(coords[i].is_zero() for i in range(m, rank)):
            continue
        vec = Vector(coords)
        if is_primitive(vec, ring) is False:
            continue
        line = canonical_line(vec, ring)
        if line.key in candidates or any(a not in allowed for a in line.rep.coords):
            continue
        candidates[line.key] = line
        if len(candidates) > parms["vertex_cap"]:
            raise BoundTooLarge(f"More than {vertex_cap} vertices at bound {bound} !")

    ordered = sorted(candidates.values())
    tester = _SimplexTester(ring, kind, fixed, ordered, unit_window)
    vertices = [line for idx, line in enumerate(ordered) if tester.test([idx]) is not None]
    tester.vertices = vertices
    if parms["verbose"] is True:
        logger.info("Found %d vertices of %s_%d^%d(%s) at bound %d",
                    len(vertices), kind, n, m, ring.spec, bound)

    max_size = n if kind == KIND_B else n + 1
    simplices: Dict[int, List[Tuple[int, ...]]] = {}
    witnesses: Dict[Tuple[int, ...], FrameSimplex] = {}
    adjacency: List[set] = [set() for _ in vertices]
    current = [(i,) for i in range(len(vertices))]
    for size in range(2, max_size + 1):
        present = set(current)
        found = []
        for simplex in current:
            if size == 2:
                pool = range(simplex[0] + 1, len(vertices))
            else:
                pool = sorted(set.intersection(*(adjacency[i] for i in simplex)))
            for extra in pool:
                if extra <= simplex[-1]:
                    continue
                candidate = simplex + (extra,)
                if size > 2 and any(candidate[:pos] + candidate[pos + 1:] not in present
                                    for pos in range(size)):
                    continue
                result = tester.test(candidate)
                if result is None:
                    continue
                found.append(candidate)
                if result.kind == ADDITIVE:
                    witnesses[candidate] = result
                if size == 2:
                    adjacency[candidate[0]].add(candidate[1])
                    adjacency[candidate[1]].add(candidate[0])
        if not found:
            break
        simplices[size - 1] = found
        current = found
        if parms["verbose"] is True:
            logger.info("Found %d simplices of dimension %d", len(found), size - 1)

    return FrameComplex(ring=ring, n=n, m=m, bound=bound, kind=kind,
                        vertices=vertices, simplices=simplices, fixed=fixed,
                        unit_window=unit_window, witnesses=witnesses)


def link(cx: FrameComplex, sigma: Iterable[Line], variant: str = LINK_PLAIN) -> FrameComplex:
    """Link of sigma, optionally restricted to vertices off span(fixed + sigma)
    (HAT) or to vertices of F-value below that of some vertex of sigma (LT).
    """
    if variant not in (LINK_PLAIN, LINK_HAT, LINK_LT):
        raise PreconditionViolated(f"Unknown link variant {variant} !")
    sigma = list(sigma)
    try:
        sigma_idx = sorted(cx.index_of(line) for line in sigma)
    except VertexAbsent as exc:
        raise NotASimplex("A line of sigma is not a vertex !") from exc
    if len(set(sigma_idx)) != len(sigma_idx) or cx.has_simplex(sigma_idx) is False:
        raise NotASimplex(f"Vertices {sigma_idx} do not form a simplex !")
    inside = set(sigma_idx)

    taus = set()
    for members in cx.simplices.values():
        for simplex in members:
            if inside.issubset(simplex) and len(simplex) > len(inside):
                taus.add(tuple(i for i in simplex if i not in inside))
    kept = sorted({tau[0] for tau in taus if len(tau) == 1})

    if variant == LINK_HAT:
        basis = [line.rep for line in cx.fixed] + [cx.vertices[i].rep for i in sigma_idx]
        kept = [i for i in kept if line_in_span(cx.vertices[i], basis, cx.ring) is False]
    elif variant == LINK_LT:
        threshold = max((F_value(cx.vertices[i], cx.ring) for i in sigma_idx), default=0)
        kept = [i for i in kept if F_value(cx.vertices[i], cx.ring) < threshold]

    renumber = {old: new for new, old in enumerate(kept)}
    simplices: Dict[int, List[Tuple[int, ...]]] = {}
    witnesses: Dict[Tuple[int, ...], FrameSimplex] = {}
    for tau in taus:
        if any(i not in renumber for i in tau):
            continue
        new_tau = tuple(renumber[i] for i in tau)
        simplices.setdefault(len(tau) - 1, []).append(new_tau)
        original = tuple(sorted(tau + tuple(sigma_idx)))
        if original in cx.witnesses:
            witnesses[new_tau] = cx.witnesses[original]
    return FrameComplex(ring=cx.ring, n=max(cx.n - len(sigma_idx), 0),
                        m=cx.m + len(sigma_idx), bound=cx.bound, kind=cx.kind,
                        vertices=[cx.vertices[i] for i in kept], simplices=simplices,
                        fixed=cx.fixed + [cx.vertices[i] for i in sigma_idx],
                        unit_window=cx.unit_window, witnesses=witnesses)


def components(cx: SimplicialComplex) -> List[List]:
    """Connected components as lists of vertices."""
    return [[cx.vertices[i] for i in group] for group in cx.components()]


def component_of(cx: FrameComplex, v: Line) -> List[Line]:
    index = cx.index_of(v)
    return [cx.vertices[i] for i in cx.component_of_index(index)]


def unit_span_labels(cx: FrameComplex) -> List[Tuple[SpanClass, ...]]:
    """Per vertex of BA_1^m the unit-span classes of x_1..x_m of the rep (x_1,..,x_m,1)."""
    if cx.n != 1:
        raise PreconditionViolated(f"Labels need n = 1, got n = {cx.n} !")
    labels = []
    for line in cx.vertices:
        last = line.rep[len(line.rep) - 1]
        if is_unit(last, cx.ring) is False:
            raise PreconditionViolated(f"Last coordinate of {line.rep} is not a unit !")
        inverse = cx.ring.inverse(last)
        coords = [cx.ring.mul(a.to_field(), inverse).to_ring()
                  for a in line.rep.coords[:-1]]
        labels.append(tuple(unit_span_class(x, cx.ring) for x in coords))
    return labels


def edge_sum_vertex(cx: FrameComplex, edge: Sequence[int]) -> Tuple[Line, bool]:
    """Line of v1 + v2 for an edge {v1, v2} and whether it is a vertex of the edge link."""
    first, second = sorted(edge)
    if cx.has_simplex((first, second)) is False:
        raise NotASimplex(f"{(first, second)} is not an edge !")
    total = cx.vertices[first].rep + cx.vertices[second].rep
    line = canonical_line(total, cx.ring)
    edge_link = link(cx, [cx.vertices[first], cx.vertices[second]], LINK_PLAIN)
    return line, edge_link.contains(line)
