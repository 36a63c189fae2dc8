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

"""Detours: paths in B_2(O) off span(e_1) joining lines of different unit-span class."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import flatdict as fd

from augmented_frames.quadring.quadring import RingDescriptor, RingElement, make_ring
from augmented_frames.quadring.units import unit_group, generated_by_units, is_unit
from augmented_frames.lattice.vectors import Vector, canonical_line, vector
from augmented_frames.lattice.frames import determinant
from augmented_frames.certify.farey import path_b2z
from augmented_frames.certify.span_classes import unit_span_class
from augmented_frames.utils.definitions import VERBOSE
from augmented_frames.utils.exceptions import \
    MalformedPath, NoDetourExpected, NotEuclidean, NotPrimitive, ZeroVector, \
    PreconditionViolated
from augmented_frames.utils.string_handling import parse_ring_spec

logger = logging.getLogger(__name__)

# imaginary rings without unit generation, (path, r1, r2) as coordinate pairs
BUILTIN_DETOURS: Dict[int, Tuple[Tuple[Tuple[Tuple[int, int], Tuple[int, int]], ...],
                                 Tuple[int, int], Tuple[int, int]]] = {
    -2: ((((0, 1), (1, 0)), ((1, 0), (0, -1)), ((0, 0), (1, 0))),
         (0, 1), (0, 0)),
    -7: ((((0, 1), (1, 0)), ((3, -1), (0, -1)), ((-1, 2), (1, 0))),
         (0, 1), (-1, 2)),
    -11: ((((0, 1), (1, 0)), ((2, 0), (1, -1)), ((0, 1), (2, 0)),
           ((1, 0), (1, -1)), ((0, 0), (1, 0))),
          (0, 1), (0, 0)),
}


def flat_checks(checks: dict) -> Dict[str, bool]:
    """Nested check verdicts flattened to a/b keys."""
    return {key: bool(value) for key, value in fd.FlatDict(checks, "/").items()}


@dataclass
class DetourCertificate:
    """Path from span(r1, 1) to span(r2, 1) with every claim recomputable."""

    ring: RingDescriptor
    r1: RingElement
    r2: RingElement
    path: List[Vector]
    checks: Dict[str, bool] = field(default_factory=dict)
    classes: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def to_json(self) -> dict:
        return {"type": "detour",
                "ring": self.ring.spec,
                "r1": self.r1.to_json(),
                "r2": self.r2.to_json(),
                "path": [v.to_json() for v in self.path],
                "classes": self.classes,
                "checks": self.checks,
                "valid": self.valid}


def _check_path(path: Sequence[Vector], ring: RingDescriptor):
    """Raise MalformedPath on non-primitive vertices or repeated consecutive lines."""
    lines = []
    for v in path:
        if len(v) != 2:
            raise MalformedPath(f"{v} is not a vector of O^2 !")
        try:
            lines.append(canonical_line(v, ring))
        except ZeroVector as exc:
            raise MalformedPath(f"{v} does not span a line !") from exc
        except NotPrimitive as exc:
            raise MalformedPath(f"{v} is not primitive !") from exc
    for first, second in zip(lines, lines[1:]):
        if first == second:
            raise MalformedPath(f"Consecutive vertices {first.rep} repeat a line !")
    return lines


def detour_verify(ring: RingDescriptor, path: Sequence[Vector],
                  r1: RingElement, r2: RingElement) -> DetourCertificate:
    """Evaluate unit edge determinants, e_1 avoidance, endpoints and class separation."""
    if ring.norm_euclidean is False:
        raise NotEuclidean(f"{ring.spec} is not norm-Euclidean !")
    path = list(path)
    if not path:
        raise MalformedPath("The path is empty !")
    lines = _check_path(path, ring)
    e1 = canonical_line(vector(1, 0), ring)
    checks: dict = {}
    if len(path) > 1:
        checks["edges"] = {str(idx): is_unit(determinant([first, second], ring), ring)
                           for idx, (first, second) in enumerate(zip(path, path[1:]))}
    checks["avoids_e1"] = all(line != e1 for line in lines)
    checks["endpoints"] = {
        "start": lines[0] == canonical_line(Vector((r1, ring.one())), ring),
        "end": lines[-1] == canonical_line(Vector((r2, ring.one())), ring)}
    first_class = unit_span_class(r1, ring)
    second_class = unit_span_class(r2, ring)
    difference = unit_span_class(r1 - r2, ring)
    checks["class_separation"] = difference.trivial is False
    classes = {"r1": first_class.to_json(),
               "r2": second_class.to_json(),
               "span_modulus": str(unit_group(ring).span_modulus)}
    return DetourCertificate(ring=ring, r1=r1, r2=r2, path=path,
                             checks=flat_checks(checks), classes=classes)


def builtin_detour(ring: RingDescriptor) -> DetourCertificate:
    """Verified certificate of the stored detour of d = -2, -7 or -11."""
    if ring.d not in BUILTIN_DETOURS:
        raise PreconditionViolated(f"No stored detour for {ring.spec} !")
    path, r1, r2 = BUILTIN_DETOURS[ring.d]
    return detour_verify(ring, [vector(*coords) for coords in path],
                         RingElement(*r1), RingElement(*r2))


def detour_construct(ring: RingDescriptor, verbose: bool = VERBOSE) -> DetourCertificate:
    """Edge (delta, 1) -- (a, -b) for the fundamental unit a + b*delta, then a Farey path to (0, 1)."""
    if ring.norm_euclidean is False:
        raise NotEuclidean(f"{ring.spec} is not norm-Euclidean !")
    if generated_by_units(ring.d):
        raise NoDetourExpected(f"{ring.spec} is additively generated by units !")
    if ring.units_finite:
        return builtin_detour(ring)
    eps = unit_group(ring).fundamental
    tail = path_b2z((eps.x, -eps.y), (0, 1), avoid=(1, 0), verbose=verbose)
    path = [Vector((ring.delta(), ring.one()))] + [vector(p, q) for p, q in tail]
    if verbose is True:
        logger.info("Constructed a detour of length %d over %s", len(path) - 1, ring.spec)
    return detour_verify(ring, path, ring.delta(), ring.zero())


def detour_from_json(document: dict) -> DetourCertificate:
    """Recompute a detour certificate from ring spec, path and endpoints only."""
    ring = make_ring(parse_ring_spec(document["ring"]))
    return detour_verify(ring, [Vector.from_json(v) for v in document["path"]],
                         RingElement.from_json(document["r1"]),
                         RingElement.from_json(document["r2"]))
