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

"""JSON dump and load of truncated frame complexes."""

from typing import Dict, List, Tuple

from augmented_frames.quadring.quadring import make_ring
from augmented_frames.lattice.vectors import Vector, canonical_line, line_from_json
from augmented_frames.lattice.frames import AdditiveWitness, FrameSimplex
from augmented_frames.complexes.frame_complex import FrameComplex
from augmented_frames.utils.definitions import ADDITIVE
from augmented_frames.utils.exceptions import PreconditionViolated
from augmented_frames.utils.string_handling import parse_ring_spec


def complex_to_json(cx: FrameComplex) -> dict:
    """Vertices, simplices of positive dimension, fixed lines and additive witnesses."""
    simplices = {str(dim): [list(simplex) for simplex in members]
                 for dim, members in sorted(cx.simplices.items()) if dim > 0}
    additive = []
    classes = cx.additive_classes()
    for simplex in sorted(cx.witnesses):
        frame = cx.witnesses[simplex]
        additive.append({"simplex": list(simplex),
                         "class": classes[simplex],
                         "reps": [rep.to_json() for rep in frame.reps],
                         "witness": frame.witness.to_json() if frame.witness else None})
    return {"ring": cx.ring.spec,
            "n": cx.n,
            "m": cx.m,
            "bound": cx.bound,
            "kind": cx.kind,
            "unit_window": cx.unit_window,
            "windowed": cx.truncation_flags["windowed"],
            "fixed": [line.to_json() for line in cx.fixed],
            "vertices": [line.to_json() for line in cx.vertices],
            "simplices": simplices,
            "additive": additive}


def complex_from_json(document: dict) -> FrameComplex:
    """Inverse of complex_to_json; the lines are re-canonicalized from their reps."""
    try:
        ring = make_ring(parse_ring_spec(document["ring"]))
        vertices = [line_from_json(entry, ring) for entry in document["vertices"]]
        fixed = [line_from_json(entry, ring) for entry in document.get("fixed", [])]
        simplices: Dict[int, List[Tuple[int, ...]]] = {
            int(dim): [tuple(int(i) for i in simplex) for simplex in members]
            for dim, members in document.get("simplices", {}).items()}
        witnesses: Dict[Tuple[int, ...], FrameSimplex] = {}
        for entry in document.get("additive", []):
            reps = tuple(Vector.from_json(rep) for rep in entry["reps"])
            witness = entry.get("witness")
            witnesses[tuple(int(i) for i in entry["simplex"])] = FrameSimplex(
                lines=tuple(canonical_line(rep, ring) for rep in reps),
                kind=ADDITIVE,
                witness=None if witness is None else AdditiveWitness.from_json(witness),
                windowed=bool(document.get("windowed", False)),
                reps=reps)
        return FrameComplex(ring=ring,
                            n=int(document["n"]),
                            m=int(document["m"]),
                            bound=int(document["bound"]),
                            kind=str(document["kind"]),
                            vertices=vertices,
                            simplices=simplices,
                            fixed=fixed,
                            unit_window=int(document.get("unit_window", 0)),
                            witnesses=witnesses)
    except (KeyError, TypeError) as exc:
        raise PreconditionViolated(f"Malformed complex document, {exc} !") from exc
