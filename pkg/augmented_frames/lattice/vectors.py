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

"""Vectors in O^n, primitive vectors and lines with canonical keys."""

from dataclasses import dataclass
from typing import Tuple

from augmented_frames.quadring.quadring import \
    RingDescriptor, RingElement
from augmented_frames.quadring.units import unit_group, is_unit
from augmented_frames.quadring.division import gcd
from augmented_frames.utils.definitions import MAX_RANK
from augmented_frames.utils.exceptions import \
    ZeroVector, NotPrimitive, RingNotEuclidean, RankTooLarge
from augmented_frames.utils.utils import coordinates_to_key, key_to_hex


@dataclass(frozen=True)
class Vector:
    """Column vector of ring elements."""

    coords: Tuple[RingElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, index: int) -> RingElement:
        return self.coords[index]

    def __add__(self, other: "Vector") -> "Vector":
        return Vector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vector") -> "Vector":
        return Vector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Vector":
        return Vector(tuple(-a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coords)

    def scale(self, unit: RingElement, ring: RingDescriptor) -> "Vector":
        return Vector(tuple(ring.mul(unit, a) for a in self.coords))

    def flat(self) -> Tuple[int, ...]:
        flat = []
        for a in self.coords:
            flat.extend([a.x, a.y])
        return tuple(flat)

    def to_json(self) -> dict:
        return {"coords": [a.to_json() for a in self.coords]}

    @staticmethod
    def from_json(document: dict) -> "Vector":
        return Vector(tuple(RingElement.from_json(a) for a in document["coords"]))


def vector(*coords) -> Vector:
    """Shorthand: ints become rational integers, pairs become x + y*delta."""
    entries = []
    for value in coords:
        if isinstance(value, RingElement):
            entries.append(value)
        elif isinstance(value, int):
            entries.append(RingElement(value, 0))
        else:
            entries.append(RingElement(int(value[0]), int(value[1])))
    return Vector(tuple(entries))


def standard_basis_vector(index: int, rank: int) -> Vector:
    return Vector(tuple(RingElement(1 if i == index else 0, 0) for i in range(rank)))


@dataclass(frozen=True, eq=False)
class Line:
    """Rank one summand spanned by the primitive canonical representative rep."""

    rep: Vector
    key: bytes

    def __eq__(self, other) -> bool:
        return isinstance(other, Line) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other: "Line") -> bool:
        return self.sort_key < other.sort_key

    @property
    def sort_key(self) -> Tuple[int, ...]:
        return self.rep.flat()

    @property
    def rank(self) -> int:
        return len(self.rep)

    def to_json(self) -> dict:
        document = self.rep.to_json()
        document["key"] = key_to_hex(self.key)
        return document


def is_primitive(v: Vector, ring: RingDescriptor) -> bool:
    """True iff the gcd of the coordinates is a unit."""
    if len(v) > MAX_RANK:
        raise RankTooLarge(f"Rank {len(v)} exceeds {MAX_RANK} !")
    if v.is_zero():
        raise ZeroVector("The zero vector is not primitive !")
    if ring.norm_euclidean is False:
        raise RingNotEuclidean(f"{ring.spec} is not norm-Euclidean !")
    content = RingElement(0, 0)
    for a in v.coords:
        if a.is_zero():
            continue
        content = a if content.is_zero() else gcd(content, a, ring)
        if is_unit(content, ring):
            return True
    return is_unit(content, ring)


def _at_least_one(c: RingElement, ring: RingDescriptor) -> bool:
    """sigma_1(c) >= |sigma_2(c)| for c with sigma_1(c) > 0."""
    # sigma_1^2 - sigma_2^2 has the sign of y times the trace
    y = c.y
    t = ring.trace(c)
    return y == 0 or t == 0 or (y > 0) == (t > 0)


def _real_canonical(v: Vector, ring: RingDescriptor) -> Vector:
    """Scale by +-eps^k into the window sigma_1(c)/|sigma_2(c)| in [1, eps^2)."""
    units = unit_group(ring)
    eps = units.fundamental
    eps_inv = ring.conjugate(eps).scaled(ring.norm(eps))
    lead = next(a for a in v.coords if not a.is_zero())
    if ring.real_sign(lead) < 0:
        v = -v
        lead = -lead
    while _at_least_one(lead, ring) is False:
        v = v.scale(eps, ring)
        lead = ring.mul(eps, lead)
    while _at_least_one(ring.mul(eps_inv, lead), ring):
        v = v.scale(eps_inv, ring)
        lead = ring.mul(eps_inv, lead)
    return v


def canonical_line(v: Vector, ring: RingDescriptor) -> Line:
    """Line of a primitive vector with a key constant on unit orbits."""
    if is_primitive(v, ring) is False:
        raise NotPrimitive(f"{v} is not primitive in {ring.spec} !")
    if ring.units_finite:
        rep = min((v.scale(u, ring) for u in unit_group(ring).torsion),
                  key=lambda w: w.flat())
    else:
        rep = _real_canonical(v, ring)
    return Line(rep=rep, key=coordinates_to_key(rep.flat()))


def line_from_json(document: dict, ring: RingDescriptor) -> Line:
    return canonical_line(Vector.from_json(document), ring)
