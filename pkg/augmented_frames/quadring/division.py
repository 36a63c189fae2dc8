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

"""Euclidean division, gcd and associate normalization in norm-Euclidean rings."""

from fractions import Fraction
from functools import lru_cache
from math import floor, isqrt
from typing import List, Optional, Tuple

from augmented_frames.quadring.quadring import RingDescriptor, RingElement, FieldElement
from augmented_frames.quadring.units import unit_group
from augmented_frames.utils.definitions import \
    DIVISION_SEARCH_BOXES, DIVISION_MAX_ROW_OFFSET
from augmented_frames.utils.exceptions import \
    DivisionByZero, NotEuclidean, SearchExhausted, BothZero


@lru_cache(maxsize=None)
def _box_offsets(half_width: int) -> List[Tuple[int, int]]:
    """Offsets of a (2C+1)^2 box, closest to the center first."""
    offsets = [(dx, dy)
               for dx in range(-half_width, half_width + 1)
               for dy in range(-half_width, half_width + 1)]
    return sorted(offsets, key=lambda o: (max(abs(o[0]), abs(o[1])), o[0], o[1]))


def _row_candidates(z: FieldElement, row: int, ring: RingDescriptor) -> List[int]:
    """First quotient coordinates X for which |N(z - X - row*delta)| can be below 1.

    With v = z.y - row the norm equals t^2 - c, t = z.x + B*v/2 - X and
    c = disc*v^2/4, so |t| lies within 2 of isqrt(c) whenever it is below 1.
    """
    _, B, _ = ring.norm_form
    v = z.y - row
    middle = floor(z.x + Fraction(B, 2) * v)
    c = Fraction(ring.discriminant, 4) * v * v
    s = isqrt(floor(c)) if c > 0 else 0
    candidates = set(range(middle - 2, middle + 3))
    candidates.update(range(middle - s - 2, middle - s + 3))
    candidates.update(range(middle + s - 2, middle + s + 3))
    return sorted(candidates)


def _row_scan(a: RingElement, b: RingElement, z: FieldElement, center: RingElement,
              ring: RingDescriptor) -> Optional[Tuple[RingElement, RingElement]]:
    """Quotient rows center.y, center.y +- 1, ..., each solved for the first coordinate."""
    bound = abs(ring.norm(b))
    for offset in range(DIVISION_MAX_ROW_OFFSET + 1):
        best = None
        for row in sorted({center.y - offset, center.y + offset}):
            for column in _row_candidates(z, row, ring):
                quotient = RingElement(column, row)
                remainder = a - ring.mul(quotient, b)
                size = abs(ring.norm(remainder))
                if size < bound and (best is None or size < best[0]):
                    best = (size, quotient, remainder)
        if best is not None:
            return best[1], best[2]
    return None


def euclidean_divide(a: RingElement, b: RingElement,
                     ring: RingDescriptor) -> Tuple[RingElement, RingElement]:
    """Quotient and remainder with a = q*b + r and |N(r)| < |N(b)|.

    The quotient is the rounded exact quotient shifted by the offset of
    smallest remainder norm inside the first search box that has one. For
    real quadratic rings the remainder may need a quotient far from the
    rounded one; the rows of quotients are then scanned outwards.
    """
    if b.is_zero():
        raise DivisionByZero(f"Division of {a} by zero in {ring.spec} !")
    if ring.norm_euclidean is False:
        raise NotEuclidean(f"{ring.spec} is not norm-Euclidean !")
    z = ring.divide(a, b)
    center = z.rounded()
    bound = abs(ring.norm(b))
    for half_width in DIVISION_SEARCH_BOXES:
        best = None
        for dx, dy in _box_offsets(half_width):
            quotient = RingElement(center.x + dx, center.y + dy)
            remainder = a - ring.mul(quotient, b)
            size = abs(ring.norm(remainder))
            if size < bound and (best is None or size < best[0]):
                best = (size, quotient, remainder)
                if size == 0:
                    break
        if best is not None:
            return best[1], best[2]
    found = _row_scan(a, b, z, center, ring)
    if found is not None:
        return found
    raise SearchExhausted(f"No quotient for {a} / {b} in {ring.spec} !")


def canonical_associate(a: RingElement, ring: RingDescriptor) -> RingElement:
    """Lexicographically largest unit multiple for finite unit groups, else sign normalized."""
    if ring.units_finite:
        return max((ring.mul(u, a) for u in unit_group(ring).torsion),
                   key=lambda e: (e.x, e.y))
    if a.x < 0 or (a.x == 0 and a.y < 0):
        return -a
    return a


def gcd(a: RingElement, b: RingElement, ring: RingDescriptor) -> RingElement:
    """Canonical greatest common divisor by the Euclidean algorithm."""
    if a.is_zero() and b.is_zero():
        raise BothZero(f"gcd(0, 0) is undefined in {ring.spec} !")
    if ring.norm_euclidean is False:
        raise NotEuclidean(f"{ring.spec} is not norm-Euclidean !")
    while not b.is_zero():
        _, remainder = euclidean_divide(a, b, ring)
        a, b = b, remainder
    return canonical_associate(a, ring)


def divides(a: RingElement, b: RingElement, ring: RingDescriptor) -> bool:
    """True if a divides b."""
    if a.is_zero():
        return b.is_zero()
    return ring.divide(b, a).is_integral()
