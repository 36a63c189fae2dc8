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

"""Units, the fundamental unit and the unit-generation classification."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import List, Optional, Tuple

import pandas as pd

from augmented_frames.quadring.quadring import \
    RingDescriptor, RingElement, make_ring
from augmented_frames.utils.definitions import \
    NORM_EUCLIDEAN_D, PELL_SEARCH_BOUND, DEFAULT_UNIT_WINDOW
from augmented_frames.utils.exceptions import \
    FundamentalUnitNotFound, PreconditionViolated
from augmented_frames.utils.utils import is_squarefree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UnitGroup:
    """Torsion units, the fundamental unit for d > 0 and the additive span.

    span_modulus g means the units span Z + Z*g*delta additively,
    g = 0 encodes the span Z and g = 1 the whole ring.
    """

    ring: RingDescriptor
    torsion: Tuple[RingElement, ...]
    fundamental: Optional[RingElement]
    span_modulus: int

    def window(self, unit_window: int = DEFAULT_UNIT_WINDOW) -> List[RingElement]:
        """Units +-eps^k with |k| <= unit_window, or all torsion units for d < 0."""
        if self.fundamental is None:
            return list(self.torsion)
        units = []
        for k in range(-unit_window, unit_window + 1):
            power = unit_power(self.fundamental, k, self.ring)
            units.extend([power, -power])
        return units

    def to_json(self) -> dict:
        return {"ring": self.ring.spec,
                "torsion": [u.to_json() for u in self.torsion],
                "fundamental": None if self.fundamental is None else self.fundamental.to_json(),
                "span_modulus": str(self.span_modulus)}


def is_unit(a: RingElement, ring: RingDescriptor) -> bool:
    return abs(ring.norm(a)) == 1


def unit_power(unit: RingElement, k: int, ring: RingDescriptor) -> RingElement:
    """unit^k for any integer k; negative powers use u^-1 = N(u) * conj(u)."""
    if k < 0:
        base = ring.conjugate(unit).scaled(ring.norm(unit))
        k = -k
    else:
        base = unit
    result = ring.one()
    for _ in range(k):
        result = ring.mul(result, base)
    return result


def _torsion_units(ring: RingDescriptor) -> Tuple[RingElement, ...]:
    """Roots of unity as consecutive powers of a generator."""
    if ring.d in (-1, -3):
        generator = ring.delta()
    else:
        generator = RingElement(-1, 0)
    units = [ring.one()]
    power = ring.mul(ring.one(), generator)
    while power != ring.one():
        units.append(power)
        power = ring.mul(power, generator)
    return tuple(units)


def _fundamental_unit(ring: RingDescriptor, search_bound: int) -> RingElement:
    """Brute-force the norm-form equation = +-1 over y = 1..search_bound.

    Among the solutions with the smallest y > 0 the fundamental unit is the
    one above 1 in the first real embedding with the smallest trace.
    """
    _, B, _ = ring.norm_form
    disc = ring.discriminant
    for y in range(1, search_bound + 1):
        candidates = []
        for target in (1, -1):
            # x^2 + Bxy + Cy^2 = target  <=>  (2x + By)^2 = disc*y^2 + 4*target
            square = disc * y * y + 4 * target
            if square < 0:
                continue
            root = isqrt(square)
            if root * root != square:
                continue
            for numerator in (-B * y + root, -B * y - root):
                if numerator % 2 == 0:
                    candidates.append(RingElement(numerator // 2, y))
        above_one = [u for u in candidates
                     if ring.real_sign(u - ring.one()) > 0]
        if above_one:
            return min(above_one, key=ring.trace)
    raise FundamentalUnitNotFound(f"No unit with |y| <= {search_bound} in {ring.spec} !")


@lru_cache(maxsize=None)
def unit_group(ring: RingDescriptor, search_bound: int = PELL_SEARCH_BOUND) -> UnitGroup:
    """Torsion list, fundamental unit (d > 0) and additive unit span."""
    torsion = _torsion_units(ring)
    if ring.units_finite:
        modulus = 1 if ring.d in (-1, -3) else 0
        return UnitGroup(ring=ring, torsion=torsion, fundamental=None,
                         span_modulus=modulus)
    fundamental = _fundamental_unit(ring, search_bound)
    logger.info("Found fundamental unit %s + %s*delta for %s",
                fundamental.x, fundamental.y, ring.spec)
    return UnitGroup(ring=ring, torsion=torsion, fundamental=fundamental,
                     span_modulus=abs(fundamental.y))


def generated_by_units(d: int) -> bool:
    """Ashrafi-Vamos criterion for additive generation by units."""
    if is_squarefree(d) is False:
        raise PreconditionViolated(f"d = {d} is not squarefree !")
    if d < 0:
        return d in (-3, -1)
    shifts = (4,) if d % 4 == 1 else (1,)
    for shift in shifts:
        for candidate in (d - shift, d + shift):
            if candidate >= 0 and isqrt(candidate) ** 2 == candidate:
                return True
    return False


def norm_euclidean_classification(dmin: int, dmax: int) -> List[Tuple[int, bool, bool]]:
    """Rows (d, norm_euclidean, generated_by_units) for squarefree d in [dmin, dmax]."""
    if dmin > dmax:
        raise PreconditionViolated(f"Range [{dmin}, {dmax}] is empty !")
    rows = []
    for d in range(dmin, dmax + 1):
        if d in (0, 1) or is_squarefree(d) is False:
            continue
        rows.append((d, d in NORM_EUCLIDEAN_D, generated_by_units(d)))
    return rows


def classification_table(dmin: int, dmax: int) -> pd.DataFrame:
    """Classification rows as a table, span modulus for norm-Euclidean rows."""
    records = []
    for d, euclidean, generated in norm_euclidean_classification(dmin, dmax):
        modulus = None
        if euclidean:
            modulus = unit_group(make_ring(d)).span_modulus
        records.append({"d": d,
                        "norm_euclidean": euclidean,
                        "generated_by_units": generated,
                        "span_modulus": modulus})
    return pd.DataFrame(records, columns=["d", "norm_euclidean",
                                          "generated_by_units", "span_modulus"])
