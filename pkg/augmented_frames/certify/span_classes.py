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

"""Residue classes of O modulo the additive span of its units."""

from dataclasses import dataclass

from augmented_frames.quadring.quadring import RingDescriptor, RingElement
from augmented_frames.quadring.units import unit_group
from augmented_frames.utils.exceptions import NotEuclidean


@dataclass(frozen=True)
class SpanClass:
    """Class of x in O / (Z + Z*modulus*delta); modulus 0 keeps the full delta part."""

    modulus: int
    residue: int

    @property
    def trivial(self) -> bool:
        return self.residue == 0

    def to_json(self) -> dict:
        return {"modulus": str(self.modulus), "residue": str(self.residue)}


def unit_span_class(x: RingElement, ring: RingDescriptor) -> SpanClass:
    """Residue of x modulo the sums of units, read off the delta coefficient."""
    if ring.norm_euclidean is False:
        raise NotEuclidean(f"{ring.spec} is not norm-Euclidean !")
    modulus = unit_group(ring).span_modulus
    if modulus == 1:
        return SpanClass(modulus=1, residue=0)
    if modulus == 0:
        return SpanClass(modulus=0, residue=x.y)
    return SpanClass(modulus=modulus, residue=x.y % modulus)


def is_sum_of_units(x: RingElement, ring: RingDescriptor) -> bool:
    return unit_span_class(x, ring).residue == 0
