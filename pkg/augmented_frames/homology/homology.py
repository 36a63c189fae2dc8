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

"""Reduced integral homology of finite simplicial complexes."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from augmented_frames.complexes.simplicial import SimplicialComplex
from augmented_frames.homology.boundary import boundary_matrix
from augmented_frames.homology.smith import smith_normal_form
from augmented_frames.utils.definitions import VERBOSE
from augmented_frames.utils.exceptions import EmptyComplex
from augmented_frames.utils.string_handling import to_decimal_string

logger = logging.getLogger(__name__)

EMPTY_NOTE = "reduced H_-1 = Z"


@dataclass(frozen=True)
class DegreeHomology:
    betti: int
    torsion: List[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"betti": self.betti,
                "torsion": [to_decimal_string(t) for t in self.torsion]}


@dataclass
class HomologyProfile:
    """Betti number and torsion coefficients per degree."""

    degrees: Dict[int, DegreeHomology]
    reduced: bool = True
    note: Optional[str] = None

    def betti(self, k: int) -> int:
        return self.degrees[k].betti if k in self.degrees else 0

    def torsion(self, k: int) -> List[int]:
        return self.degrees[k].torsion if k in self.degrees else []

    def betti_numbers(self) -> List[int]:
        if not self.degrees:
            return []
        return [self.betti(k) for k in range(max(self.degrees) + 1)]

    def is_concentrated_in(self, k: int) -> bool:
        return all(hom.betti == 0 and not hom.torsion
                   for degree, hom in self.degrees.items() if degree != k)

    def alternating_sum(self) -> int:
        return sum((-1) ** k * hom.betti for k, hom in self.degrees.items())

    def to_json(self) -> dict:
        document = {"degrees": {str(k): hom.to_json() for k, hom in sorted(self.degrees.items())},
                    "reduced": self.reduced}
        if self.note is not None:
            document["note"] = self.note
        return document


def euler_characteristic(cx: SimplicialComplex) -> int:
    return cx.euler_characteristic()


def euler_identity_holds(profile: HomologyProfile, cx: SimplicialComplex) -> bool:
    """Sum of (-1)^k reduced betti_k equals chi - 1, or -1 + 1 for the empty complex."""
    if not cx.vertices:
        return profile.alternating_sum() == 0
    return profile.alternating_sum() == euler_characteristic(cx) - 1


def reduced_homology(cx: SimplicialComplex, strict: bool = False,
                     verbose: bool = VERBOSE) -> HomologyProfile:
    """Reduced homology from the Smith forms of d_0 (augmentation) up to d_(dim+1) = 0.

    An empty complex raises EmptyComplex when strict, otherwise its profile
    has no degrees and carries the note on H_-1.
    """
    if not cx.vertices:
        if strict is True:
            raise EmptyComplex("The complex has no vertices !")
        return HomologyProfile(degrees={}, reduced=True, note=EMPTY_NOTE)
    top = cx.dimension
    ranks: Dict[int, int] = {}
    factors: Dict[int, List[int]] = {}
    for k in range(top + 1):
        invariants, rank = smith_normal_form(boundary_matrix(cx, k))
        ranks[k] = rank
        factors[k] = invariants
        if verbose is True:
            logger.info("Rank of boundary map d_%d is %d", k, rank)
    ranks[top + 1] = 0
    factors[top + 1] = []
    degrees = {}
    for k in range(top + 1):
        betti = cx.count(k) - ranks[k] - ranks[k + 1]
        torsion = [value for value in factors[k + 1] if value > 1]
        degrees[k] = DegreeHomology(betti=betti, torsion=torsion)
    profile = HomologyProfile(degrees=degrees, reduced=True)
    if euler_identity_holds(profile, cx) is False:
        logger.warning("Euler characteristic identity fails for the computed profile")
    return profile
