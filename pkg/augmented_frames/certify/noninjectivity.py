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

"""Certificates that Byk_2(O) -> St_2(K) has a kernel not explained by the relations."""

# pylint: disable=too-many-locals

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Union

import pandas as pd

from augmented_frames.quadring.quadring import RingDescriptor, make_ring
from augmented_frames.quadring.units import generated_by_units, is_unit
from augmented_frames.lattice.vectors import Vector, vector
from augmented_frames.certify.span_classes import unit_span_class
from augmented_frames.certify.detours import \
    DetourCertificate, detour_construct, detour_from_json, flat_checks
from augmented_frames.certify.loops import \
    LoopCertificate, loop_nontrivial_certificate, loop_from_json, first_coordinate_ratio
from augmented_frames.certify.symbols import \
    SymbolChain, apartment_image_2, loop_chain, sqrt7_relation, \
    chain_to_json, chain_from_json, check_basis
from augmented_frames.utils.definitions import NORM_EUCLIDEAN_D, VERBOSE
from augmented_frames.utils.exceptions import FrameError, NotEuclidean, PreconditionViolated
from augmented_frames.utils.string_handling import parse_ring_spec

logger = logging.getLogger(__name__)


@dataclass
class NoCertificate:
    """No kernel element is expected because the units span O additively."""

    ring: RingDescriptor
    reason: str

    def to_json(self) -> dict:
        return {"type": "none", "ring": self.ring.spec, "reason": self.reason}


@dataclass
class NoninjectivityBundle:
    """Detour, the loop it closes up to and the loop's symbol chain with zero apartment image."""

    ring: RingDescriptor
    detour: DetourCertificate
    loop: LoopCertificate
    chain: SymbolChain
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def to_json(self) -> dict:
        return {"type": "noninjectivity",
                "ring": self.ring.spec,
                "detour": self.detour.to_json(),
                "loop": self.loop.to_json(),
                "chain": chain_to_json(self.chain),
                "checks": self.checks,
                "valid": self.valid}


def loop_from_detour(detour: DetourCertificate) -> List[Vector]:
    """e_1 followed by the detour, cut at the first later vertex adjacent to e_1 in another class."""
    ring = detour.ring
    path = detour.path
    start_class = unit_span_class(first_coordinate_ratio(path[0], ring), ring)
    for idx in range(1, len(path)):
        if is_unit(path[idx][1], ring) is False:
            continue
        if unit_span_class(first_coordinate_ratio(path[idx], ring), ring) != start_class:
            return [vector(1, 0)] + list(path[:idx + 1])
    return [vector(1, 0)] + list(path)


def _bundle_checks(ring: RingDescriptor, detour: DetourCertificate,
                   loop: LoopCertificate, chain: SymbolChain) -> Dict[str, bool]:
    try:
        for _, symbol in chain.terms:
            check_basis(symbol, ring)
        bases = True
    except FrameError:
        bases = False
    image = apartment_image_2(chain, ring) if bases else None
    checks: dict = {"detour": detour.valid,
                    "loop": loop.valid,
                    "chain": {"bases": bases,
                              "closes_loop": chain.equals(loop_chain(loop.loop), ring) if bases else False,
                              "apartment_image_zero": image is not None and image.is_zero()}}
    if ring.d == 7 and bases:
        normal = chain.normalized(ring)
        reference = sqrt7_relation().normalized(ring)
        checks["reference"] = {"four_term_relation": normal.equals(reference, ring)
                               or normal.equals(reference.scaled(-1), ring)}
    return flat_checks(checks)


def noninjectivity_report(ring: RingDescriptor,
                          verbose: bool = VERBOSE) -> Union[NoninjectivityBundle, NoCertificate]:
    """Explicit nonzero kernel element of Byk_2(O) -> St_2(K) when O is not generated by units."""
    if ring.norm_euclidean is False:
        raise NotEuclidean(f"{ring.spec} is not norm-Euclidean !")
    if generated_by_units(ring.d):
        return NoCertificate(ring=ring, reason=f"{ring.spec} is additively generated by units, "
                                               f"the presentation is not expected to fail")
    detour = detour_construct(ring, verbose=verbose)
    loop = loop_nontrivial_certificate(ring, loop_from_detour(detour))
    chain = loop_chain(loop.loop)
    bundle = NoninjectivityBundle(ring=ring, detour=detour, loop=loop, chain=chain,
                                  checks=_bundle_checks(ring, detour, loop, chain))
    if verbose is True:
        logger.info("Bundle over %s with a loop of %d vertices is %s",
                    ring.spec, len(loop.loop), "valid" if bundle.valid else "invalid")
    return bundle


def verify_certificate(document: dict) -> bool:
    """Recompute every check of a detour, loop or bundle document from its vectors alone."""
    try:
        kind = document["type"]
        if kind == "detour":
            return detour_from_json(document).valid
        if kind == "loop":
            return loop_from_json(document).valid
        if kind == "noninjectivity":
            ring = make_ring(parse_ring_spec(document["ring"]))
            detour = detour_from_json(document["detour"])
            loop = loop_from_json(document["loop"])
            chain = chain_from_json(document["chain"])
            if detour.ring != ring or loop.ring != ring:
                return False
            return all(_bundle_checks(ring, detour, loop, chain).values())
        if kind == "none":
            ring = make_ring(parse_ring_spec(document["ring"]))
            return generated_by_units(ring.d)
        raise PreconditionViolated(f"Unknown certificate type {kind} !")
    except (KeyError, TypeError) as exc:
        raise PreconditionViolated(f"Malformed certificate document, {exc} !") from exc
    except FrameError as exc:
        if isinstance(exc, PreconditionViolated):
            raise
        logger.warning("Certificate recomputation failed, %s", exc)
        return False


def _table_row(d: int) -> dict:
    ring = make_ring(d)
    report = noninjectivity_report(ring)
    if isinstance(report, NoCertificate):
        return {"d": d, "generated_by_units": True, "certificate": "none",
                "valid": True, "detour_length": None, "loop_length": None}
    return {"d": d, "generated_by_units": False, "certificate": "bundle",
            "valid": report.valid, "detour_length": len(report.detour.path) - 1,
            "loop_length": len(report.loop.loop)}


def noninjectivity_table(ds: Sequence[int] = NORM_EUCLIDEAN_D, jobs: int = 1) -> pd.DataFrame:
    """Certificate summary per d, rows in the order of ds."""
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_table_row, ds))
    else:
        rows = [_table_row(d) for d in ds]
    return pd.DataFrame(rows, columns=["d", "generated_by_units", "certificate",
                                       "valid", "detour_length", "loop_length"])
