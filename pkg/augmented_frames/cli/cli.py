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

"""Command line front end, JSON on stdout and logs on stderr."""

# pylint: disable=too-many-return-statements

import argparse
import json
import logging
import sys
from typing import Callable, Optional, Sequence, Tuple

import pandas as pd

from augmented_frames.quadring.quadring import RingElement, make_ring
from augmented_frames.quadring.units import unit_group, classification_table
from augmented_frames.unitgeometry.sweeps import sweep_lemma
from augmented_frames.complexes.frame_complex import build_complex
from augmented_frames.complexes.complex_io import complex_to_json, complex_from_json
from augmented_frames.homology.homology import reduced_homology
from augmented_frames.lattice.vectors import Vector
from augmented_frames.certify.detours import builtin_detour, detour_construct, detour_verify
from augmented_frames.certify.symbols import \
    SymbolChain, apartment_image_2, chain_from_json, chain_to_json
from augmented_frames.certify.noninjectivity import \
    NoCertificate, noninjectivity_report, noninjectivity_table, verify_certificate
from augmented_frames.utils.definitions import \
    EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, KIND_B, KIND_BA, \
    DEFAULT_GRID_DENOMINATOR, DEFAULT_UNIT_WINDOW, DEFAULT_VERTEX_CAP
from augmented_frames.utils.exceptions import FrameError, PreconditionViolated
from augmented_frames.utils.string_handling import parse_ring_spec
from augmented_frames.utils.utils import dump_json

logger = logging.getLogger(__name__)

Result = Tuple[object, int]


def _emit(document, out: Optional[str] = None):
    text = dump_json(document)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _load(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _ring(args):
    return make_ring(parse_ring_spec(args.d))


def cmd_ring_info(args) -> Result:
    ring = _ring(args)
    document = {"ring": ring.describe()}
    if ring.norm_euclidean or ring.units_finite:
        document["units"] = unit_group(ring).to_json()
    return document, EXIT_OK


def cmd_classify(args) -> Result:
    table = classification_table(args.dmin, args.dmax)
    rows = []
    for row in table.itertuples(index=False):
        modulus = None if pd.isna(row.span_modulus) else str(int(row.span_modulus))
        rows.append({"d": int(row.d),
                     "norm_euclidean": bool(row.norm_euclidean),
                     "generated_by_units": bool(row.generated_by_units),
                     "span_modulus": modulus})
    return {"rows": rows}, EXIT_OK


def cmd_verify(args) -> Result:
    report = sweep_lemma(_ring(args), args.lemma.upper(), args.grid, jobs=args.jobs,
                         verbose=args.verbose)
    return report.to_json(), EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_complex_build(args) -> Result:
    cx = build_complex(_ring(args), args.n, args.m, args.bound, kind=args.kind,
                       unit_window=args.unit_window, vertex_cap=args.vertex_cap,
                       verbose=args.verbose)
    document = complex_to_json(cx)
    if args.out is None:
        return document, EXIT_OK if cx.verify() else EXIT_CHECK_FAILED
    _emit(document, args.out)
    summary = {"out": args.out,
               "vertices": len(cx.vertices),
               "simplices": {str(dim): len(members) for dim, members in sorted(cx.simplices.items())},
               "verified": cx.verify()}
    return summary, EXIT_OK if summary["verified"] else EXIT_CHECK_FAILED


def cmd_homology(args) -> Result:
    cx = complex_from_json(_load(args.infile))
    return reduced_homology(cx, verbose=args.verbose).to_json(), EXIT_OK


def cmd_detour(args) -> Result:
    ring = _ring(args)
    if args.action == "builtin":
        certificate = builtin_detour(ring)
    elif args.action == "construct":
        certificate = detour_construct(ring, verbose=args.verbose)
    else:
        if args.path is None:
            raise PreconditionViolated("detour verify needs --path !")
        document = _load(args.path)
        certificate = detour_verify(ring, [Vector.from_json(v) for v in document["path"]],
                                    RingElement.from_json(document["r1"]),
                                    RingElement.from_json(document["r2"]))
    return certificate.to_json(), EXIT_OK if certificate.valid else EXIT_CHECK_FAILED


def cmd_byk_check(args) -> Result:
    document = _load(args.infile)
    if isinstance(document, dict):
        spec = document.get("ring", args.d)
        terms = document.get("terms", document.get("chain", []))
    else:
        spec, terms = args.d, document
    if spec is None:
        raise PreconditionViolated("The chain file names no ring, pass -d !")
    ring = make_ring(parse_ring_spec(spec))
    chain: SymbolChain = chain_from_json(terms)
    image = apartment_image_2(chain, ring)
    result = {"ring": ring.spec,
              "normalized": chain_to_json(chain.normalized(ring)),
              "apartment_image": image.to_json(),
              "in_kernel": image.is_zero()}
    return result, EXIT_OK if image.is_zero() else EXIT_CHECK_FAILED


def cmd_certify(args) -> Result:
    if args.action == "noninj":
        report = noninjectivity_report(_ring(args), verbose=args.verbose)
        if isinstance(report, NoCertificate):
            return report.to_json(), EXIT_OK
        return report.to_json(), EXIT_OK if report.valid else EXIT_CHECK_FAILED
    if args.action == "check":
        valid = verify_certificate(_load(args.infile))
        return {"valid": valid}, EXIT_OK if valid else EXIT_CHECK_FAILED
    table = noninjectivity_table(jobs=args.jobs)
    rows = [{"d": int(row.d),
             "generated_by_units": bool(row.generated_by_units),
             "certificate": str(row.certificate),
             "valid": bool(row.valid),
             "detour_length": None if pd.isna(row.detour_length) else int(row.detour_length),
             "loop_length": None if pd.isna(row.loop_length) else int(row.loop_length)}
            for row in table.itertuples(index=False)]
    passed = all(row["valid"] for row in rows)
    return {"rows": rows}, EXIT_OK if passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="augmented_frames",
        description="Exact computations with (augmented) partial frames over quadratic rings.")
    parser.add_argument("--verbose", action="store_true", help="log progress at INFO level")
    commands = parser.add_subparsers(dest="command", required=True)

    ring = commands.add_parser("ring", help="ring descriptor and unit group")
    ring.add_argument("action", choices=["info"])
    ring.add_argument("-d", required=True)
    ring.set_defaults(handler=cmd_ring_info)

    classify = commands.add_parser("classify", help="norm-Euclidean and unit generation table")
    classify.add_argument("--from", dest="dmin", type=int, required=True)
    classify.add_argument("--to", dest="dmax", type=int, required=True)
    classify.set_defaults(handler=cmd_classify)

    verify = commands.add_parser("verify", help="sweep a planar unit lemma")
    verify.add_argument("lemma", choices=["lem0", "lem1", "lem2"])
    verify.add_argument("-d", required=True)
    verify.add_argument("--grid", type=int, default=DEFAULT_GRID_DENOMINATOR)
    verify.add_argument("--jobs", type=int, default=1)
    verify.set_defaults(handler=cmd_verify)

    cplx = commands.add_parser("complex", help="truncated frame complexes")
    cplx.add_argument("action", choices=["build"])
    cplx.add_argument("--kind", choices=[KIND_B, KIND_BA], default=KIND_BA)
    cplx.add_argument("-d", required=True)
    cplx.add_argument("-n", type=int, required=True)
    cplx.add_argument("-m", type=int, default=0)
    cplx.add_argument("--bound", type=int, required=True)
    cplx.add_argument("--unit-window", dest="unit_window", type=int, default=DEFAULT_UNIT_WINDOW)
    cplx.add_argument("--vertex-cap", dest="vertex_cap", type=int, default=DEFAULT_VERTEX_CAP)
    cplx.add_argument("--out", default=None)
    cplx.set_defaults(handler=cmd_complex_build)

    homology = commands.add_parser("homology", help="reduced homology of a complex dump")
    homology.add_argument("--in", dest="infile", required=True)
    homology.set_defaults(handler=cmd_homology)

    detour = commands.add_parser("detour", help="stored, constructed or user supplied detours")
    detour.add_argument("action", choices=["builtin", "construct", "verify"])
    detour.add_argument("-d", required=True)
    detour.add_argument("--path", default=None)
    detour.set_defaults(handler=cmd_detour)

    byk = commands.add_parser("byk", help="apartment image of a symbol chain")
    byk.add_argument("action", choices=["check"])
    byk.add_argument("--in", dest="infile", required=True)
    byk.add_argument("-d", default=None)
    byk.set_defaults(handler=cmd_byk_check)

    certify = commands.add_parser("certify", help="non-injectivity certificates")
    certify.add_argument("action", choices=["noninj", "table", "check"])
    certify.add_argument("-d", default=None)
    certify.add_argument("--in", dest="infile", default=None)
    certify.add_argument("--jobs", type=int, default=1)
    certify.set_defaults(handler=cmd_certify)
    return parser


def _check_certify_args(args):
    if args.command != "certify":
        return
    if args.action == "noninj" and args.d is None:
        raise PreconditionViolated("certify noninj needs -d !")
    if args.action == "check" and args.infile is None:
        raise PreconditionViolated("certify check needs --in !")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, dispatch and print the JSON result; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, force=True,
                        format="%(levelname)s %(name)s: %(message)s")
    handler: Callable[..., Result] = args.handler
    logger.info("Running %s", args.command)
    try:
        _check_certify_args(args)
        document, code = handler(args)
    except (FrameError, OSError, ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    _emit(document)
    return code


def main():
    sys.exit(run(sys.argv[1:]))
