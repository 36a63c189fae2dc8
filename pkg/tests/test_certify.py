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

"""Span classes, Farey paths, detours, modular symbols, loops and non-injectivity bundles."""

import copy
import json
import random
from pathlib import Path

import pytest

from augmented_frames.quadring.quadring import RingElement, make_ring
from augmented_frames.quadring.units import unit_group
from augmented_frames.lattice.vectors import Vector, canonical_line, vector
from augmented_frames.certify.span_classes import SpanClass, unit_span_class, is_sum_of_units
from augmented_frames.certify.farey import \
    path_b2z, farey_neighbors, extended_gcd, canonical_zline, det2
from augmented_frames.certify.detours import \
    builtin_detour, detour_construct, detour_verify, detour_from_json
from augmented_frames.certify.symbols import \
    ModularSymbol, SymbolChain, symbol_normalize, apply_relation3, apartment_image_2, \
    sqrt7_relation, loop_chain, chain_from_json, chain_to_json
from augmented_frames.certify.loops import loop_nontrivial_certificate
from augmented_frames.certify.noninjectivity import \
    NoCertificate, NoninjectivityBundle, noninjectivity_report, noninjectivity_table, \
    loop_from_detour, verify_certificate
from augmented_frames.utils.definitions import NORM_EUCLIDEAN_D, NOT_UNIT_GENERATED_D
from augmented_frames.utils.exceptions import \
    PreconditionViolated, MalformedPath, NoDetourExpected, NotABasis, SlotOutOfRange, \
    RankMismatch, MissingPassage, MultiplePassages, NotALoop, NotEuclidean
from augmented_frames.utils.utils import dump_json

GAUSS = make_ring(-1)
SQRT7 = make_ring(7)
DATA = Path(__file__).parent / "data"


def as_document(obj) -> dict:
    return json.loads(dump_json(obj.to_json()))


def random_basis(ring, rng: random.Random, rank: int = 2):
    """Columns of a random product of elementary matrices and unit scalings."""
    columns = [Vector(tuple(RingElement(1 if r == c else 0, 0) for r in range(rank)))
               for c in range(rank)]
    units = unit_group(ring).torsion
    for _ in range(rng.randint(1, 6)):
        i, j = rng.sample(range(rank), 2)
        move = rng.random()
        if move < 0.5:
            factor = RingElement(rng.randint(-2, 2), rng.randint(-2, 2))
            columns[i] = columns[i] + columns[j].scale(factor, ring)
        elif move < 0.8:
            columns[i] = columns[i].scale(rng.choice(units), ring)
        else:
            columns[i], columns[j] = columns[j], columns[i]
    return tuple(columns)


def test_span_classes():
    assert unit_span_class(RingElement(5, 7), GAUSS) == SpanClass(1, 0)
    assert unit_span_class(RingElement(0, 1), make_ring(-2)) == SpanClass(0, 1)
    assert unit_span_class(RingElement(3, 1), SQRT7) == SpanClass(3, 1)
    assert unit_span_class(RingElement(3, 4), SQRT7) == SpanClass(3, 1)
    assert is_sum_of_units(RingElement(8, 3), SQRT7)
    assert is_sum_of_units(RingElement(0, 1), SQRT7) is False
    with pytest.raises(NotEuclidean):
        unit_span_class(RingElement(0, 1), make_ring(-5))


def test_extended_gcd():
    rng = random.Random(8)
    for _ in range(200):
        a, b = rng.randint(-500, 500), rng.randint(-500, 500)
        g, s, t = extended_gcd(a, b)
        assert g >= 0 and s * a + t * b == g
        if g:
            assert a % g == 0 and b % g == 0


def test_farey_neighbors():
    assert farey_neighbors((0, 1), 2) == [(1, -1), (1, 0), (1, 1), (1, -2), (1, 2)]
    for v in [(3, -1), (5, 2), (8, -3)]:
        for w in farey_neighbors(v, 16):
            assert abs(det2(v, w)) == 1
            assert max(abs(w[0]), abs(w[1])) <= 16
    assert canonical_zline((-2, 3)) == (2, -3)
    assert canonical_zline((0, -1)) == (0, 1)


def test_path_b2z():
    assert path_b2z((0, 1), (1, 1)) == [(0, 1), (1, 1)]
    assert path_b2z((0, 1), (0, -1)) == []
    path = path_b2z((8, -3), (0, 1))
    assert path == [(8, -3), (3, -1), (2, -1), (1, -1), (0, 1)]
    assert all(abs(det2(u, v)) == 1 for u, v in zip(path, path[1:]))
    assert (1, 0) not in path
    with pytest.raises(PreconditionViolated):
        path_b2z((1, 0), (0, 1))
    with pytest.raises(PreconditionViolated):
        path_b2z((2, 4), (0, 1))


def test_random_paths_avoid_the_line():
    rng = random.Random(21)
    checked = 0
    while checked < 30:
        start = (rng.randint(-40, 40), rng.randint(-40, 40))
        goal = (rng.randint(-40, 40), rng.randint(-40, 40))
        try:
            path = path_b2z(start, goal)
        except PreconditionViolated:
            continue
        checked += 1
        if not path:
            assert canonical_zline(start) == canonical_zline(goal)
            continue
        assert path[0] == start and path[-1] == goal
        assert all(abs(det2(u, v)) == 1 for u, v in zip(path, path[1:]))
        assert all(canonical_zline(v) != (1, 0) for v in path)


@pytest.mark.parametrize("d", [-2, -7, -11])
def test_builtin_detours(d):
    certificate = builtin_detour(make_ring(d))
    assert certificate.valid
    assert certificate.checks["avoids_e1"] is True
    assert certificate.checks["class_separation"] is True
    assert all(key in certificate.checks for key in ("endpoints/start", "endpoints/end", "edges/0"))
    assert verify_certificate(as_document(certificate))


def test_detour_over_gauss_is_not_separating():
    certificate = detour_verify(GAUSS, [vector((0, 1), 1), vector(0, 1)],
                                RingElement(0, 1), RingElement(0, 0))
    assert certificate.valid is False
    assert certificate.checks["class_separation"] is False
    assert certificate.checks["edges/0"] is True
    assert certificate.checks["avoids_e1"] is True


def test_detour_rejects_malformed_paths():
    ring = make_ring(-2)
    with pytest.raises(MalformedPath):
        detour_verify(ring, [vector((0, 1), 1), vector((0, 1), 1)],
                      RingElement(0, 1), RingElement(0, 1))
    with pytest.raises(MalformedPath):
        detour_verify(ring, [vector((0, 1), 1), vector(2, 0)], RingElement(0, 1), RingElement(0, 0))
    with pytest.raises(MalformedPath):
        detour_verify(ring, [], RingElement(0, 1), RingElement(0, 0))
    with pytest.raises(PreconditionViolated):
        builtin_detour(GAUSS)


def test_detour_construct_real():
    certificate = detour_construct(SQRT7)
    assert certificate.valid
    assert certificate.path[0] == vector((0, 1), 1)
    assert certificate.path[1] == vector(8, -3)
    assert certificate.path[-1] == vector(0, 1)
    assert certificate.classes["span_modulus"] == "3"
    assert detour_from_json(as_document(certificate)).valid


def test_detour_construct_rejects():
    with pytest.raises(NoDetourExpected):
        detour_construct(GAUSS)
    with pytest.raises(NoDetourExpected):
        detour_construct(make_ring(2))
    with pytest.raises(NotEuclidean):
        detour_construct(make_ring(-5))


def test_symbol_normalize():
    e1, e2 = vector(1, 0), vector(0, 1)
    normal = symbol_normalize(ModularSymbol((e2, e1)), GAUSS)
    assert normal.sign == -1
    assert normal.vectors == (vector(-1, 0), vector(0, -1))
    scaled = symbol_normalize(ModularSymbol((vector((0, 1), 0), e2)), GAUSS)
    assert scaled == symbol_normalize(ModularSymbol((e1, e2)), GAUSS)
    assert scaled.sign == 1
    with pytest.raises(NotABasis):
        symbol_normalize(ModularSymbol((e1, vector(1, 2))), GAUSS)


def test_symbol_normalize_is_idempotent():
    rng = random.Random(404)
    for d in (-1, -3, -2, 7):
        ring = make_ring(d)
        for _ in range(100):
            symbol = ModularSymbol(random_basis(ring, rng), rng.choice((1, -1)))
            once = symbol_normalize(symbol, ring)
            assert symbol_normalize(once, ring) == once


def test_apply_relation3():
    e1, e2 = vector(1, 0), vector(0, 1)
    chain = apply_relation3(ModularSymbol((e1, e2)), (0, 1), GAUSS)
    assert chain.terms == [(1, ModularSymbol((vector(1, 1), e2))),
                           (-1, ModularSymbol((vector(1, 1), e1)))]
    with pytest.raises(SlotOutOfRange):
        apply_relation3(ModularSymbol((e1, e2)), (0, 0), GAUSS)
    with pytest.raises(SlotOutOfRange):
        apply_relation3(ModularSymbol((e1, e2)), (0, 2), GAUSS)
    with pytest.raises(PreconditionViolated):
        apply_relation3(ModularSymbol((vector(1),)), (0, 0), GAUSS)


def test_apartment_image_is_a_relation_invariant():
    rng = random.Random(99)
    for d in (-1, -2, -7, 7):
        ring = make_ring(d)
        for _ in range(250):
            symbol = ModularSymbol(random_basis(ring, rng))
            image = apartment_image_2(SymbolChain([(1, symbol)]), ring)
            normal = apartment_image_2(SymbolChain([(1, symbol_normalize(symbol, ring))]), ring)
            rewritten = apartment_image_2(apply_relation3(symbol, rng.sample(range(2), 2), ring),
                                          ring)
            assert normal.coefficients == image.coefficients
            assert rewritten.coefficients == image.coefficients
            assert image.augmentation() == 0


def rewrite_once(chain: SymbolChain, ring, rng: random.Random) -> SymbolChain:
    """Replace one term by an equivalent combination under the symbol relations."""
    terms = list(chain.terms)
    idx = rng.randrange(len(terms))
    coef, symbol = terms.pop(idx)
    move = rng.random()
    if move < 0.25:
        replaced = SymbolChain([(coef, ModularSymbol(symbol.vectors[::-1], -symbol.sign))])
    elif move < 0.5:
        group = unit_group(ring)
        units = list(group.torsion) + ([] if ring.units_finite else [group.fundamental])
        vectors = list(symbol.vectors)
        slot = rng.randrange(len(vectors))
        vectors[slot] = vectors[slot].scale(rng.choice(units), ring)
        replaced = SymbolChain([(coef, ModularSymbol(tuple(vectors), symbol.sign))])
    else:
        replaced = apply_relation3(symbol, rng.sample(range(2), 2), ring).scaled(coef)
    return SymbolChain(terms) + replaced


def test_apartment_image_is_invariant_along_rewrite_chains():
    rng = random.Random(314)
    for d in (-1, -2, -7, 7):
        ring = make_ring(d)
        for _ in range(250):
            chain = SymbolChain([(1, ModularSymbol(random_basis(ring, rng)))])
            image = apartment_image_2(chain, ring)
            for _ in range(10):
                chain = rewrite_once(chain, ring, rng)
            assert apartment_image_2(chain, ring).coefficients == image.coefficients


def test_apartment_image_rejects_other_ranks():
    symbol = ModularSymbol((vector(1, 0, 0), vector(0, 1, 0), vector(0, 0, 1)))
    with pytest.raises(RankMismatch):
        apartment_image_2(SymbolChain([(1, symbol)]), GAUSS)


def test_sqrt7_relation():
    chain = sqrt7_relation()
    assert len(chain.terms) == 4
    assert apartment_image_2(chain, SQRT7).is_zero()
    assert chain.equals(chain.normalized(SQRT7), SQRT7)
    assert not chain.equals(chain.scaled(2), SQRT7)
    stored = json.loads((DATA / "sqrt7_relation.json").read_text(encoding="utf-8"))
    assert chain_from_json(stored["terms"]).equals(chain, SQRT7)
    assert chain_from_json(chain_to_json(chain)).equals(chain, SQRT7)


def test_loop_certificates():
    loop = [vector(1, 0), vector((0, 1), 1), vector(8, -3), vector(3, -1)]
    certificate = loop_nontrivial_certificate(SQRT7, loop)
    assert certificate.valid
    assert certificate.left != certificate.right
    assert loop_chain(loop).equals(sqrt7_relation(), SQRT7)
    trivial = loop_nontrivial_certificate(GAUSS, [vector(1, 0), vector((0, 1), 1), vector(0, 1)])
    assert trivial.valid is False
    assert trivial.checks["class_separation"] is False


def test_loop_rejects():
    with pytest.raises(MissingPassage):
        loop_nontrivial_certificate(SQRT7, [vector((0, 1), 1), vector(8, -3), vector(3, -1)])
    with pytest.raises(MultiplePassages):
        loop_nontrivial_certificate(SQRT7, [vector(1, 0), vector((0, 1), 1), vector(-1, 0),
                                            vector(8, -3)])
    with pytest.raises(NotALoop):
        loop_nontrivial_certificate(GAUSS, [vector(1, 0), vector(0, 1), vector(1, 2)])
    with pytest.raises(NotALoop):
        loop_nontrivial_certificate(GAUSS, [vector(1, 0), vector(0, 1), vector(0, (0, 1))])
    with pytest.raises(NotALoop):
        loop_nontrivial_certificate(GAUSS, [vector(1, 0), vector(0, 1)])


def test_loop_from_detour():
    assert loop_from_detour(detour_construct(SQRT7)) == \
        [vector(1, 0), vector((0, 1), 1), vector(8, -3), vector(3, -1)]
    assert loop_from_detour(builtin_detour(make_ring(-2))) == \
        [vector(1, 0), vector((0, 1), 1), vector(1, (0, -1)), vector(0, 1)]


@pytest.mark.parametrize("d", NOT_UNIT_GENERATED_D)
def test_noninjectivity_bundles(d):
    bundle = noninjectivity_report(make_ring(d))
    assert isinstance(bundle, NoninjectivityBundle)
    assert bundle.valid, bundle.checks
    assert apartment_image_2(bundle.chain, bundle.ring).is_zero()
    assert verify_certificate(as_document(bundle))


@pytest.mark.parametrize("d", sorted(set(NORM_EUCLIDEAN_D) - set(NOT_UNIT_GENERATED_D)))
def test_no_certificate_expected(d):
    report = noninjectivity_report(make_ring(d))
    assert isinstance(report, NoCertificate)
    assert verify_certificate(as_document(report))


def test_sqrt7_bundle_matches_the_four_term_relation():
    bundle = noninjectivity_report(SQRT7)
    assert bundle.checks["reference/four_term_relation"] is True
    assert len(bundle.loop.loop) == 4


def test_verify_certificate_recomputes():
    document = as_document(noninjectivity_report(SQRT7))
    claims_invalid = copy.deepcopy(document)
    claims_invalid["valid"] = False
    assert verify_certificate(claims_invalid) is True
    doubled = copy.deepcopy(document)
    doubled["chain"][0]["coefficient"] = "2"
    assert verify_certificate(doubled) is False
    detour = as_document(builtin_detour(make_ring(-2)))
    detour["r2"] = {"x": "0", "y": "1"}
    assert verify_certificate(detour) is False
    assert verify_certificate({"type": "none", "ring": "d=7"}) is False
    with pytest.raises(PreconditionViolated):
        verify_certificate({"type": "mystery"})
    with pytest.raises(PreconditionViolated):
        verify_certificate({"type": "loop"})


def test_noninjectivity_table():
    table = noninjectivity_table(ds=(-3, -2, 7))
    assert list(table.columns) == ["d", "generated_by_units", "certificate",
                                   "valid", "detour_length", "loop_length"]
    assert list(table["d"]) == [-3, -2, 7]
    assert list(table["certificate"]) == ["none", "bundle", "bundle"]
    assert all(bool(value) for value in table["valid"])
    assert int(table[table["d"] == 7]["loop_length"].iloc[0]) == 4
