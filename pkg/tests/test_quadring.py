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

"""Ring arithmetic, units, division and the unit-generation classification."""

import random

import pytest

from augmented_frames.quadring.quadring import RingElement, FieldElement, make_ring
from augmented_frames.quadring.units import \
    unit_group, unit_power, is_unit, generated_by_units, \
    norm_euclidean_classification, classification_table
from augmented_frames.quadring.division import euclidean_divide, gcd, divides
from augmented_frames.utils.definitions import \
    MODE_REM1, MODE_OTHER, NORM_EUCLIDEAN_D, NOT_UNIT_GENERATED_D
from augmented_frames.utils.exceptions import \
    DegenerateD, NotSquarefree, DivisionByZero, BothZero, NotEuclidean


def random_element(rng: random.Random, size: int = 30) -> RingElement:
    return RingElement(rng.randint(-size, size), rng.randint(-size, size))


def test_ring_descriptors():
    gauss = make_ring(-1)
    assert gauss.mode == MODE_OTHER
    assert gauss.delta_sq == (-1, 0)
    assert gauss.norm_form == (1, 0, 1)
    eisenstein = make_ring(-3)
    assert eisenstein.mode == MODE_REM1
    assert eisenstein.delta_sq == (-1, 1)
    assert eisenstein.norm_form == (1, 1, 1)
    golden = make_ring(5)
    assert golden.delta_sq == (1, 1)
    assert golden.norm_form == (1, 1, -1)
    assert golden.discriminant == 5
    assert make_ring(-1).discriminant == -4
    assert make_ring(73).norm_euclidean is True
    assert make_ring(-5).norm_euclidean is False


@pytest.mark.parametrize("d,error", [(0, DegenerateD), (1, DegenerateD),
                                     (12, NotSquarefree), (-4, NotSquarefree)])
def test_make_ring_rejects(d, error):
    with pytest.raises(error):
        make_ring(d)


def test_norm_trace_conjugate():
    gauss = make_ring(-1)
    a = RingElement(1, 2)
    assert gauss.norm(a) == 5
    assert gauss.trace(a) == 2
    assert gauss.conjugate(a) == RingElement(1, -2)
    eisenstein = make_ring(-3)
    rho = eisenstein.delta()
    assert eisenstein.conjugate(rho) == RingElement(1, -1)
    assert eisenstein.mul(rho, eisenstein.conjugate(rho)) == RingElement(1, 0)
    assert eisenstein.trace(rho) == 1


def test_norm_is_multiplicative():
    rng = random.Random(20240511)
    for _ in range(1000):
        ring = make_ring(rng.choice(NORM_EUCLIDEAN_D))
        a, b = random_element(rng), random_element(rng)
        assert ring.norm(ring.mul(a, b)) == ring.norm(a) * ring.norm(b)


def test_field_division_is_exact():
    ring = make_ring(-7)
    a, b = RingElement(3, -1), RingElement(2, 5)
    quotient = ring.divide(a, b)
    assert ring.mul(quotient, b.to_field()) == a.to_field()
    with pytest.raises(DivisionByZero):
        ring.divide(a, ring.zero())


def test_rounding_ties_go_up():
    assert FieldElement(0.5, -0.5).rounded() == RingElement(1, 0)
    assert FieldElement(-1.5, 2.25).rounded() == RingElement(-1, 2)


def test_real_sign():
    golden = make_ring(5)
    assert golden.real_sign(golden.delta()) == 1
    assert golden.real_sign(RingElement(1, -1)) == -1
    root2 = make_ring(2)
    assert root2.real_sign(RingElement(1, -1)) == -1
    assert root2.real_sign(RingElement(3, -2)) == 1
    assert root2.real_sign(RingElement(0, 0)) == 0


def test_torsion_units():
    assert len(unit_group(make_ring(-1)).torsion) == 4
    assert len(unit_group(make_ring(-2)).torsion) == 2
    eisenstein = unit_group(make_ring(-3))
    assert len(eisenstein.torsion) == 6
    assert eisenstein.torsion[5] == RingElement(1, -1)


@pytest.mark.parametrize("d,unit", [(2, (1, 1)), (3, (2, 1)), (5, (0, 1)), (6, (5, 2)),
                                    (7, (8, 3)), (11, (10, 3)), (13, (1, 1)), (17, (3, 2))])
def test_fundamental_units(d, unit):
    ring = make_ring(d)
    eps = unit_group(ring).fundamental
    assert eps == RingElement(*unit)
    assert is_unit(eps, ring)


def test_unit_powers_invert():
    ring = make_ring(7)
    eps = unit_group(ring).fundamental
    for k in range(-3, 4):
        product = ring.mul(unit_power(eps, k, ring), unit_power(eps, -k, ring))
        assert product == ring.one()
    assert len(unit_group(ring).window(2)) == 10


@pytest.mark.parametrize("d,modulus", [(-1, 1), (-3, 1), (-2, 0), (-7, 0), (2, 1), (7, 3), (6, 2)])
def test_span_modulus(d, modulus):
    assert unit_group(make_ring(d)).span_modulus == modulus


@pytest.mark.parametrize("d", [d for d in NORM_EUCLIDEAN_D if d > 0])
def test_unit_span_modulus_divides_unit_powers(d):
    ring = make_ring(d)
    group = unit_group(ring)
    for k in range(-6, 7):
        unit = unit_power(group.fundamental, k, ring)
        assert is_unit(unit, ring)
        assert unit.y % group.span_modulus == 0
        assert (-unit).y % group.span_modulus == 0


@pytest.mark.parametrize("d", NORM_EUCLIDEAN_D)
def test_unit_generation_iff_trivial_span_modulus(d):
    assert generated_by_units(d) is (unit_group(make_ring(d)).span_modulus == 1)


def test_classification_matches_unit_generation():
    not_generated = {d for d in NORM_EUCLIDEAN_D if generated_by_units(d) is False}
    assert not_generated == set(NOT_UNIT_GENERATED_D)
    assert len(not_generated) == 13
    rows = norm_euclidean_classification(-11, 11)
    assert (-1, True, True) in rows
    assert (-5, False, False) in rows
    assert all(d not in (0, 1, -4, 4, 8, 9) for d, _, _ in rows)


def test_classification_table():
    table = classification_table(-3, 7)
    assert list(table.columns) == ["d", "norm_euclidean", "generated_by_units", "span_modulus"]
    row = table[table["d"] == 7].iloc[0]
    assert bool(row["norm_euclidean"]) is True
    assert bool(row["generated_by_units"]) is False
    assert int(row["span_modulus"]) == 3


@pytest.mark.parametrize("d", NORM_EUCLIDEAN_D)
def test_division_contract(d):
    ring = make_ring(d)
    rng = random.Random(1234 + d)
    for _ in range(300):
        a = random_element(rng, rng.choice((30, 500)))
        b = random_element(rng, rng.choice((10, 60)))
        if b.is_zero():
            continue
        quotient, remainder = euclidean_divide(a, b, ring)
        assert ring.mul(quotient, b) + remainder == a
        assert abs(ring.norm(remainder)) < abs(ring.norm(b))


@pytest.mark.parametrize("d,a,b", [(19, (-12, 43), (-8, 1)), (11, (-40, 27), (-5, -10)),
                                   (57, (29, 13), (7, -7)), (73, (45, -39), (1, 8))])
def test_division_far_from_rounded_quotient(d, a, b):
    ring = make_ring(d)
    a, b = RingElement(*a), RingElement(*b)
    quotient, remainder = euclidean_divide(a, b, ring)
    assert ring.mul(quotient, b) + remainder == a
    assert abs(ring.norm(remainder)) < abs(ring.norm(b))
    g = gcd(a, b, ring)
    assert divides(g, a, ring) and divides(g, b, ring)


def test_division_errors():
    with pytest.raises(DivisionByZero):
        euclidean_divide(RingElement(1, 0), RingElement(0, 0), make_ring(-1))
    with pytest.raises(NotEuclidean):
        euclidean_divide(RingElement(1, 0), RingElement(2, 1), make_ring(-5))
    with pytest.raises(BothZero):
        gcd(RingElement(0, 0), RingElement(0, 0), make_ring(-1))


def test_gcd():
    gauss = make_ring(-1)
    assert gcd(RingElement(2, 0), RingElement(1, 1), gauss) == RingElement(1, 1)
    assert gcd(RingElement(3, 0), RingElement(0, 2), gauss) == RingElement(1, 0)
    rng = random.Random(99)
    for _ in range(200):
        ring = make_ring(rng.choice((-2, -1, 2, 3)))
        a, b = random_element(rng, 15), random_element(rng, 15)
        if a.is_zero() and b.is_zero():
            continue
        g = gcd(a, b, ring)
        assert divides(g, a, ring) and divides(g, b, ring)


def test_element_json():
    a = RingElement(-12345678901234567890, 7)
    assert a.to_json() == {"x": "-12345678901234567890", "y": "7"}
    assert RingElement.from_json(a.to_json()) == a
    z = FieldElement(0.5, -3)
    assert z.to_json() == {"x": "1/2", "y": "-3"}
    assert FieldElement.from_json(z.to_json()) == z
