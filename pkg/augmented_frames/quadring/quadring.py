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

"""Exact arithmetic in the ring of integers of Q(sqrt(d)) and its fraction field."""

# pylint: disable=invalid-name

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor
from typing import Tuple, Union

from augmented_frames.utils.definitions import \
    NORM_EUCLIDEAN_D, MODE_REM1, MODE_OTHER
from augmented_frames.utils.exceptions import \
    NotSquarefree, DegenerateD, DivisionByZero
from augmented_frames.utils.string_handling import \
    format_ring_spec, to_decimal_string, parse_integer_string, \
    parse_fraction_string
from augmented_frames.utils.utils import is_squarefree


@dataclass(frozen=True)
class RingElement:
    """Element x + y*delta of the ring of integers."""

    x: int
    y: int

    def __add__(self, other: "RingElement") -> "RingElement":
        return RingElement(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return RingElement(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "RingElement":
        return RingElement(-self.x, -self.y)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def scaled(self, factor: int) -> "RingElement":
        return RingElement(factor * self.x, factor * self.y)

    def to_field(self) -> "FieldElement":
        return FieldElement(Fraction(self.x), Fraction(self.y))

    def to_json(self) -> dict:
        return {"x": to_decimal_string(self.x), "y": to_decimal_string(self.y)}

    @staticmethod
    def from_json(document: dict) -> "RingElement":
        return RingElement(parse_integer_string(document["x"]),
                           parse_integer_string(document["y"]))


@dataclass(frozen=True)
class FieldElement:
    """Element x + y*delta of the fraction field, x and y rational."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.x, -self.y)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_integral(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1

    def to_ring(self) -> RingElement:
        if not self.is_integral():
            raise ValueError(f"{self} has non-integral coordinates !")
        return RingElement(self.x.numerator, self.y.numerator)

    def rounded(self) -> RingElement:
        """Nearest lattice coordinates, ties rounded up."""
        return RingElement(floor(self.x + Fraction(1, 2)),
                           floor(self.y + Fraction(1, 2)))

    def to_json(self) -> dict:
        return {"x": to_decimal_string(self.x), "y": to_decimal_string(self.y)}

    @staticmethod
    def from_json(document: dict) -> "FieldElement":
        return FieldElement(parse_fraction_string(document["x"]),
                            parse_fraction_string(document["y"]))


Element = Union[RingElement, FieldElement]


@dataclass(frozen=True)
class RingDescriptor:
    """Ring of integers of Q(sqrt(d)) in the basis {1, delta}.

    delta_sq = (p, q) means delta^2 = p + q*delta and
    norm_form = (A, B, C) means N(x + y*delta) = A*x^2 + B*x*y + C*y^2.
    """

    d: int
    mode: str
    delta_sq: Tuple[int, int]
    norm_form: Tuple[int, int, int]
    norm_euclidean: bool
    units_finite: bool

    @property
    def spec(self) -> str:
        return format_ring_spec(self.d)

    @property
    def discriminant(self) -> int:
        """B^2 - 4AC of the norm form, equal to the field discriminant."""
        A, B, C = self.norm_form
        return B * B - 4 * A * C

    def one(self) -> RingElement:
        return RingElement(1, 0)

    def zero(self) -> RingElement:
        return RingElement(0, 0)

    def delta(self) -> RingElement:
        return RingElement(0, 1)

    def mul(self, a: Element, b: Element) -> Element:
        p, q = self.delta_sq
        yy = a.y * b.y
        x = a.x * b.x + p * yy
        y = a.x * b.y + a.y * b.x + q * yy
        if isinstance(a, RingElement) and isinstance(b, RingElement):
            return RingElement(x, y)
        return FieldElement(x, y)

    def norm(self, a: Element):
        A, B, C = self.norm_form
        return A * a.x * a.x + B * a.x * a.y + C * a.y * a.y

    def trace(self, a: Element):
        if self.mode == MODE_REM1:
            return 2 * a.x + a.y
        return 2 * a.x

    def conjugate(self, a: Element) -> Element:
        if self.mode == MODE_REM1:
            if isinstance(a, RingElement):
                return RingElement(a.x + a.y, -a.y)
            return FieldElement(a.x + a.y, -a.y)
        if isinstance(a, RingElement):
            return RingElement(a.x, -a.y)
        return FieldElement(a.x, -a.y)

    def inverse(self, a: Element) -> FieldElement:
        value = self.norm(a)
        if value == 0:
            raise DivisionByZero(f"{a} has no inverse in {self.spec} !")
        conj = self.conjugate(a)
        return FieldElement(Fraction(conj.x) / value, Fraction(conj.y) / value)

    def divide(self, a: Element, b: Element) -> FieldElement:
        """Exact quotient a / b in the fraction field."""
        return self.mul(a.to_field() if isinstance(a, RingElement) else a,
                        self.inverse(b))

    def real_sign(self, a: Element) -> int:
        """Sign of the first real embedding (delta > 0 there), exact.

        Only meaningful for d > 0.
        """
        # sigma_1(a) = P + Q*sqrt(d)
        if self.mode == MODE_REM1:
            P = Fraction(a.x) + Fraction(a.y, 2)
            Q = Fraction(a.y, 2)
        else:
            P = Fraction(a.x)
            Q = Fraction(a.y)
        if P >= 0 and Q >= 0:
            return 0 if (P == 0 and Q == 0) else 1
        if P <= 0 and Q <= 0:
            return -1
        gap = P * P - self.d * Q * Q
        if P > 0:
            return (gap > 0) - (gap < 0)
        return (gap < 0) - (gap > 0)

    def element(self, x: int, y: int = 0) -> RingElement:
        return RingElement(x, y)

    def describe(self) -> dict:
        return {"ring": self.spec,
                "mode": self.mode,
                "delta_sq": [to_decimal_string(v) for v in self.delta_sq],
                "norm_form": [to_decimal_string(v) for v in self.norm_form],
                "norm_euclidean": self.norm_euclidean,
                "units_finite": self.units_finite}


@lru_cache(maxsize=None)
def make_ring(d: int) -> RingDescriptor:
    """Populate the descriptor of the ring of integers of Q(sqrt(d))."""
    if d in (0, 1):
        raise DegenerateD(f"d = {d} does not define a quadratic field !")
    if is_squarefree(d) is False:
        raise NotSquarefree(f"d = {d} is not squarefree !")
    if d % 4 == 1:
        return RingDescriptor(d=d,
                              mode=MODE_REM1,
                              delta_sq=((d - 1) // 4, 1),
                              norm_form=(1, 1, (1 - d) // 4),
                              norm_euclidean=d in NORM_EUCLIDEAN_D,
                              units_finite=d < 0)
    return RingDescriptor(d=d,
                          mode=MODE_OTHER,
                          delta_sq=(d, 0),
                          norm_form=(1, 0, -d),
                          norm_euclidean=d in NORM_EUCLIDEAN_D,
                          units_finite=d < 0)
