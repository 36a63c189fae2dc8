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

"""Utility string mangling for ring specs and exact numbers in JSON documents."""

from fractions import Fraction

from augmented_frames.utils.exceptions import PreconditionViolated


def lchop(string: str = "", prefix: str = "") -> str:
    """Left-chop a string."""
    if prefix and string.startswith(prefix):
        return string[len(prefix):]
    return string


def format_ring_spec(d: int) -> str:
    """Ring spec string as used on the CLI and in JSON, e.g. d=-7."""
    return f"d={d}"


def parse_ring_spec(spec) -> int:
    """Accept d=<int>, a bare integer string or an int."""
    if isinstance(spec, int):
        return spec
    text = lchop(str(spec).strip().replace(" ", ""), "d=")
    try:
        return int(text)
    except ValueError as exc:
        raise PreconditionViolated(f"Ring spec {spec} is not of the form d=<integer> !") from exc


def to_decimal_string(value) -> str:
    """Integers and rationals as exact strings, 3 or -7/2."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_integer_string(text) -> int:
    if isinstance(text, int):
        return text
    try:
        return int(str(text).strip())
    except ValueError as exc:
        raise PreconditionViolated(f"{text} is not a decimal integer string !") from exc


def parse_fraction_string(text) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except ValueError as exc:
        raise PreconditionViolated(f"{text} is not an exact rational string !") from exc
