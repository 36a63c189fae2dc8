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

"""Modular symbols, their chains and the apartment map to formal sums of lines at rank 2."""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

from augmented_frames.quadring.quadring import RingDescriptor
from augmented_frames.quadring.units import is_unit
from augmented_frames.lattice.vectors import Vector, Line, canonical_line, vector
from augmented_frames.lattice.frames import determinant
from augmented_frames.utils.exceptions import \
    NotABasis, SlotOutOfRange, RankMismatch, PreconditionViolated, \
    ZeroVector, NotPrimitive
from augmented_frames.utils.string_handling import \
    to_decimal_string, parse_integer_string
from augmented_frames.utils.utils import permutation_parity

# [[e1, (sqrt7, 1)]] + [[(sqrt7, 1), (8, -3)]] + [[(8, -3), (-3, 1)]] + [[(-3, 1), e1]]
# over d = 7; a symbol [[v1, v2]] maps to <line(v1)> - <line(v2)>
SQRT7_RELATION: Tuple[Tuple[int, Tuple[Tuple[Tuple[int, int], ...], ...]], ...] = (
    (1, (((1, 0), (0, 0)), ((0, 1), (1, 0)))),
    (1, (((0, 1), (1, 0)), ((8, 0), (-3, 0)))),
    (1, (((8, 0), (-3, 0)), ((-3, 0), (1, 0)))),
    (1, (((-3, 0), (1, 0)), ((1, 0), (0, 0)))),
)


@dataclass(frozen=True)
class ModularSymbol:
    """sign * [[v_1, ..., v_n]] for a basis v_1, ..., v_n of O^n."""

    vectors: Tuple[Vector, ...]
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "vectors", tuple(self.vectors))

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def to_json(self) -> dict:
        return {"sign": self.sign, "vectors": [v.to_json() for v in self.vectors]}


def _lines(s: ModularSymbol, ring: RingDescriptor) -> List[Line]:
    try:
        return [canonical_line(v, ring) for v in s.vectors]
    except (ZeroVector, NotPrimitive) as exc:
        raise NotABasis(f"A vector of the symbol is not primitive, {exc}") from exc


def check_basis(s: ModularSymbol, ring: RingDescriptor):
    if s.rank == 0 or any(len(v) != s.rank for v in s.vectors):
        raise NotABasis(f"{s.rank} vectors do not form a square matrix !")
    if is_unit(determinant(s.vectors, ring), ring) is False:
        raise NotABasis("The determinant of the symbol is not a unit !")


def symbol_normalize(s: ModularSymbol, ring: RingDescriptor) -> ModularSymbol:
    """Canonical line reps sorted by key, the sign times the sorting parity."""
    check_basis(s, ring)
    lines = _lines(s, ring)
    order = sorted(range(len(lines)), key=lambda idx: lines[idx].sort_key)
    return ModularSymbol(vectors=tuple(lines[idx].rep for idx in order),
                         sign=s.sign * permutation_parity(order))


def symbol_key(s: ModularSymbol, ring: RingDescriptor) -> Tuple[bytes, ...]:
    return tuple(line.key for line in _lines(s, ring))


@dataclass
class SymbolChain:
    """Integer combination of modular symbols."""

    terms: List[Tuple[int, ModularSymbol]] = field(default_factory=list)

    def __add__(self, other: "SymbolChain") -> "SymbolChain":
        return SymbolChain(self.terms + other.terms)

    def scaled(self, factor: int) -> "SymbolChain":
        return SymbolChain([(factor * coef, s) for coef, s in self.terms])

    def normalized(self, ring: RingDescriptor) -> "SymbolChain":
        """Normalized symbols with signs moved into merged coefficients; zeros dropped."""
        merged: Dict[Tuple[bytes, ...], List] = {}
        for coef, s in self.terms:
            normal = symbol_normalize(s, ring)
            key = symbol_key(normal, ring)
            unsigned = ModularSymbol(normal.vectors, 1)
            if key in merged:
                merged[key][0] += coef * normal.sign
            else:
                merged[key] = [coef * normal.sign, unsigned]
        return SymbolChain([(coef, s) for _, (coef, s) in sorted(merged.items()) if coef != 0])

    def equals(self, other: "SymbolChain", ring: RingDescriptor) -> bool:
        return chain_to_json(self.normalized(ring)) == chain_to_json(other.normalized(ring))


def apply_relation3(s: ModularSymbol, slots: Sequence[int], ring: RingDescriptor) -> SymbolChain:
    """[[.. v_i+v_j @ i, v_j @ j ..]] - [[.. v_i+v_j @ i, v_i @ j ..]], equal to s modulo relations."""
    if s.rank not in (2, 3):
        raise PreconditionViolated(f"Relation rewrites need rank 2 or 3, got {s.rank} !")
    check_basis(s, ring)
    i, j = int(slots[0]), int(slots[1])
    if i == j or not (0 <= i < s.rank and 0 <= j < s.rank):
        raise SlotOutOfRange(f"Slots {(i, j)} do not address two vectors of a rank {s.rank} symbol !")
    total = s.vectors[i] + s.vectors[j]
    kept = list(s.vectors)
    kept[i] = total
    swapped = list(kept)
    swapped[j] = s.vectors[i]
    return SymbolChain([(s.sign, ModularSymbol(tuple(kept))),
                        (-s.sign, ModularSymbol(tuple(swapped)))])


@dataclass
class FormalLineSum:
    """Finitely supported integer combination of lines of K^2."""

    coefficients: Dict[bytes, int] = field(default_factory=dict)
    lines: Dict[bytes, Line] = field(default_factory=dict)

    def add(self, line: Line, coef: int):
        value = self.coefficients.get(line.key, 0) + coef
        if value == 0:
            self.coefficients.pop(line.key, None)
            self.lines.pop(line.key, None)
        else:
            self.coefficients[line.key] = value
            self.lines[line.key] = line

    def is_zero(self) -> bool:
        return not self.coefficients

    def augmentation(self) -> int:
        return sum(self.coefficients.values())

    def to_json(self) -> List[dict]:
        return [{"coefficient": to_decimal_string(self.coefficients[key]),
                 "line": self.lines[key].to_json()}
                for key in sorted(self.coefficients, key=lambda k: self.lines[k].sort_key)]


def apartment_image_2(chain: SymbolChain, ring: RingDescriptor) -> FormalLineSum:
    """Linear extension of sign * [[v1, v2]] -> sign * (<line(v1)> - <line(v2)>)."""
    image = FormalLineSum()
    for coef, s in chain.terms:
        if s.rank != 2:
            raise RankMismatch(f"Apartments at rank 2 only, got a rank {s.rank} symbol !")
        first, second = _lines(s, ring)
        image.add(first, coef * s.sign)
        image.add(second, -coef * s.sign)
    return image


def loop_chain(loop: Sequence[Vector]) -> SymbolChain:
    """Sum of [[v_i, v_(i+1)]] around a closed loop."""
    loop = list(loop)
    return SymbolChain([(1, ModularSymbol((first, second)))
                        for first, second in zip(loop, loop[1:] + loop[:1])])


def sqrt7_relation() -> SymbolChain:
    return SymbolChain([(coef, ModularSymbol(tuple(vector(*coords) for coords in vectors)))
                        for coef, vectors in SQRT7_RELATION])


def chain_to_json(chain: SymbolChain) -> List[dict]:
    """Symbol signs are folded into the coefficients."""
    return [{"coefficient": to_decimal_string(coef * s.sign),
             "vectors": [v.to_json() for v in s.vectors]}
            for coef, s in chain.terms]


def chain_from_json(terms: Iterable[dict]) -> SymbolChain:
    return SymbolChain([(parse_integer_string(term["coefficient"]),
                         ModularSymbol(tuple(Vector.from_json(v) for v in term["vectors"])))
                        for term in terms])
