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

"""Partial frames, augmented partial frames and span tests in O^n."""

# pylint: disable=too-many-locals,too-many-branches

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, List, Optional, Sequence, Tuple

from augmented_frames.quadring.quadring import \
    RingDescriptor, RingElement, FieldElement
from augmented_frames.quadring.units import unit_group, is_unit
from augmented_frames.quadring.division import euclidean_divide
from augmented_frames.lattice.vectors import \
    Vector, Line, canonical_line, is_primitive
from augmented_frames.utils.definitions import \
    DEFAULT_UNIT_WINDOW, STANDARD, ADDITIVE, INTERNAL, EXTERNAL
from augmented_frames.utils.exceptions import \
    NotPrimitive, RingNotEuclidean, DegenerateSimplex, PreconditionViolated
from augmented_frames.utils.utils import permutation_parity


@dataclass(frozen=True)
class AdditiveWitness:
    """lines[i].rep = u1 * lines[j].rep + u2 * lines[k].rep."""

    i: int
    j: int
    k: int
    u1: RingElement
    u2: RingElement

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "k": self.k,
                "u1": self.u1.to_json(), "u2": self.u2.to_json()}

    @staticmethod
    def from_json(document: dict) -> "AdditiveWitness":
        return AdditiveWitness(int(document["i"]), int(document["j"]), int(document["k"]),
                               RingElement.from_json(document["u1"]),
                               RingElement.from_json(document["u2"]))


@dataclass(frozen=True)
class FrameSimplex:
    """A partial frame (STANDARD) or an augmented partial frame (ADDITIVE).

    The witness refers to reps, the representatives the simplex was tested
    on, which are the canonical line representatives unless given otherwise.
    """

    lines: Tuple[Line, ...]
    kind: str
    witness: Optional[AdditiveWitness] = None
    windowed: bool = False
    reps: Tuple[Vector, ...] = ()

    def __post_init__(self):
        if not self.reps:
            object.__setattr__(self, "reps", tuple(line.rep for line in self.lines))

    def verify(self, ring: RingDescriptor) -> bool:
        """Recompute the defining property from the representatives."""
        reps = list(self.reps)
        if self.kind == STANDARD:
            return is_partial_frame(reps, ring)
        wit = self.witness
        if wit is None or not (is_unit(wit.u1, ring) and is_unit(wit.u2, ring)):
            return False
        combined = reps[wit.j].scale(wit.u1, ring) + reps[wit.k].scale(wit.u2, ring)
        rest = [rep for idx, rep in enumerate(reps) if idx != wit.i]
        return combined == reps[wit.i] and is_partial_frame(rest, ring)


def determinant(vectors: Sequence[Vector], ring: RingDescriptor) -> RingElement:
    """Determinant of the square matrix with the given columns, Leibniz expansion."""
    size = len(vectors)
    if any(len(v) != size for v in vectors):
        raise PreconditionViolated(f"{size} vectors do not form a square matrix !")
    total = RingElement(0, 0)
    for order in permutations(range(size)):
        term = RingElement(permutation_parity(order), 0)
        for row, col in enumerate(order):
            term = ring.mul(term, vectors[col][row])
        total = total + term
    return total


def ring_invariant_factors(columns: Sequence[Vector],
                           ring: RingDescriptor) -> List[RingElement]:
    """Diagonal of a Smith form over O of the matrix with the given columns.

    Pivots are nonzero entries of least norm, rows and columns are cleared
    by Euclidean division until no remainder is left. Entries are only
    determined up to units and the divisibility chain is not enforced.
    """
    if ring.norm_euclidean is False:
        raise RingNotEuclidean(f"{ring.spec} is not norm-Euclidean !")
    if len(columns) == 0:
        return []
    n_rows = len(columns[0])
    n_cols = len(columns)
    mat = [[columns[c][r] for c in range(n_cols)] for r in range(n_rows)]
    pivots = []
    top = 0
    while top < min(n_rows, n_cols):
        entries = [(abs(ring.norm(mat[r][c])), r, c)
                   for r in range(top, n_rows) for c in range(top, n_cols)
                   if not mat[r][c].is_zero()]
        if not entries:
            break
        _, row, col = min(entries)
        mat[top], mat[row] = mat[row], mat[top]
        for line in mat:
            line[top], line[col] = line[col], line[top]
        while True:
            pivot = mat[top][top]
            for r in range(top + 1, n_rows):
                if not mat[r][top].is_zero():
                    quotient, _ = euclidean_divide(mat[r][top], pivot, ring)
                    for c in range(top, n_cols):
                        mat[r][c] = mat[r][c] - ring.mul(quotient, mat[top][c])
            for c in range(top + 1, n_cols):
                if not mat[top][c].is_zero():
                    quotient, _ = euclidean_divide(mat[top][c], pivot, ring)
                    for r in range(top, n_rows):
                        mat[r][c] = mat[r][c] - ring.mul(quotient, mat[r][top])
            leftovers = [(abs(ring.norm(mat[r][top])), r, top) for r in range(top + 1, n_rows)
                         if not mat[r][top].is_zero()]
            leftovers += [(abs(ring.norm(mat[top][c])), top, c) for c in range(top + 1, n_cols)
                          if not mat[top][c].is_zero()]
            if not leftovers:
                break
            _, row, col = min(leftovers)
            mat[top], mat[row] = mat[row], mat[top]
            for line in mat:
                line[top], line[col] = line[col], line[top]
        pivots.append(mat[top][top])
        top += 1
    return pivots


def _check_primitive(vectors: Iterable[Vector], ring: RingDescriptor):
    for v in vectors:
        if is_primitive(v, ring) is False:
            raise NotPrimitive(f"{v} is not primitive in {ring.spec} !")


def is_partial_frame(vectors: Sequence[Vector], ring: RingDescriptor) -> bool:
    """True iff the vectors extend to a basis of O^n."""
    if ring.norm_euclidean is False:
        raise RingNotEuclidean(f"{ring.spec} is not norm-Euclidean !")
    vectors = list(vectors)
    if not vectors:
        return True
    _check_primitive(vectors, ring)
    if len(vectors) > len(vectors[0]):
        return False
    pivots = ring_invariant_factors(vectors, ring)
    return len(pivots) == len(vectors) and all(is_unit(p, ring) for p in pivots)


def _solve_pair(target: Vector, first: Vector, second: Vector,
                ring: RingDescriptor) -> Optional[Tuple[FieldElement, FieldElement]]:
    """Coefficients (a, b) over K with target = a*first + b*second, if any."""
    size = len(target)
    for r, s in combinations(range(size), 2):
        det = ring.mul(first[r], second[s]) - ring.mul(first[s], second[r])
        if det.is_zero():
            continue
        a = ring.divide(ring.mul(target[r], second[s]) - ring.mul(target[s], second[r]), det)
        b = ring.divide(ring.mul(first[r], target[s]) - ring.mul(first[s], target[r]), det)
        for t in range(size):
            value = ring.mul(a, first[t].to_field()) + ring.mul(b, second[t].to_field())
            if value != target[t].to_field():
                return None
        return a, b
    return None


def _f_prunes(target: Vector, first: Vector, second: Vector, ring: RingDescriptor) -> bool:
    """For d < 0, |f(v0)| <= |f(v1)| + |f(v2)| forces F(v0) <= 2(F(v1) + F(v2))."""
    if ring.units_finite is False:
        return False
    return F_value(target, ring) > 2 * (F_value(first, ring) + F_value(second, ring))


def additive_witness(reps: Sequence[Vector], ring: RingDescriptor,
                     unit_window: int = DEFAULT_UNIT_WINDOW) -> Optional[AdditiveWitness]:
    """Search an ordering v_i = u1 v_j + u2 v_k with the other vectors a frame.

    Candidates for v_i are tried from the last vector backwards.
    """
    allowed = None
    if ring.units_finite is False:
        allowed = set(unit_group(ring).window(unit_window))
    for i in reversed(range(len(reps))):
        rest = [rep for idx, rep in enumerate(reps) if idx != i]
        if is_partial_frame(rest, ring) is False:
            continue
        others = [idx for idx in range(len(reps)) if idx != i]
        for j, k in combinations(others, 2):
            if _f_prunes(reps[i], reps[j], reps[k], ring):
                continue
            solution = _solve_pair(reps[i], reps[j], reps[k], ring)
            if solution is None:
                continue
            u1, u2 = solution
            if not (u1.is_integral() and u2.is_integral()):
                continue
            u1, u2 = u1.to_ring(), u2.to_ring()
            if not (is_unit(u1, ring) and is_unit(u2, ring)):
                continue
            if allowed is not None and (u1 not in allowed or u2 not in allowed):
                continue
            return AdditiveWitness(i=i, j=j, k=k, u1=u1, u2=u2)
    return None


def is_augmented_frame(vectors: Sequence[Vector], ring: RingDescriptor,
                       unit_window: int = DEFAULT_UNIT_WINDOW) -> Optional[FrameSimplex]:
    """STANDARD if a partial frame, ADDITIVE with witness if augmented, else None."""
    if ring.norm_euclidean is False:
        raise RingNotEuclidean(f"{ring.spec} is not norm-Euclidean !")
    vectors = list(vectors)
    _check_primitive(vectors, ring)
    lines = tuple(canonical_line(v, ring) for v in vectors)
    if len(set(lines)) != len(lines):
        raise DegenerateSimplex("Two vectors span the same line !")
    return frame_simplex(lines, ring, unit_window, reps=vectors)


def frame_simplex(lines: Sequence[Line], ring: RingDescriptor,
                  unit_window: int = DEFAULT_UNIT_WINDOW,
                  reps: Optional[Sequence[Vector]] = None) -> Optional[FrameSimplex]:
    """is_augmented_frame on lines that are known to be distinct."""
    lines = tuple(lines)
    reps = tuple(reps) if reps is not None else tuple(line.rep for line in lines)
    windowed = ring.units_finite is False
    if not lines:
        return FrameSimplex(lines=lines, kind=STANDARD, windowed=windowed)
    rank = lines[0].rank
    if len(lines) <= rank and is_partial_frame(reps, ring):
        return FrameSimplex(lines=lines, kind=STANDARD, windowed=windowed, reps=reps)
    if len(lines) < 3 or len(lines) > rank + 1:
        return None
    witness = additive_witness(reps, ring, unit_window)
    if witness is None:
        return None
    return FrameSimplex(lines=lines, kind=ADDITIVE, witness=witness,
                        windowed=windowed, reps=reps)


def classify_additive(simplex: FrameSimplex, fixed: Iterable[Line]) -> Optional[str]:
    """EXTERNAL if the additive core meets the fixed lines, INTERNAL otherwise."""
    if simplex.kind != ADDITIVE or simplex.witness is None:
        return None
    fixed_keys = {line.key for line in fixed}
    wit = simplex.witness
    core = [simplex.lines[wit.i], simplex.lines[wit.j], simplex.lines[wit.k]]
    if any(line.key in fixed_keys for line in core):
        return EXTERNAL
    return INTERNAL


def rank_over_field(vectors: Sequence[Vector], ring: RingDescriptor) -> int:
    """Rank over K by Gaussian elimination on exact field coordinates."""
    rows = [[a.to_field() for a in v.coords] for v in vectors]
    rank = 0
    if not rows:
        return 0
    n_cols = len(rows[0])
    for col in range(n_cols):
        pivot_row = next((r for r in range(rank, len(rows)) if not rows[r][col].is_zero()), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inverse = ring.inverse(rows[rank][col])
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                factor = ring.mul(rows[r][col], inverse)
                rows[r] = [rows[r][c] - ring.mul(factor, rows[rank][c]) for c in range(n_cols)]
        rank += 1
    return rank


def line_in_span(v, basis: Sequence[Vector], ring: RingDescriptor) -> bool:
    """True iff the representative of v lies in the K-span of basis."""
    rep = v.rep if isinstance(v, Line) else v
    basis = list(basis)
    if not basis:
        return rep.is_zero()
    return rank_over_field(basis + [rep], ring) == rank_over_field(basis, ring)


def f_last(v, ring: RingDescriptor) -> RingElement:
    # pylint: disable=unused-argument
    rep = v.rep if isinstance(v, Line) else v
    return rep[len(rep) - 1]


def F_value(v, ring: RingDescriptor) -> int:
    """|N| of the last coordinate, constant on lines."""
    # pylint: disable=invalid-name
    return abs(ring.norm(f_last(v, ring)))
