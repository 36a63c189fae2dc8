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

"""Paths in the Farey graph B_2(Z) that avoid a given line."""

import logging
from collections import deque
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from augmented_frames.utils.definitions import \
    FAREY_START_BOUND, FAREY_MAX_BOUND, VERBOSE
from augmented_frames.utils.exceptions import PathNotFound, PreconditionViolated

logger = logging.getLogger(__name__)

ZLine = Tuple[int, int]


def canonical_zline(v: Sequence[int]) -> ZLine:
    """Representative of span(v) over Z with first nonzero coordinate positive."""
    p, q = int(v[0]), int(v[1])
    if p < 0 or (p == 0 and q < 0):
        return -p, -q
    return p, q


def det2(u: Sequence[int], v: Sequence[int]) -> int:
    return int(u[0]) * int(v[1]) - int(u[1]) * int(v[0])


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
        old_t, t = t, old_t - quotient * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _t_range(base: int, step: int, bound: int) -> Optional[Tuple[Optional[int], Optional[int]]]:
    """Integers t with |base + t*step| <= bound as (lo, hi), None meaning unbounded."""
    if step == 0:
        return (None, None) if abs(base) <= bound else None
    if step < 0:
        base, step = -base, -step
    return -((bound + base) // step), (bound - base) // step


def farey_neighbors(v: ZLine, bound: int) -> List[ZLine]:
    """Lines span(r, s) with det(v, (r, s)) = +-1 and max(|r|, |s|) <= bound."""
    p, q = v
    _, alpha, beta = extended_gcd(p, q)
    # p*s - q*r = 1 along (r, s) = (-beta + t*p, alpha + t*q)
    first = _t_range(-beta, p, bound)
    second = _t_range(alpha, q, bound)
    if first is None or second is None:
        return []
    lows = [value for value in (first[0], second[0]) if value is not None]
    highs = [value for value in (first[1], second[1]) if value is not None]
    found = set()
    for t in range(max(lows), min(highs) + 1):
        found.add(canonical_zline((-beta + t * p, alpha + t * q)))
    return sorted(found, key=lambda w: (max(abs(w[0]), abs(w[1])), w[0], w[1]))


def _check_zline(v: Sequence[int], name: str):
    if len(v) != 2 or (v[0] == 0 and v[1] == 0) or gcd(int(v[0]), int(v[1])) != 1:
        raise PreconditionViolated(f"{name} = {tuple(v)} is not a primitive vector of Z^2 !")


def _bfs(start: Sequence[int], goal: Sequence[int], forbidden: ZLine,
         bound: int) -> Optional[List[ZLine]]:
    source = canonical_zline(start)
    target = canonical_zline(goal)
    if abs(det2(source, target)) == 1:
        return [source, target]
    parent: Dict[ZLine, Optional[ZLine]] = {source: None}
    queue = deque([source])
    while queue:
        current = queue.popleft()
        for nbor in farey_neighbors(current, bound):
            if nbor == forbidden or nbor in parent:
                continue
            parent[nbor] = current
            if abs(det2(nbor, target)) == 1:
                path = [target, nbor]
                step = parent[nbor]
                while step is not None:
                    path.append(step)
                    step = parent[step]
                return path[::-1]
            queue.append(nbor)
    return None


def path_b2z(start: Sequence[int], goal: Sequence[int], avoid: Sequence[int] = (1, 0),
             max_bound: int = FAREY_MAX_BOUND, verbose: bool = VERBOSE) -> List[ZLine]:
    """Simplicial path from span(start) to span(goal) in B_2(Z) minus span(avoid).

    Breadth-first search in the Farey graph truncated at max(|p|, |q|) <= bound,
    the bound doubling from 8 until max_bound. The endpoints keep the given
    signs, inner vertices have first nonzero coordinate positive.
    """
    for name, v in (("start", start), ("goal", goal), ("avoid", avoid)):
        _check_zline(v, name)
    forbidden = canonical_zline(avoid)
    if forbidden in (canonical_zline(start), canonical_zline(goal)):
        raise PreconditionViolated(f"An endpoint spans the avoided line {forbidden} !")
    if canonical_zline(start) == canonical_zline(goal):
        return []
    needed = max(abs(int(c)) for c in tuple(start) + tuple(goal))
    bound = FAREY_START_BOUND
    while bound < needed:
        bound *= 2
    while bound <= max_bound:
        path = _bfs(start, goal, forbidden, bound)
        if path is not None:
            if verbose is True:
                logger.info("Found a path of length %d at bound %d", len(path) - 1, bound)
            path[0] = (int(start[0]), int(start[1]))
            path[-1] = (int(goal[0]), int(goal[1]))
            return path
        bound *= 2
    raise PathNotFound(f"No path from {tuple(start)} to {tuple(goal)} up to bound {max_bound} !")
