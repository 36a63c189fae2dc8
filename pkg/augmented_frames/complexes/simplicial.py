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

"""Finite abstract simplicial complexes on an ordered vertex list."""

from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple

from augmented_frames.utils.exceptions import VertexAbsent
from augmented_frames.utils.unionfind import UnionFind


class SimplicialComplex():
    """Vertices plus per-dimension sorted lists of sorted vertex-index tuples."""

    def __init__(self, vertices: Sequence, simplices: Dict[int, Iterable[Tuple[int, ...]]]):
        self.vertices = list(vertices)
        self.simplices: Dict[int, List[Tuple[int, ...]]] = {}
        for dim, members in simplices.items():
            cleaned = sorted({tuple(sorted(s)) for s in members})
            if cleaned:
                self.simplices[int(dim)] = cleaned
        if self.vertices:
            self.simplices[0] = [(i,) for i in range(len(self.vertices))]

    @classmethod
    def from_facets(cls, vertices: Sequence, facets: Iterable[Sequence[int]]):
        """Downward closure of the given facets."""
        simplices: Dict[int, set] = {}
        for facet in facets:
            facet = tuple(sorted(facet))
            for size in range(1, len(facet) + 1):
                for face in combinations(facet, size):
                    simplices.setdefault(size - 1, set()).add(face)
        return cls(vertices, simplices)

    @property
    def dimension(self) -> int:
        if not self.simplices:
            return -1
        return max(self.simplices)

    def count(self, dim: int) -> int:
        return len(self.simplices.get(dim, []))

    def edges(self) -> List[Tuple[int, ...]]:
        return self.simplices.get(1, [])

    def is_downward_closed(self) -> bool:
        present = {dim: set(members) for dim, members in self.simplices.items()}
        for dim, members in self.simplices.items():
            if dim == 0:
                continue
            for simplex in members:
                for face in combinations(simplex, dim):
                    if face not in present.get(dim - 1, set()):
                        return False
        return True

    def has_simplex(self, indices: Iterable[int]) -> bool:
        simplex = tuple(sorted(indices))
        if not simplex:
            return True
        return simplex in set(self.simplices.get(len(simplex) - 1, []))

    def components(self) -> List[List[int]]:
        """Partition of the vertex indices into connected components."""
        forest = UnionFind(range(len(self.vertices)))
        for i, j in self.edges():
            forest.join(i, j)
        return [sorted(group) for group in forest.groups()]

    def component_of_index(self, index: int) -> List[int]:
        if not 0 <= index < len(self.vertices):
            raise VertexAbsent(f"Vertex index {index} is not in the complex !")
        for group in self.components():
            if index in group:
                return group
        return [index]

    def euler_characteristic(self) -> int:
        return sum((-1) ** dim * len(members) for dim, members in self.simplices.items())
