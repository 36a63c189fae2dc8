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

"""Disjoint-set forest for connectivity questions on vertices and lattice points."""

from typing import Dict, Hashable, Iterable, List


class UnionFind():
    """Union by rank with grandparent path compression.

    Nodes are added lazily on first use. groups() reports the classes in
    the order in which their first member was added.
    """

    def __init__(self, nodes: Iterable[Hashable] = ()):
        self.parent: Dict[Hashable, Hashable] = {}
        self.rank: Dict[Hashable, int] = {}
        self.order: Dict[Hashable, int] = {}
        for node in nodes:
            self.find(node)

    def find(self, node: Hashable) -> Hashable:
        """Get the representative of the class of node."""
        if node not in self.parent:
            self.parent[node] = node
            self.rank[node] = 0
            self.order[node] = len(self.order)
            return node
        while self.parent[node] != node:
            grandparent = self.parent[self.parent[node]]
            self.parent[node] = grandparent
            node = grandparent
        return node

    def join(self, node_a: Hashable, node_b: Hashable) -> bool:
        """Merge two classes, False if they were already one."""
        root_a = self.find(node_a)
        root_b = self.find(node_b)
        if root_a == root_b:
            return False
        if self.rank[root_a] < self.rank[root_b]:
            root_a, root_b = root_b, root_a
        self.parent[root_b] = root_a
        if self.rank[root_a] == self.rank[root_b]:
            self.rank[root_a] += 1
        return True

    def connected(self, node_a: Hashable, node_b: Hashable) -> bool:
        return self.find(node_a) == self.find(node_b)

    def groups(self) -> List[List[Hashable]]:
        """Partition of all nodes seen so far."""
        members: Dict[Hashable, List[Hashable]] = {}
        for node in sorted(self.parent, key=lambda item: self.order[item]):
            members.setdefault(self.find(node), []).append(node)
        return list(members.values())

    def count(self) -> int:
        return len({self.find(node) for node in self.parent})
