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

"""Utilities for hashing coordinates, squarefree tests and JSON output."""

import json
from typing import Iterable

from sympy import factorint


def is_squarefree(value: int) -> bool:
    """True if no prime square divides value; 0 is not squarefree."""
    if value == 0:
        return False
    return all(exponent == 1 for exponent in factorint(abs(value)).values())


def coordinates_to_key(flat: Iterable[int]) -> bytes:
    """Encode a flat integer coordinate tuple to a canonical byte string."""
    return ",".join(str(int(value)) for value in flat).encode("ascii")


def key_to_hex(key: bytes) -> str:
    return key.hex()


def permutation_parity(order) -> int:
    """Sign of a permutation of range(len(order)) given as a sequence."""
    sign = 1
    order = list(order)
    for i, value_i in enumerate(order):
        for value_j in order[i + 1:]:
            if value_i > value_j:
                sign = -sign
    return sign


def dump_json(document) -> str:
    """Deterministic JSON text, byte-reproducible for equal documents."""
    return json.dumps(document, sort_keys=True, indent=2) + "\n"
