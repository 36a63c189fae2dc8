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

"""Generic definitions when working with frame complexes over quadratic rings."""

# d for which the ring of integers of Q(sqrt(d)) is norm-Euclidean
NORM_EUCLIDEAN_D = (-11, -7, -3, -2, -1, 2, 3, 5, 6, 7, 11, 13, 17, 19,
                    21, 29, 33, 37, 41, 57, 73)
# the subset whose rings are not additively generated by their units
NOT_UNIT_GENERATED_D = (-11, -7, -2, 6, 7, 11, 17, 19, 33, 37, 41, 57, 73)
# imaginary d for which the planar unit lemmas hold
GAUSS_EISENSTEIN_D = (-1, -3)

# basis conventions, delta = (1 + sqrt(d)) / 2 for REM1 and sqrt(d) otherwise
MODE_REM1 = "REM1"
MODE_OTHER = "OTHER"

# brute-force bound on |y| when searching the fundamental unit
PELL_SEARCH_BOUND = 10000
# half widths of the quotient offset boxes tried by euclidean_divide
DIVISION_SEARCH_BOXES = (2, 4)
# rows of quotients scanned beyond the boxes for real quadratic rings
DIVISION_MAX_ROW_OFFSET = 1 << 16

# largest supported rank of O^n
MAX_RANK = 4
# largest supported n + m for truncated frame complexes
MAX_COMPLEX_RANK = 3
# exponents |k| <= K of eps^k tried for augmented frames when d > 0
DEFAULT_UNIT_WINDOW = 3
# refuse to enumerate truncations with more vertices
DEFAULT_VERTEX_CAP = 50000
# largest prime q accepted for finite field flag complexes
MAX_FIELD_SIZE = 7

# Farey graph bound schedule of the B_2(Z) path search
FAREY_START_BOUND = 8
FAREY_MAX_BOUND = 1024

# grid denominator of the lemma sweeps
DEFAULT_GRID_DENOMINATOR = 12
LEMMA_IDS = ("LEM0", "LEM1", "LEM2")

# complex kinds and link variants
KIND_B = "B"
KIND_BA = "BA"
LINK_PLAIN = "PLAIN"
LINK_HAT = "HAT"
LINK_LT = "LT"

# frame simplex kinds
STANDARD = "STANDARD"
ADDITIVE = "ADDITIVE"
INTERNAL = "INTERNAL"
EXTERNAL = "EXTERNAL"

# CLI exit codes
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

VERBOSE = False
