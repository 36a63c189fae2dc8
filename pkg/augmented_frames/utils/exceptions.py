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

"""Exceptions raised on invalid input or unsupported requests."""


class FrameError(ValueError):
    """Base class of all errors raised by augmented_frames."""


class NotSquarefree(FrameError):
    """The integer d is not squarefree."""


class DegenerateD(FrameError):
    """d is 0 or 1."""


class DivisionByZero(FrameError, ArithmeticError):
    """Division by the zero element."""


class NotEuclidean(FrameError):
    """The ring is not norm-Euclidean."""


class RingNotEuclidean(NotEuclidean):
    """A lattice predicate was requested over a ring that is not norm-Euclidean."""


class SearchExhausted(FrameError):
    """No quotient with smaller remainder inside the search boxes."""


class BothZero(FrameError):
    """gcd(0, 0) is undefined."""


class FundamentalUnitNotFound(FrameError):
    """The Pell search bound is too small."""


class PreconditionViolated(FrameError):
    """An input does not satisfy the documented precondition."""


class NoWitness(FrameError):
    """No witness exists, a counterexample to the tested statement."""


class NotImaginary(FrameError):
    """The operation needs d < 0."""


class ZeroVector(FrameError):
    """The zero vector has no line."""


class NotPrimitive(FrameError):
    """The coordinates of the vector have a non-unit common divisor."""


class DegenerateSimplex(FrameError):
    """Two of the given vectors span the same line."""


class RankTooLarge(FrameError):
    """The requested rank exceeds the supported range."""


class BoundTooLarge(FrameError):
    """The truncation has more vertices than the cap allows."""


class NotASimplex(FrameError):
    """The given set of lines is not a simplex of the complex."""


class VertexAbsent(FrameError):
    """The line is not a vertex of the complex."""


class QTooLarge(FrameError):
    """The finite field is too large."""


class EmptyComplex(FrameError):
    """The complex has no vertices."""


class MalformedPath(FrameError):
    """A path vertex is not primitive or repeats its predecessor."""


class PathNotFound(FrameError):
    """The bound schedule was exhausted before a path was found."""


class NoDetourExpected(FrameError):
    """The ring is additively generated by units."""


class NotABasis(FrameError):
    """The vectors of a symbol do not form a basis."""


class SlotOutOfRange(FrameError):
    """The slot pair does not address two distinct vectors of the symbol."""


class RankMismatch(FrameError):
    """The apartment map at rank 2 received a symbol of another rank."""


class MissingPassage(FrameError):
    """The loop never visits span(e_1)."""


class MultiplePassages(FrameError):
    """The loop visits span(e_1) more than once."""


class NotALoop(FrameError):
    """Consecutive loop vertices do not span a simplex of BA_2."""
