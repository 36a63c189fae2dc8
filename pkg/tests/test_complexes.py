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

"""Truncated frame complexes, links, components and the Tits buildings over F_q."""

import pytest

from augmented_frames.quadring.quadring import make_ring
from augmented_frames.lattice.vectors import canonical_line, vector
from augmented_frames.complexes.simplicial import SimplicialComplex
from augmented_frames.complexes.frame_complex import \
    build_complex, link, components, component_of, unit_span_labels, \
    edge_sum_vertex, small_elements
from augmented_frames.complexes.complex_io import complex_to_json, complex_from_json
from augmented_frames.complexes.tits_fq import build_tits_fq, projective_points
from augmented_frames.utils.definitions import \
    KIND_B, KIND_BA, LINK_HAT, LINK_LT, LINK_PLAIN, INTERNAL, EXTERNAL
from augmented_frames.utils.exceptions import \
    RankTooLarge, BoundTooLarge, QTooLarge, PreconditionViolated, NotASimplex, VertexAbsent
from augmented_frames.utils.utils import dump_json

GAUSS = make_ring(-1)
EISENSTEIN = make_ring(-3)
ROOT_MINUS_2 = make_ring(-2)


def test_small_elements():
    assert len(small_elements(GAUSS, 1)) == 5
    assert len(small_elements(EISENSTEIN, 1)) == 7
    assert len(small_elements(GAUSS, 2)) == 9
    assert all(abs(GAUSS.norm(e)) <= 2 for e in small_elements(GAUSS, 2))


def test_gauss_augmented_complex_counts():
    cx = build_complex(GAUSS, 2, 0, 1, kind=KIND_BA)
    assert len(cx.vertices) == 6
    assert cx.count(1) == 9
    assert cx.count(2) == 4
    assert cx.euler_characteristic() == 1
    assert cx.verify()
    assert len(cx.witnesses) == 4


def test_additive_classes_relative_to_fixed_lines():
    absolute = build_complex(GAUSS, 2, 0, 1)
    assert set(absolute.additive_classes().values()) == {INTERNAL}
    relative = build_complex(GAUSS, 1, 1, 2)
    classes = relative.additive_classes()
    assert classes and set(classes.values()) == {EXTERNAL}
    records = complex_to_json(relative)["additive"]
    assert {record["class"] for record in records} == {EXTERNAL}


def test_eisenstein_augmented_complex_counts():
    for bound in (1, 2):
        cx = build_complex(EISENSTEIN, 2, 0, bound, kind=KIND_BA)
        assert len(cx.vertices) == 8
        assert cx.count(1) == 19
        assert cx.count(2) == 18
        assert cx.verify()


def test_plain_frame_complex_is_a_graph():
    cx = build_complex(GAUSS, 2, 0, 1, kind=KIND_B)
    assert len(cx.vertices) == 6
    assert cx.dimension == 1
    assert not cx.witnesses


def test_truncation_is_monotone():
    small = build_complex(GAUSS, 2, 0, 1)
    large = build_complex(GAUSS, 2, 0, 2)
    assert len(large.vertices) == 14
    small_keys, small_faces = small.signature()
    large_keys, large_faces = large.signature()
    assert small_keys <= large_keys
    assert small_faces <= large_faces


def test_one_dimensional_pieces():
    gauss = build_complex(GAUSS, 1, 1, 2)
    assert len(gauss.vertices) == 9
    assert len(components(gauss)) == 1
    assert gauss.truncation_flags["windowed"] is False
    cx = build_complex(ROOT_MINUS_2, 1, 1, 3)
    assert len(components(cx)) == 3
    first = canonical_line(vector((0, 1), 1), ROOT_MINUS_2)
    second = canonical_line(vector(0, 1), ROOT_MINUS_2)
    assert cx.contains(first) and cx.contains(second)
    assert second not in component_of(cx, first)
    assert build_complex(ROOT_MINUS_2, 1, 1, 4).signature()[0] >= cx.signature()[0]


def test_one_dimensional_pieces_at_bound_four():
    assert len(components(build_complex(GAUSS, 1, 1, 4))) == 1
    cx = build_complex(ROOT_MINUS_2, 1, 1, 4)
    assert len(components(cx)) >= 2
    labels = unit_span_labels(cx)
    for group in cx.components():
        assert len({labels[idx] for idx in group}) == 1


def test_hat_link_of_e1_is_the_one_dimensional_piece():
    cx = build_complex(GAUSS, 2, 0, 1)
    e1 = canonical_line(vector(1, 0), GAUSS)
    hat = link(cx, [e1], LINK_HAT)
    piece = build_complex(GAUSS, 1, 1, 1)
    assert hat.signature() == piece.signature()
    assert hat.m == 1 and hat.n == 1
    assert link(cx, [e1], LINK_LT).vertices == []
    assert len(link(cx, [e1], LINK_PLAIN).vertices) >= len(hat.vertices)


def test_link_rejects_non_simplices():
    cx = build_complex(GAUSS, 2, 0, 1)
    e1 = canonical_line(vector(1, 0), GAUSS)
    with pytest.raises(NotASimplex):
        link(cx, [canonical_line(vector(1, 2), GAUSS)])
    with pytest.raises(PreconditionViolated):
        link(cx, [e1], "SIDEWAYS")
    with pytest.raises(VertexAbsent):
        component_of(cx, canonical_line(vector(1, 2), GAUSS))


def test_edge_sum_vertex():
    cx = build_complex(GAUSS, 2, 0, 1)
    e1 = cx.index_of(canonical_line(vector(1, 0), GAUSS))
    e2 = cx.index_of(canonical_line(vector(0, 1), GAUSS))
    line, in_link = edge_sum_vertex(cx, (e1, e2))
    assert cx.contains(line)
    assert in_link is True
    with pytest.raises(NotASimplex):
        edge_sum_vertex(cx, (e1, e1))


def test_unit_span_labels():
    cx = build_complex(ROOT_MINUS_2, 1, 1, 3)
    labels = unit_span_labels(cx)
    assert len(labels) == len(cx.vertices)
    first = cx.index_of(canonical_line(vector((0, 1), 1), ROOT_MINUS_2))
    second = cx.index_of(canonical_line(vector(0, 1), ROOT_MINUS_2))
    assert labels[first][0].residue == 1
    assert labels[second][0].residue == 0
    with pytest.raises(PreconditionViolated):
        unit_span_labels(build_complex(GAUSS, 2, 0, 1))


def test_build_rejects():
    with pytest.raises(RankTooLarge):
        build_complex(GAUSS, 2, 2, 1)
    with pytest.raises(PreconditionViolated):
        build_complex(GAUSS, 0, 1, 1)
    with pytest.raises(PreconditionViolated):
        build_complex(GAUSS, 2, 0, 1, kind="C")
    with pytest.raises(BoundTooLarge):
        build_complex(GAUSS, 2, 0, 3, vertex_cap=5)


def test_real_quadratic_truncation_is_flagged():
    cx = build_complex(make_ring(2), 1, 1, 1)
    assert cx.truncation_flags["windowed"] is True
    assert cx.verify()


def test_json_round_trip_is_byte_identical():
    cx = build_complex(EISENSTEIN, 2, 0, 1)
    document = complex_to_json(cx)
    again = complex_to_json(complex_from_json(document))
    assert dump_json(again) == dump_json(document)
    assert complex_from_json(document).verify()
    with pytest.raises(PreconditionViolated):
        complex_from_json({"ring": "d=-3"})


def test_components_of_a_plain_complex():
    cx = SimplicialComplex.from_facets(list("abcde"), [(0, 1), (1, 2), (3,), (4,)])
    assert sorted(len(group) for group in components(cx)) == [1, 1, 3]
    assert cx.is_downward_closed()


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_tits_projective_line(q):
    tits = build_tits_fq(q, 2)
    assert len(tits.vertices) == q + 1
    assert tits.count(1) == 0


def test_tits_projective_plane():
    tits = build_tits_fq(2, 3)
    assert len(tits.vertices) == 14
    assert tits.count(1) == 21
    assert len(components(tits)) == 1
    assert projective_points(3, 3).shape == (13, 3)


def test_tits_rejects():
    with pytest.raises(QTooLarge):
        build_tits_fq(11, 2)
    with pytest.raises(PreconditionViolated):
        build_tits_fq(4, 2)
    with pytest.raises(PreconditionViolated):
        build_tits_fq(2, 4)
