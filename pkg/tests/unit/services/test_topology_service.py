"""順序複体・ホモロジー・Reisner 判定サービスのユニットテスト"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.models.complex import FieldSpec, SimplicialComplex
from src.models.permutation import Permutation
from src.services import cm_service, poset_service, topology_service
from src.utils.errors import ComplexError, FieldError
from tests.fixtures.posets import FIG2_FACETS, FIG3_FACETS

pytestmark = pytest.mark.unit

# 6頂点の射影平面（GF(2) と QQ でホモロジーが異なる）
PROJECTIVE_PLANE = [
    {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
    {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6},
]


@pytest.fixture
def projective_plane() -> SimplicialComplex:
    return SimplicialComplex.from_faces(PROJECTIVE_PLANE)


@pytest.fixture
def two_segments() -> SimplicialComplex:
    return SimplicialComplex.from_faces([{1, 2}, {3, 4}])


@st.composite
def two_line_posets(draw, max_n: int = 6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    lines = [Permutation(word=tuple(draw(st.permutations(range(1, n + 1))))) for _ in range(2)]
    return poset_service.from_linear_orders(lines)


# ========================================
# order_complex / link / faces
# ========================================

def test_order_complex_normal_form(fig2_poset):
    complex_ = topology_service.order_complex(fig2_poset)

    assert complex_.sorted_facets() == FIG2_FACETS
    assert complex_.vertices == frozenset(range(1, 6))
    assert complex_.dim == 2


def test_order_complex_eight_element_example(fig3_poset):
    assert topology_service.order_complex(fig3_poset).sorted_facets() == FIG3_FACETS


def test_order_complex_antichain_is_discrete(antichain3):
    complex_ = topology_service.order_complex(antichain3)

    assert complex_.sorted_facets() == [(1,), (2,), (3,)]
    assert complex_.dim == 0


def test_link_of_vertex(fig3_poset):
    complex_ = topology_service.order_complex(fig3_poset)

    lk = topology_service.link(complex_, {2})

    assert lk.sorted_facets() == [(4, 7), (5, 8)]


def test_link_of_facet_is_empty_face(full_simplex):
    lk = topology_service.link(full_simplex, {1, 2, 3})

    assert lk.facets == (frozenset(),)
    assert lk.dim == -1


def test_link_of_empty_face_is_complex(hollow_triangle):
    assert topology_service.link(hollow_triangle, ()) == hollow_triangle


def test_link_rejects_non_face(hollow_triangle):
    with pytest.raises(ComplexError):
        topology_service.link(hollow_triangle, {1, 2, 3})


def test_faces_by_dimension(hollow_triangle):
    assert topology_service.faces(hollow_triangle) == {
        -1: [()],
        0: [(1,), (2,), (3,)],
        1: [(1, 2), (1, 3), (2, 3)],
    }


def test_faces_of_void_complex():
    assert topology_service.faces(SimplicialComplex()) == {}


# ========================================
# minimal_nonfaces
# ========================================

def test_minimal_nonfaces_hollow_triangle(hollow_triangle):
    assert topology_service.minimal_nonfaces(hollow_triangle) == [(1, 2, 3)]


def test_minimal_nonfaces_full_simplex(full_simplex):
    assert topology_service.minimal_nonfaces(full_simplex) == []


def test_minimal_nonfaces_order_complex(fig2_poset):
    """順序複体の極小非面は比較不能な2元集合"""
    assert topology_service.minimal_nonfaces(topology_service.order_complex(fig2_poset)) == [(1, 2), (4, 5)]


@settings(max_examples=50, deadline=None)
@given(two_line_posets())
def test_minimal_nonfaces_are_incomparable_pairs(poset):
    complex_ = topology_service.order_complex(poset)

    expected = cm_service.cocomparability_graph(poset).sorted_edges()

    assert topology_service.minimal_nonfaces(complex_) == expected


# ========================================
# boundary_matrix
# ========================================

def test_boundary_matrix_signs(full_simplex):
    d2 = topology_service.boundary_matrix(full_simplex, 2)

    # 行 (1,2), (1,3), (2,3)、列 (1,2,3)
    assert d2.tolist() == [[1], [-1], [1]]


def test_boundary_zero_sends_vertices_to_empty_face(hollow_triangle):
    assert topology_service.boundary_matrix(hollow_triangle, 0).tolist() == [[1, 1, 1]]


def test_boundary_matrix_rejects_negative_index(hollow_triangle):
    with pytest.raises(ComplexError):
        topology_service.boundary_matrix(hollow_triangle, -1)


def test_boundary_of_boundary_vanishes(projective_plane):
    for i in range(1, projective_plane.dim + 1):
        product = topology_service.boundary_matrix(projective_plane, i) @ topology_service.boundary_matrix(
            projective_plane, i + 1
        )
        assert not np.any(product)


# ========================================
# reduced_betti
# ========================================

def test_reduced_betti_circle(hollow_triangle):
    profile = topology_service.reduced_betti(hollow_triangle)

    assert profile.reduced_betti == {-1: 0, 0: 0, 1: 1}
    assert profile.euler_identity_holds()


def test_reduced_betti_simplex_is_acyclic(full_simplex):
    profile = topology_service.reduced_betti(full_simplex, "rat")

    assert profile.field == "QQ"
    assert all(beta == 0 for beta in profile.reduced_betti.values())


def test_reduced_betti_disconnected(two_segments):
    assert topology_service.reduced_betti(two_segments).reduced_betti == {-1: 0, 0: 1, 1: 0}


def test_reduced_betti_empty_face_complex():
    profile = topology_service.reduced_betti(SimplicialComplex.from_faces([set()]))

    assert profile.reduced_betti == {-1: 1}
    assert profile.euler_identity_holds()


def test_reduced_betti_void_complex():
    with pytest.raises(ComplexError):
        topology_service.reduced_betti(SimplicialComplex())


def test_reduced_betti_unknown_field(hollow_triangle):
    with pytest.raises(FieldError):
        topology_service.reduced_betti(hollow_triangle, "gf4")


@pytest.mark.parametrize(
    "field,expected",
    [
        ("gf2", {-1: 0, 0: 0, 1: 1, 2: 1}),
        ("gf3", {-1: 0, 0: 0, 1: 0, 2: 0}),
        ("rat", {-1: 0, 0: 0, 1: 0, 2: 0}),
    ],
)
def test_reduced_betti_depends_on_characteristic(projective_plane, field, expected):
    profile = topology_service.reduced_betti(projective_plane, field)

    assert profile.reduced_betti == expected
    assert profile.euler_identity_holds()


def test_reduced_betti_link_in_eight_element_example(fig3_poset):
    lk = topology_service.link(topology_service.order_complex(fig3_poset), {2})

    assert topology_service.reduced_betti(lk).betti(0) == 1


@settings(max_examples=40, deadline=None)
@given(two_line_posets())
def test_euler_identity_for_order_complexes(poset):
    profile = topology_service.reduced_betti(topology_service.order_complex(poset), FieldSpec.parse("gf3"))

    assert profile.euler_identity_holds()


# ========================================
# is_cm_reisner
# ========================================

def test_reisner_normal_form_is_cm(fig2_poset):
    result = topology_service.is_cm_reisner(topology_service.order_complex(fig2_poset))

    assert result.is_cm
    assert result.witness is None
    assert result.field == "GF(2)"


@pytest.mark.parametrize("field", ["gf2", "gf3", "rat"])
def test_reisner_eight_element_example_fails_at_vertex(fig3_poset, field):
    """頂点 2 のリンクは2本の離れた辺"""
    result = topology_service.is_cm_reisner(topology_service.order_complex(fig3_poset), field)

    assert not result.is_cm
    assert result.witness == (2,)


def test_reisner_disconnected_fails_at_empty_face(two_segments):
    result = topology_service.is_cm_reisner(two_segments)

    assert not result.is_cm
    assert result.witness == ()


def test_reisner_circle_is_cm(hollow_triangle):
    assert topology_service.is_cm_reisner(hollow_triangle).is_cm


@pytest.mark.parametrize("field,expected", [("gf2", False), ("gf3", True), ("rat", True)])
def test_reisner_projective_plane_depends_on_field(projective_plane, field, expected):
    result = topology_service.is_cm_reisner(projective_plane, field)

    assert result.is_cm is expected
    if not expected:
        assert result.witness == ()


def test_reisner_void_complex():
    with pytest.raises(ComplexError):
        topology_service.is_cm_reisner(SimplicialComplex())


# ========================================
# strong connectivity
# ========================================

def test_facet_graph_hollow_triangle(hollow_triangle):
    graph = topology_service.facet_graph(hollow_triangle)

    assert graph.number_of_nodes() == 3
    assert graph.number_of_edges() == 3


def test_strongly_connected_examples(fig3_poset, two_segments, hollow_triangle):
    assert topology_service.is_strongly_connected(topology_service.order_complex(fig3_poset))
    assert topology_service.is_strongly_connected(hollow_triangle)
    assert not topology_service.is_strongly_connected(two_segments)


def test_strongly_connected_requires_purity():
    assert not topology_service.is_strongly_connected(SimplicialComplex.from_faces([{1, 2}, {2, 3}, {4}]))


def test_strongly_connected_void_complex():
    assert not topology_service.is_strongly_connected(SimplicialComplex())
