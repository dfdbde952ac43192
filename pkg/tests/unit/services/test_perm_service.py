"""置換演算サービスのユニットテスト"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.models.permutation import Permutation
from src.services import cm_service, perm_service, poset_service
from src.utils.errors import SizeMismatchError

pytestmark = pytest.mark.unit


def P(*word: int) -> Permutation:
    return Permutation(word=word)


@st.composite
def permutations(draw, min_n: int = 1, max_n: int = 8) -> Permutation:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return Permutation(word=tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def permutation_pairs(draw, max_n: int = 8) -> tuple[Permutation, Permutation]:
    n = draw(st.integers(min_value=1, max_value=max_n))
    s = draw(st.permutations(range(1, n + 1)))
    t = draw(st.permutations(range(1, n + 1)))
    return Permutation(word=tuple(s)), Permutation(word=tuple(t))


# ========================================
# inverse / compose
# ========================================

@pytest.mark.parametrize(
    "word,expected",
    [
        ((2, 3, 1, 4, 5), (3, 1, 2, 4, 5)),
        ((1, 2, 3), (1, 2, 3)),
        ((2, 1), (2, 1)),
    ],
)
def test_inverse(word, expected):
    assert perm_service.inverse(P(*word)) == P(*expected)


def test_compose_with_identity():
    assert perm_service.compose(P(2, 3, 1), P(1, 2, 3)) == P(2, 3, 1)


def test_compose_involution_squared():
    assert perm_service.compose(P(2, 1), P(2, 1)) == P(1, 2)


def test_compose_inverse_sigma_with_tau():
    """σ⁻¹τ for σ = [2,3,1,4,5], τ = [3,2,1,5,4] is [2,1,3,5,4]"""
    sigma_inv = perm_service.inverse(P(2, 3, 1, 4, 5))

    assert perm_service.compose(sigma_inv, P(3, 2, 1, 5, 4)) == P(2, 1, 3, 5, 4)


def test_compose_size_mismatch():
    with pytest.raises(SizeMismatchError):
        perm_service.compose(P(1, 2), P(1, 2, 3))


@given(permutations())
def test_inverse_composes_to_identity(p):
    assert perm_service.compose(perm_service.inverse(p), p).is_identity()
    assert perm_service.compose(p, perm_service.inverse(p)).is_identity()


# ========================================
# normalize_realizer
# ========================================

def test_normalize_realizer_example(fig2_realizer):
    pi, iso = perm_service.normalize_realizer(*fig2_realizer)

    assert pi == P(2, 1, 3, 5, 4)
    assert iso == {1: 2, 2: 3, 3: 1, 4: 4, 5: 5}


def test_normalize_realizer_equal_lines_gives_identity():
    pi, _ = perm_service.normalize_realizer(P(3, 1, 2), P(3, 1, 2))

    assert pi.is_identity()


def test_normalize_realizer_identity_left_factor():
    pi, iso = perm_service.normalize_realizer(P(1, 2, 3), P(3, 2, 1))

    assert pi == P(3, 2, 1)
    assert iso == {1: 1, 2: 2, 3: 3}


def test_normalize_realizer_size_mismatch():
    with pytest.raises(SizeMismatchError):
        perm_service.normalize_realizer(P(1, 2), P(1, 2, 3))


@settings(max_examples=60, deadline=None)
@given(permutation_pairs())
def test_normalize_realizer_is_isomorphism(pair):
    """j ↦ σ(j) は P_{id,π} から P_{σ,τ} への順序同型"""
    s, t = pair
    pi, iso = perm_service.normalize_realizer(s, t)
    normal = poset_service.from_linear_orders([perm_service.identity(pi.n), pi])
    original = poset_service.from_linear_orders([s, t])

    assert poset_service.isomorphism_check(normal, original, iso)


# ========================================
# augment / enumeration
# ========================================

def test_augment_shifts_and_caps():
    assert perm_service.augment(P(2, 1, 3)) == P(1, 3, 2, 4, 5)


def test_all_permutations_lexicographic():
    words = [p.word for p in perm_service.all_permutations(3)]

    assert words == [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]


@pytest.mark.parametrize("n,count", [(1, 1), (4, 24), (6, 720)])
def test_all_permutations_count(n, count):
    assert sum(1 for _ in perm_service.all_permutations(n)) == count


# ========================================
# diagram_intersection_graph
# ========================================

def test_diagram_two_lines():
    graph = perm_service.diagram_intersection_graph([P(1, 2, 3), P(2, 1, 3)])

    assert graph.sorted_edges() == [(1, 2)]


def test_diagram_three_lines():
    graph = perm_service.diagram_intersection_graph([P(3, 1, 2, 4), P(1, 2, 3, 4), P(2, 1, 4, 3)])

    assert graph.sorted_edges() == [(1, 2), (1, 3), (2, 3), (3, 4)]


def test_diagram_identical_lines_have_no_edges():
    graph = perm_service.diagram_intersection_graph([P(2, 3, 1), P(2, 3, 1)])

    assert graph.sorted_edges() == []


def test_diagram_needs_two_lines():
    with pytest.raises(SizeMismatchError):
        perm_service.diagram_intersection_graph([P(1, 2)])


def test_diagram_size_mismatch():
    with pytest.raises(SizeMismatchError):
        perm_service.diagram_intersection_graph([P(1, 2), P(1, 2, 3)])


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=4).flatmap(
    lambda k: st.integers(min_value=1, max_value=7).flatmap(
        lambda n: st.lists(st.permutations(range(1, n + 1)), min_size=k, max_size=k)
    )
))
def test_diagram_graph_is_cocomparability_graph(words):
    """交差グラフは線形順序の交わりの比較不能グラフに一致"""
    lines = [Permutation(word=tuple(word)) for word in words]

    expected = cm_service.cocomparability_graph(poset_service.from_linear_orders(lines))

    assert perm_service.diagram_intersection_graph(lines) == expected
