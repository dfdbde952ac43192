"""全数検査・ランダム検査サービスのユニットテスト"""

import pytest

from src.models.permutation import Permutation
from src.services import sweep_service
from src.utils.errors import InputError
from tests.fixtures.posets import CM_COUNTS, FIG2_PI

pytestmark = pytest.mark.unit


def P(*word: int) -> Permutation:
    return Permutation(word=word)


# ========================================
# sweep_case
# ========================================

def test_sweep_case_cm_example():
    case = sweep_service.sweep_case(P(*FIG2_PI))

    assert case.condition4
    assert case.shellable is True
    assert case.reisner
    assert case.strongly_connected
    assert case.witness is None
    assert case.agree


def test_sweep_case_disconnected_layers_uses_brute_force():
    """P_{id,[3,4,1,2]} は純粋だが2本の鎖に分かれる"""
    case = sweep_service.sweep_case(P(3, 4, 1, 2))

    assert not case.condition4
    assert case.shellable is False
    assert not case.reisner
    assert case.witness == ()
    assert case.agree


def test_sweep_case_non_pure_is_not_shellable():
    case = sweep_service.sweep_case(P(2, 3, 1))

    assert not case.condition4
    assert case.shellable is False
    assert not case.strongly_connected
    assert case.agree


def test_sweep_case_second_field():
    case = sweep_service.sweep_case(P(*FIG2_PI), field="gf3", second_field="rat")

    assert case.reisner_second_field is True
    assert case.agree


def test_sweep_case_skips_brute_force_above_cap():
    case = sweep_service.sweep_case(P(3, 4, 1, 2), max_facets=1)

    assert case.shellable is None
    assert case.agree


# ========================================
# run_sweep
# ========================================

@pytest.mark.parametrize("n,count", sorted(CM_COUNTS.items()))
def test_run_sweep_small_counts(n, count):
    summary = sweep_service.run_sweep(n)

    assert summary.cm_count == count
    assert summary.non_cm_count == summary.total - count
    assert summary.all_agree


def test_run_sweep_reports_fields():
    summary = sweep_service.run_sweep(3, field="gf3", second_field="rat")

    assert summary.total == 6
    assert summary.field == "GF(3)"
    assert summary.second_field == "QQ"
    assert summary.all_agree


@pytest.mark.parametrize("n", [0, 8])
def test_run_sweep_rejects_out_of_range(n):
    with pytest.raises(InputError):
        sweep_service.run_sweep(n)


def test_run_sweep_respects_custom_cap():
    with pytest.raises(InputError):
        sweep_service.run_sweep(5, max_n=4)


def test_run_sweep_parallel_matches_serial():
    serial = sweep_service.run_sweep(4)
    parallel = sweep_service.run_sweep(4, workers=2)

    assert parallel == serial


# ========================================
# lemma_sweep
# ========================================

def test_lemma_sweep_finds_no_counterexample():
    summary = sweep_service.lemma_sweep(samples=60, max_n=6, seed=1)

    assert summary.samples == 60
    assert 0 < summary.strongly_connected_count <= 60
    assert summary.counterexamples == []


def test_lemma_sweep_is_reproducible():
    first = sweep_service.lemma_sweep(samples=20, max_n=5, seed=7)
    second = sweep_service.lemma_sweep(samples=20, max_n=5, seed=7)

    assert first == second


def test_sweep_case_non_pure_relies_on_brute_force():
    """P_{id,[3,1,2]} は純粋でなく、全探索がシェリング不可と判定する"""
    case = sweep_service.sweep_case(Permutation(word=(3, 1, 2)))

    assert not case.condition4
    assert case.shellable is False
    assert not case.reisner
    assert case.agree
