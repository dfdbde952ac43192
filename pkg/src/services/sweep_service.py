"""判定条件の全数検査とランダム検査

S_n の全ての π について P_π の4つの判定（層の連結性・シェリング・Reisner・強連結性）が
一致することを確かめます。各 π の計算は独立なのでプロセスに分散できます。
"""

import functools
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from src.models.complex import GF2, FieldSpec
from src.models.permutation import Permutation
from src.models.sweep import LemmaSummary, SweepCase, SweepSummary
from src.services import cm_service, perm_service, poset_service, shelling_service, topology_service
from src.services.topology_service import FieldLike
from src.utils.errors import InputError

logger = logging.getLogger(__name__)

DEFAULT_SWEEP_MAX_N = 7
BRUTE_FORCE_MAX_N = 5


def _as_field(field: Optional[FieldLike]) -> Optional[FieldSpec]:
    if field is None or isinstance(field, FieldSpec):
        return field
    return FieldSpec.parse(field)


def sweep_case(
    pi: Permutation,
    field: FieldLike = GF2,
    second_field: Optional[FieldLike] = None,
    max_facets: int = shelling_service.DEFAULT_MAX_FACETS
) -> SweepCase:
    """P_π 一つについて4つの判定を計算

    条件が成り立つときは e_order の検証結果を使います。成り立たないときは n ≤ 5 かつ
    極大面数が上限以下の場合に限り全探索の結果を使います（純粋でない複体は全探索が
    None を返すのでシェリング不可）。
    """
    spec = _as_field(field)
    identity = perm_service.identity(pi.n)
    poset = poset_service.from_linear_orders([identity, pi])
    criterion = cm_service.condition4(poset)
    complex_ = topology_service.order_complex(poset)

    shellable: Optional[bool] = None
    if criterion.holds:
        shellable = shelling_service.e_order(poset, (identity, pi)).verified
    elif pi.n <= BRUTE_FORCE_MAX_N and len(complex_.facets) <= max_facets:
        shellable = shelling_service.brute_force_shelling(complex_.facets, max_facets) is not None

    reisner = topology_service.is_cm_reisner(complex_, spec)
    second = _as_field(second_field)
    return SweepCase(
        pi=pi,
        condition4=criterion.holds,
        shellable=shellable,
        reisner=reisner.is_cm,
        strongly_connected=topology_service.is_strongly_connected(complex_),
        reisner_second_field=None if second is None else topology_service.is_cm_reisner(complex_, second).is_cm,
        witness=reisner.witness
    )


def run_sweep(
    n: int,
    field: FieldLike = GF2,
    workers: int = 1,
    second_field: Optional[FieldLike] = None,
    max_n: int = DEFAULT_SWEEP_MAX_N,
    max_facets: int = shelling_service.DEFAULT_MAX_FACETS
) -> SweepSummary:
    """S_n の全ての置換で sweep_case を実行して集計

    Raises:
        InputError: n が 1..max_n の範囲外の場合
    """
    if not 1 <= n <= max_n:
        raise InputError(f"sweep size n={n} outside 1..{max_n}")
    spec = _as_field(field)
    second = _as_field(second_field)
    task = functools.partial(sweep_case, field=spec, second_field=second, max_facets=max_facets)

    logger.info(f"Sweeping S_{n} over {spec.label} with {workers} worker(s)")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            cases = list(executor.map(task, perm_service.all_permutations(n), chunksize=32))
    else:
        cases = [task(pi) for pi in perm_service.all_permutations(n)]

    disagreements = [case for case in cases if not case.agree]
    for case in disagreements:
        logger.error(f"Disagreement at pi={case.pi}: {case.model_dump(exclude={'pi'})}")

    cm_count = sum(1 for case in cases if case.reisner)
    summary = SweepSummary(
        n=n,
        field=spec.label,
        second_field=None if second is None else second.label,
        total=len(cases),
        cm_count=cm_count,
        non_cm_count=len(cases) - cm_count,
        disagreements=disagreements
    )
    logger.info(f"Sweep S_{n}: total={summary.total}, cm={summary.cm_count}, disagreements={len(disagreements)}")
    return summary


def lemma_sweep(samples: int = 500, max_n: int = 8, seed: int = 0) -> LemmaSummary:
    """ランダムな純粋半順序集合（次元は任意）で 強連結 ⇒ 層の連結性 を検査"""
    rng = random.Random(seed)
    strongly_connected = 0
    counterexamples: list[list[tuple[int, int]]] = []

    for _ in range(samples):
        poset = poset_service.random_pure_poset(rng.randint(1, max_n), rng)
        if not topology_service.is_strongly_connected(topology_service.order_complex(poset)):
            continue
        strongly_connected += 1
        if not cm_service.condition4(poset).holds:
            covers = sorted(poset_service.covers(poset))
            logger.error(f"Strongly connected poset violates the layer condition: {covers}")
            counterexamples.append(covers)

    logger.info(f"Lemma sweep: {samples} samples, {strongly_connected} strongly connected, {len(counterexamples)} counterexamples")
    return LemmaSummary(
        samples=samples,
        max_n=max_n,
        seed=seed,
        strongly_connected_count=strongly_connected,
        counterexamples=counterexamples
    )
