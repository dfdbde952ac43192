"""解析パイプラインの実行とレポートの組み立て

判定・証明書・強連結性・（指定時は）Reisner 判定をまとめて Report にし、
出力する全ての証明書を独立に再検証します。
"""

import logging
from typing import Optional

from src.models.complex import FieldSpec
from src.models.permutation import Permutation
from src.models.poset import Poset
from src.models.report import Report
from src.models.verdict import CmVerdict
from src.services import cm_service, poset_service, shelling_service, topology_service

logger = logging.getLogger(__name__)


def build_report(
    poset: Poset,
    realizer: Optional[tuple[Permutation, Permutation]],
    field: FieldSpec,
    oracle: bool = False,
    exhaustive_max_n: int = cm_service.DEFAULT_EXHAUSTIVE_REALIZER_MAX_N,
    relabeling: Optional[dict[int, int]] = None
) -> tuple[Report, CmVerdict]:
    """解析を実行して Report と元の CmVerdict を返す"""
    verdict = cm_service.decide_cm(poset, realizer=realizer, exhaustive_max_n=exhaustive_max_n)
    complex_ = topology_service.order_complex(poset)

    reisner_cm = None
    reisner_witness = None
    homology = None
    if oracle:
        reisner = topology_service.is_cm_reisner(complex_, field)
        reisner_cm = reisner.is_cm
        reisner_witness = reisner.witness
        homology = topology_service.reduced_betti(complex_, field).reduced_betti

    report = Report.from_verdict(
        verdict,
        n=poset.n,
        field=field.label,
        strongly_connected=topology_service.is_strongly_connected(complex_),
        ideal_generators=cm_service.edge_ideal_generators(cm_service.cocomparability_graph(poset)),
        reisner_cm=reisner_cm,
        reisner_witness=reisner_witness,
        homology=homology,
        relabeling=relabeling
    )
    return report, verdict


def certificate_problems(poset: Poset, verdict: CmVerdict, report: Report, field: FieldSpec) -> list[str]:
    """出力する証明書を再検証し、問題点を列挙（空なら全て正しい）"""
    problems: list[str] = []

    if verdict.realizer is not None and not cm_service.verify_realizer(poset, list(verdict.realizer)):
        problems.append("realizer does not intersect to the poset")

    certificate = verdict.shelling_certificate
    if certificate is not None:
        verified, violation = shelling_service.verify_shelling([chain.elements for chain in certificate.chains])
        if not verified:
            problems.append(f"shelling order fails at (i, j) = {violation}")

    if verdict.failing_layer is not None:
        layer = cm_service.layer_subposet(poset, verdict.failing_layer)
        if len(poset_service.connected_components(layer)) < 2:
            problems.append(f"layer {verdict.failing_layer} is connected after all")

    if report.reisner_witness is not None:
        complex_ = topology_service.order_complex(poset)
        lk = topology_service.link(complex_, report.reisner_witness)
        profile = topology_service.reduced_betti(lk, field)
        if profile.vanishes_below(lk.dim):
            problems.append(f"face {report.reisner_witness} has acyclic link")

    if report.oracle_agrees is False:
        problems.append("Reisner criterion disagrees with the layer criterion")

    for problem in problems:
        logger.error(f"Certificate check failed: {problem}")
    return problems

