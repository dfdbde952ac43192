"""cmposet コマンドラインインターフェース

サブコマンド:
    analyze       判定・証明書・強連結性（--oracle で Reisner 判定も）
    sweep         S_n 全体で4つの判定の一致を検査
    homology      順序複体（またはそのリンク）の被約ベッチ数
    shelling      シェリング順序
    export-ideal  辺イデアルを Macaulay2 / Singular / テキストで出力
    graph         比較不能グラフの辺
    dimension     次元の分類と実現子
    lemma         ランダムな純粋半順序集合で 強連結 ⇒ 層の連結性 を検査

終了コード: 0 成功, 1 入力エラー, 2 内部エラー・判定の不一致
"""

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from src.cli.error_handler import EXIT_INTERNAL_ERROR, EXIT_OK, ErrorHandler
from src.cli.ideal_export import FORMATS, render_ideal
from src.cli.input_parser import LoadedPoset, build_poset, load_input
from src.cli.report_builder import build_report, certificate_problems
from src.models.complex import FieldSpec
from src.models.config import AnalysisConfig
from src.services import cm_service, shelling_service, sweep_service, topology_service
from src.utils.config_loader import load_analysis_config
from src.utils.errors import InputError, SweepDisagreementError
from src.utils.logger import configure_cli_logging

logger = logging.getLogger(__name__)

EMPTY_FACE_NOTE = (
    "the complex {} has dimension -1; reduced b-1 = 1 is a bookkeeping convention "
    "and is exempt from the Reisner test"
)


def _field(args: argparse.Namespace, config: AnalysisConfig) -> FieldSpec:
    return FieldSpec.parse(args.field or config.default_field)


def _load(path: Path) -> LoadedPoset:
    return build_poset(load_input(path))


# ========================================
# サブコマンド
# ========================================

def cmd_analyze(args: argparse.Namespace, config: AnalysisConfig) -> int:
    field = _field(args, config)
    loaded = _load(args.file)
    poset = loaded.poset
    report, verdict = build_report(
        poset,
        loaded.realizer,
        field,
        oracle=args.oracle,
        exhaustive_max_n=config.exhaustive_realizer_max_n,
        relabeling=loaded.relabeling
    )
    print(report.model_dump_json(indent=2) if args.json else report.render_text())

    problems = certificate_problems(poset, verdict, report, field)
    if problems:
        print("error: " + "; ".join(problems), file=sys.stderr)
        return EXIT_INTERNAL_ERROR
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, config: AnalysisConfig) -> int:
    summary = sweep_service.run_sweep(
        args.n,
        field=_field(args, config),
        workers=args.workers or config.sweep_workers,
        second_field=args.second_field,
        max_n=config.sweep_max_n,
        max_facets=config.brute_force_max_facets
    )
    if args.json:
        print(summary.model_dump_json(indent=2))
    else:
        print(f"n:             {summary.n}")
        print(f"field:         {summary.field}" + (f" (cross-checked with {summary.second_field})" if summary.second_field else ""))
        print(f"total:         {summary.total}")
        print(f"cm:            {summary.cm_count}")
        print(f"non-cm:        {summary.non_cm_count}")
        print(f"disagreements: {len(summary.disagreements)}")
        for case in summary.disagreements:
            print(f"  pi={case.pi}: {case.model_dump(exclude={'pi'})}")

    if not summary.all_agree:
        raise SweepDisagreementError(
            f"the four criteria disagree on S_{summary.n}",
            cases=[list(case.pi.word) for case in summary.disagreements]
        )
    return EXIT_OK


def _parse_face(text: str) -> list[int]:
    try:
        return [int(token) for token in text.split(",") if token.strip()]
    except ValueError as e:
        raise InputError(f"--link expects comma-separated labels, got {text!r}") from e


def cmd_homology(args: argparse.Namespace, config: AnalysisConfig) -> int:
    field = _field(args, config)
    poset = _load(args.file).poset
    complex_ = topology_service.order_complex(poset)
    if args.link is not None:
        complex_ = topology_service.link(complex_, _parse_face(args.link))
    profile = topology_service.reduced_betti(complex_, field)
    reisner = topology_service.is_cm_reisner(complex_, field)

    if args.json:
        payload = profile.model_dump()
        payload["facets"] = complex_.sorted_facets()
        payload["reisner_cm"] = reisner.is_cm
        payload["reisner_witness"] = reisner.witness
        print(json.dumps(payload, indent=2))
        return EXIT_OK

    print("facets: " + " ".join("{" + ",".join(str(v) for v in facet) + "}" for facet in complex_.sorted_facets()))
    print(f"field:  {profile.field}")
    for i, beta in sorted(profile.reduced_betti.items()):
        print(f"  b~{i} = {beta}   (f{i} = {profile.face_counts.get(i, 0)})")
    print(f"reisner: {str(reisner.is_cm).lower()}" + (f", witness {set(reisner.witness) or '{}'}" if reisner.witness is not None else ""))
    if complex_.dim == -1:
        print(f"note: {EMPTY_FACE_NOTE}")
    return EXIT_OK


def cmd_shelling(args: argparse.Namespace, config: AnalysisConfig) -> int:
    loaded = _load(args.file)
    order = shelling_service.e_order(loaded.poset, loaded.realizer)
    for chain in order.as_lists():
        print("[" + ",".join(str(v) for v in chain) + "]")
    if not order.verified:
        print(f"error: chain order fails at (i, j) = {order.first_violation}", file=sys.stderr)
        return EXIT_INTERNAL_ERROR
    return EXIT_OK


def cmd_export_ideal(args: argparse.Namespace, config: AnalysisConfig) -> int:
    poset = _load(args.file).poset
    generators = cm_service.edge_ideal_generators(cm_service.cocomparability_graph(poset))
    print(render_ideal(generators, poset.n, args.format))
    return EXIT_OK


def cmd_graph(args: argparse.Namespace, config: AnalysisConfig) -> int:
    poset = _load(args.file).poset
    for i, j in cm_service.cocomparability_graph(poset).sorted_edges():
        print(f"{i} {j}")
    return EXIT_OK


def cmd_dimension(args: argparse.Namespace, config: AnalysisConfig) -> int:
    poset = _load(args.file).poset
    dim_class, realizer = cm_service.dimension_class(poset, config.exhaustive_realizer_max_n)
    print(dim_class.value)
    if realizer is not None:
        if not cm_service.verify_realizer(poset, list(realizer)):
            print("error: realizer does not intersect to the poset", file=sys.stderr)
            return EXIT_INTERNAL_ERROR
        print(" ".join(str(line) for line in realizer))
    return EXIT_OK


def cmd_lemma(args: argparse.Namespace, config: AnalysisConfig) -> int:
    summary = sweep_service.lemma_sweep(samples=args.samples, max_n=args.max_n, seed=args.seed)
    if args.json:
        print(summary.model_dump_json(indent=2))
    else:
        print(f"samples:            {summary.samples}")
        print(f"strongly connected: {summary.strongly_connected_count}")
        print(f"counterexamples:    {len(summary.counterexamples)}")
    if summary.counterexamples:
        raise SweepDisagreementError(
            "strongly connected posets violating the layer condition",
            cases=summary.counterexamples
        )
    return EXIT_OK


# ========================================
# 引数解析
# ========================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cmposet",
        description="Cohen-Macaulay posets of dimension two and permutation graphs"
    )
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR")
    parser.add_argument("--log-file", type=Path, default=None, help="additional log file")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def with_field(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--field", default=None, help="gf2 (default), gf<p> for prime p, or rat")

    analyze = subparsers.add_parser("analyze", help="decide Cohen-Macaulayness with certificates")
    analyze.add_argument("file", type=Path)
    with_field(analyze)
    analyze.add_argument("--oracle", action="store_true", help="also run the Reisner criterion")
    analyze.add_argument("--json", action="store_true", help="machine-readable report")
    analyze.set_defaults(handler=cmd_analyze)

    sweep = subparsers.add_parser("sweep", help="check the four criteria on every P_pi for pi in S_n")
    sweep.add_argument("--n", type=int, required=True)
    with_field(sweep)
    sweep.add_argument("--second-field", default=None, help="cross-check the Reisner criterion over this field")
    sweep.add_argument("--workers", type=int, default=None)
    sweep.add_argument("--json", action="store_true")
    sweep.set_defaults(handler=cmd_sweep)

    homology = subparsers.add_parser("homology", help="reduced Betti numbers of the order complex")
    homology.add_argument("file", type=Path)
    homology.add_argument("--link", default=None, help="comma-separated face whose link to use")
    with_field(homology)
    homology.add_argument("--json", action="store_true")
    homology.set_defaults(handler=cmd_homology)

    shelling = subparsers.add_parser("shelling", help="print the shelling order of maximal chains")
    shelling.add_argument("file", type=Path)
    shelling.set_defaults(handler=cmd_shelling)

    export = subparsers.add_parser("export-ideal", help="edge ideal of the co-comparability graph")
    export.add_argument("file", type=Path)
    export.add_argument("--format", choices=FORMATS, default="macaulay2")
    export.set_defaults(handler=cmd_export_ideal)

    graph = subparsers.add_parser("graph", help="co-comparability edge list")
    graph.add_argument("file", type=Path)
    graph.set_defaults(handler=cmd_graph)

    dimension = subparsers.add_parser("dimension", help="dimension class and realizer")
    dimension.add_argument("file", type=Path)
    dimension.set_defaults(handler=cmd_dimension)

    lemma = subparsers.add_parser("lemma", help="strongly connected implies layer-connected on random pure posets")
    lemma.add_argument("--samples", type=int, default=500)
    lemma.add_argument("--max-n", type=int, default=8)
    lemma.add_argument("--seed", type=int, default=0)
    lemma.add_argument("--json", action="store_true")
    lemma.set_defaults(handler=cmd_lemma)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """エントリポイント

    Returns:
        終了コード
    """
    load_dotenv()
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = load_analysis_config()
        configure_cli_logging(config, level=args.log_level, log_file=args.log_file)
        return args.handler(args, config)
    except Exception as e:
        return ErrorHandler.handle_cli_error(e, context=args.command)


if __name__ == "__main__":
    sys.exit(main())
