"""順序複体・リンク・被約ホモロジー・Reisner 判定

ホモロジーは厳密計算のみを使います。素体 GF(p) 上は galois の配列で、
有理数体上は sympy の DomainMatrix で境界行列の階数を求めます。
"""

import functools
import itertools
import logging
from collections.abc import Iterable
from typing import Optional, Union

import galois
import networkx as nx
import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.models.complex import GF2, FieldSpec, HomologyProfile, ReisnerResult, SimplicialComplex
from src.models.poset import Poset
from src.services import poset_service
from src.utils.errors import ComplexError

logger = logging.getLogger(__name__)

Face = tuple[int, ...]
FieldLike = Union[FieldSpec, str]


def _as_field(field: FieldLike) -> FieldSpec:
    return field if isinstance(field, FieldSpec) else FieldSpec.parse(field)


# ========================================
# 複体の構成
# ========================================

def order_complex(poset: Poset) -> SimplicialComplex:
    """Δ(P): 面は P の鎖、極大面は極大鎖"""
    chains = poset_service.maximal_chains(poset)
    if not chains:
        return SimplicialComplex(vertices=frozenset(), facets=(frozenset(),))
    return SimplicialComplex.from_faces(
        (chain.as_set() for chain in chains),
        vertices=poset.elements
    )


def link(complex_: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    """link(Δ, σ) = {τ ∈ Δ : τ ∪ σ ∈ Δ, τ ∩ σ = ∅}

    Raises:
        ComplexError: σ が Δ の面でない場合
    """
    sigma = frozenset(face)
    if not complex_.contains_face(sigma):
        raise ComplexError(f"{sorted(sigma)} is not a face of the complex")
    return SimplicialComplex.from_faces(facet - sigma for facet in complex_.facets if sigma <= facet)


def faces(complex_: SimplicialComplex) -> dict[int, list[Face]]:
    """次元ごとの全ての面（∅ は次元 −1、各次元内は辞書式順）。空複体なら空"""
    found: set[Face] = set()
    for facet in complex_.facets:
        ordered = sorted(facet)
        for size in range(len(ordered) + 1):
            found.update(itertools.combinations(ordered, size))

    table: dict[int, list[Face]] = {}
    for face in sorted(found):
        table.setdefault(len(face) - 1, []).append(face)
    return table


def minimal_nonfaces(complex_: SimplicialComplex) -> list[Face]:
    """極小非面（Stanley-Reisner イデアルの生成元）

    大きさ k の極小非面は全ての (k−1) 部分集合が面なので、(k−1) 面に
    より大きい頂点を一つ加えたものだけを候補にします。
    """
    table = faces(complex_)
    face_set = {frozenset(face) for group in table.values() for face in group}
    vertices = sorted(complex_.vertices)

    result: list[Face] = [(v,) for v in vertices if frozenset((v,)) not in face_set]
    top = max(table, default=-1)
    for dim in range(0, top + 1):
        for base in table[dim]:
            for v in vertices:
                if v <= base[-1]:
                    continue
                candidate = frozenset(base) | {v}
                if candidate in face_set:
                    continue
                if all(candidate - {u} in face_set for u in candidate):
                    result.append(tuple(sorted(candidate)))
    return sorted(result, key=lambda face: (len(face), face))


# ========================================
# 境界行列とホモロジー
# ========================================

def boundary_matrix(
    complex_: SimplicialComplex,
    i: int,
    table: Optional[dict[int, list[Face]]] = None
) -> np.ndarray:
    """∂_i: C_i → C_{i−1} の整数行列（行は (i−1) 面、列は i 面）

    k 番目（0始まり、昇順）の頂点を除いた面の係数は (−1)^k。∂_0 は全ての頂点を ∅ に送ります。
    """
    if i < 0:
        raise ComplexError(f"boundary index {i} is negative")
    table = table if table is not None else faces(complex_)
    rows = table.get(i - 1, [])
    cols = table.get(i, [])
    row_index = {face: r for r, face in enumerate(rows)}

    matrix = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for c, face in enumerate(cols):
        for k in range(len(face)):
            matrix[row_index[face[:k] + face[k + 1:]], c] = (-1) ** k
    return matrix


@functools.lru_cache(maxsize=None)
def _galois_field(p: int) -> type:
    return galois.GF(p)


def _rank(matrix: np.ndarray, field: FieldSpec) -> int:
    """体上の厳密な階数"""
    if matrix.size == 0:
        return 0
    if field.kind == "gf":
        gf = _galois_field(field.p)
        return int(np.linalg.matrix_rank(gf(matrix % field.p)))
    rows = [[QQ(int(v)) for v in row] for row in matrix.tolist()]
    return int(DomainMatrix(rows, matrix.shape, QQ).rank())


def reduced_betti(complex_: SimplicialComplex, field: FieldLike = GF2) -> HomologyProfile:
    """被約ベッチ数 β̃_i = f_i − rank ∂_i − rank ∂_{i+1}（−1 ≤ i ≤ dim）

    {∅} では β̃_{−1} = 1 となります。

    Raises:
        ComplexError: 空複体の場合
        FieldError: 係数体の記述子が不正な場合
    """
    spec = _as_field(field)
    if complex_.is_void:
        raise ComplexError("the void complex has no reduced homology")

    table = faces(complex_)
    top = complex_.dim
    ranks = {i: _rank(boundary_matrix(complex_, i, table), spec) for i in range(0, top + 1)}

    betti = {
        i: len(table[i]) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        for i in range(-1, top + 1)
    }
    return HomologyProfile(
        field=spec.label,
        reduced_betti=betti,
        face_counts={i: len(group) for i, group in table.items()}
    )


# ========================================
# Cohen-Macaulay 判定と強連結性
# ========================================

def is_cm_reisner(complex_: SimplicialComplex, field: FieldLike = GF2) -> ReisnerResult:
    """Reisner の判定法: 全ての面 σ で H̃_i(link(Δ,σ)) = 0（i < dim link）

    面は大きさの降順、同じ大きさでは辞書式順に調べ、∅ は最後です。
    極大面が一つのリンクは単体なので計算を省きます。同じリンクは一度だけ計算します。

    Raises:
        ComplexError: 空複体の場合
        FieldError: 係数体の記述子が不正な場合
    """
    spec = _as_field(field)
    if complex_.is_void:
        raise ComplexError("the Reisner criterion is undefined for the void complex")

    table = faces(complex_)
    ordered = [face for dim in sorted(table, reverse=True) for face in table[dim]]
    verdicts: dict[tuple[frozenset[int], ...], bool] = {}

    for checked, face in enumerate(ordered, start=1):
        lk = link(complex_, face)
        if len(lk.facets) <= 1:
            continue
        key = tuple(sorted(lk.facets, key=sorted))
        if key not in verdicts:
            profile = reduced_betti(lk, spec)
            verdicts[key] = profile.vanishes_below(lk.dim)
        if not verdicts[key]:
            logger.debug(f"Reisner criterion fails at face {face} over {spec.label}")
            return ReisnerResult(is_cm=False, witness=face, field=spec.label, checked_faces=checked)

    return ReisnerResult(is_cm=True, witness=None, field=spec.label, checked_faces=len(ordered))


def facet_graph(complex_: SimplicialComplex) -> nx.Graph:
    """極大面を頂点とし、共通部分が余次元 1 の面のとき隣接させたグラフ"""
    graph = nx.Graph()
    facets = complex_.sorted_facets()
    graph.add_nodes_from(facets)
    for a, b in itertools.combinations(facets, 2):
        if len(a) == len(b) and len(set(a) & set(b)) == len(a) - 1:
            graph.add_edge(a, b)
    return graph


def is_strongly_connected(complex_: SimplicialComplex) -> bool:
    """純粋かつ極大面グラフが連結か（純粋でない複体と空複体は False）"""
    if complex_.is_void or not complex_.is_pure:
        return False
    return nx.is_connected(facet_graph(complex_))
