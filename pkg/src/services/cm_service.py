"""Cohen-Macaulay 判定サービス

次元 2 以下の半順序集合について、層の連結性条件・実現子探索・シェリング証明書を
組み合わせて判定します。比較不能グラフと辺イデアルの生成元もここで扱います。
"""

import itertools
import logging
from collections.abc import Sequence
from typing import Optional

import networkx as nx

from src.models.permutation import Graph, Permutation
from src.models.poset import HeightProfile, Poset
from src.models.verdict import CmVerdict, Condition4Result, DimensionClass
from src.services import poset_service
from src.utils.errors import LayerIndexError, SizeMismatchError

logger = logging.getLogger(__name__)

DEFAULT_EXHAUSTIVE_REALIZER_MAX_N = 9

Realizer = tuple[Permutation, Permutation]


# ========================================
# 層の連結性条件
# ========================================

def layer_subposet(poset: Poset, i: int, profile: Optional[HeightProfile] = None) -> Poset:
    """高さ i と i+1 の要素からなる誘導部分半順序集合

    Raises:
        LayerIndexError: rank 0、または i が 0..rank−1 の範囲外の場合
    """
    profile = profile or poset_service.height_profile(poset)
    if profile.rank == 0:
        raise LayerIndexError("a rank 0 poset has no pair of consecutive layers")
    if not 0 <= i <= profile.rank - 1:
        raise LayerIndexError(f"layer index {i} outside 0..{profile.rank - 1}")
    return poset_service.induced_subposet(poset, profile.layers[i] + profile.layers[i + 1])


def condition4(poset: Poset) -> Condition4Result:
    """反鎖であるか、純粋かつ全ての隣接2層の誘導部分半順序集合が連結か"""
    profile = poset_service.height_profile(poset)
    if poset_service.is_antichain(poset):
        # rank 0 の半順序集合は反鎖に限る
        return Condition4Result(holds=True, is_antichain=True, pure=True)
    if not profile.pure:
        return Condition4Result(holds=False, is_antichain=False, pure=False)

    for i in range(profile.rank):
        sub = layer_subposet(poset, i, profile)
        components = poset_service.connected_components(sub)
        if len(components) > 1:
            parts = [sorted(sub.label_map[v] for v in component) for component in components]
            logger.debug(f"Layers {i},{i + 1} split into components {parts}")
            return Condition4Result(holds=False, is_antichain=False, pure=True, failing_layer=i)
    return Condition4Result(holds=True, is_antichain=False, pure=True)


# ========================================
# 次元 2 の実現子
# ========================================

def _transitive_orientation(graph: nx.Graph) -> Optional[set[tuple[int, int]]]:
    """推移的向き付けをΓ強制と後戻りで探索"""

    def force(arc: tuple[int, int], orientation: dict[frozenset, tuple[int, int]]) -> bool:
        stack = [arc]
        while stack:
            a, b = stack.pop()
            key = frozenset((a, b))
            if key in orientation:
                if orientation[key] != (a, b):
                    return False
                continue
            orientation[key] = (a, b)
            # a→b かつ bc が辺でなければ a→c
            for c in graph[a]:
                if c != b and not graph.has_edge(b, c):
                    stack.append((a, c))
            # a→b かつ ac が辺でなければ c→b
            for c in graph[b]:
                if c != a and not graph.has_edge(a, c):
                    stack.append((c, b))
        return True

    def is_transitive(orientation: dict[frozenset, tuple[int, int]]) -> bool:
        successors: dict[int, set[int]] = {v: set() for v in graph.nodes}
        for a, b in orientation.values():
            successors[a].add(b)
        return all(
            c in successors[a]
            for a in successors
            for b in successors[a]
            for c in successors[b]
        )

    edges = sorted(tuple(sorted(edge)) for edge in graph.edges)

    def search(orientation: dict[frozenset, tuple[int, int]]) -> Optional[dict]:
        pending = next((edge for edge in edges if frozenset(edge) not in orientation), None)
        if pending is None:
            return orientation if is_transitive(orientation) else None
        u, v = pending
        for arc in ((u, v), (v, u)):
            trial = dict(orientation)
            if force(arc, trial):
                found = search(trial)
                if found is not None:
                    return found
        return None

    result = search({})
    return None if result is None else set(result.values())


def _extension_of(poset: Poset, extra_arcs: set[tuple[int, int]]) -> Optional[Permutation]:
    digraph = nx.DiGraph()
    digraph.add_nodes_from(poset.elements)
    digraph.add_edges_from(poset.relations())
    digraph.add_edges_from(extra_arcs)
    if not nx.is_directed_acyclic_graph(digraph):
        return None
    return Permutation(word=tuple(nx.lexicographical_topological_sort(digraph)))


def verify_realizer(poset: Poset, lines: Sequence[Permutation]) -> bool:
    """線形順序の交わりが P に一致するか"""
    if not lines or any(line.n != poset.n for line in lines):
        return False
    return poset_service.from_linear_orders(lines) == poset


def _partner_of(poset: Poset, sigma: Permutation) -> Optional[Permutation]:
    """σ と組んで P を実現する τ（存在しなければ None）

    τ は σ で比較不能な組を全て逆順にした線形拡大でなければなりません。
    """
    reversed_pairs = {
        (y, x)
        for x in poset.elements
        for y in poset.elements
        if x != y and not poset.comparable(x, y) and sigma.precedes(x, y)
    }
    tau = _extension_of(poset, reversed_pairs)
    if tau is not None and verify_realizer(poset, [sigma, tau]):
        return tau
    return None


def dim2_realizer(
    poset: Poset,
    exhaustive_max_n: int = DEFAULT_EXHAUSTIVE_REALIZER_MAX_N
) -> Optional[Realizer]:
    """交わりが P になる線形拡大の組を探す（次元 ≥ 3 なら None）

    恒等置換が線形拡大なら、まず σ = id を試します（P がすでに P_π の形なら
    π がそのまま得られる）。次に比較不能グラフの推移的向き付け Q を探し、σ を
    P ∪ Q、τ を P ∪ Qᵒᵖ の線形拡大とします。向き付けが存在しなければ次元 ≥ 3 です。
    向き付けから実現子が得られなかった場合に限り、n ≤ exhaustive_max_n のとき線形拡大を
    全探索します。返す実現子は全て交わりで検証済みです。
    """
    if poset_service.is_chain(poset):
        extension = next(poset_service.linear_extensions(poset))
        return extension, extension

    identity = Permutation(word=tuple(poset.elements))
    if poset_service.is_linear_extension(poset, identity):
        tau = _partner_of(poset, identity)
        if tau is not None:
            return identity, tau

    incomparability = cocomparability_graph(poset).to_networkx()
    orientation = _transitive_orientation(incomparability)
    if orientation is None:
        logger.debug("Incomparability graph has no transitive orientation")
        return None
    sigma = _extension_of(poset, orientation)
    tau = _extension_of(poset, {(b, a) for a, b in orientation})
    if sigma is not None and tau is not None and verify_realizer(poset, [sigma, tau]):
        logger.debug(f"Realizer from transitive orientation: ({sigma}, {tau})")
        return sigma, tau
    logger.warning("Transitive orientation did not yield a realizer, falling back to search")

    if poset.n > exhaustive_max_n:
        return None

    for sigma in poset_service.linear_extensions(poset):
        tau = _partner_of(poset, sigma)
        if tau is not None:
            logger.debug(f"Realizer from exhaustive search: ({sigma}, {tau})")
            return sigma, tau
    return None


def dimension_class(
    poset: Poset,
    exhaustive_max_n: int = DEFAULT_EXHAUSTIVE_REALIZER_MAX_N
) -> tuple[DimensionClass, Optional[Realizer]]:
    """次元の分類と（次元 ≤ 2 なら）実現子"""
    realizer = dim2_realizer(poset, exhaustive_max_n)
    if realizer is None:
        return DimensionClass.AT_LEAST_THREE, None
    if poset_service.is_chain(poset):
        return DimensionClass.AT_MOST_ONE, realizer
    return DimensionClass.TWO, realizer


# ========================================
# 判定
# ========================================

def decide_cm(
    poset: Poset,
    realizer: Optional[Realizer] = None,
    exhaustive_max_n: int = DEFAULT_EXHAUSTIVE_REALIZER_MAX_N
) -> CmVerdict:
    """Cohen-Macaulay 判定

    次元 ≤ 1 なら常に CM、次元 2 なら層の連結性条件と一致し、シェリング証明書を
    添付します。次元 ≥ 3 では判定せず cm を None のままにします。

    Args:
        poset: 判定する半順序集合
        realizer: 既知の実現子（省略時は探索）
        exhaustive_max_n: 実現子の全探索を行う最大の n

    Raises:
        ValueError: 与えられた realizer の交わりが P に一致しない場合
    """
    from src.services.shelling_service import e_order

    criterion = condition4(poset)

    if realizer is not None:
        if not verify_realizer(poset, list(realizer)):
            raise ValueError("supplied realizer does not intersect to the poset")
        dim_class = DimensionClass.AT_MOST_ONE if poset_service.is_chain(poset) else DimensionClass.TWO
    else:
        dim_class, realizer = dimension_class(poset, exhaustive_max_n)

    cm: Optional[bool]
    certificate = None
    note = None
    if dim_class == DimensionClass.AT_MOST_ONE:
        cm = True
        certificate = e_order(poset, realizer)
        note = "linear order: the edge ideal of the co-comparability graph is the trivial ideal"
    elif dim_class == DimensionClass.TWO:
        cm = criterion.holds
        if cm:
            certificate = e_order(poset, realizer)
    else:
        cm = None
        note = "dimension >= 3: undecided by the dimension-two criterion; use the Reisner oracle (topology.is_cm_reisner)"

    verdict = CmVerdict(
        is_antichain=criterion.is_antichain,
        pure=criterion.pure,
        condition4=criterion.holds,
        failing_layer=criterion.failing_layer,
        dimension_class=dim_class,
        realizer=realizer,
        cm=cm,
        shelling_certificate=certificate,
        note=note
    )
    logger.info(
        f"Verdict: n={poset.n}, {dim_class.value}, condition4={criterion.holds}, cm={cm}"
    )
    return verdict


def decide_cm_permutation_graph(lines: Sequence[Permutation]) -> CmVerdict:
    """2直線の置換図式で与えた置換グラフの Cohen-Macaulay 判定

    P を2つの置換の交わりとすると、P の順序複体の Stanley-Reisner イデアルは
    置換グラフの辺イデアルに一致するので、P の判定がそのまま使えます（体によらない）。

    Raises:
        SizeMismatchError: 置換が2つでない、または大きさが異なる場合
    """
    if len(lines) != 2:
        raise SizeMismatchError(f"a permutation diagram has exactly 2 lines, got {len(lines)}")
    poset = poset_service.from_linear_orders(lines)
    return decide_cm(poset, realizer=(lines[0], lines[1]))


# ========================================
# 比較不能グラフと辺イデアル
# ========================================

def cocomparability_graph(poset: Poset) -> Graph:
    """比較不能な組を辺とするグラフ"""
    comparable = {tuple(sorted(pair)) for pair in poset_service.comparable_pairs(poset)}
    edges = set(itertools.combinations(poset.elements, 2)) - comparable
    return Graph(n=poset.n, edges=frozenset(edges))


def edge_ideal_generators(graph: Graph) -> list[tuple[int, int]]:
    """辺イデアル I_G の生成元 x_i·x_j（i < j、辞書式順）。辺がなければ空"""
    return graph.sorted_edges()
