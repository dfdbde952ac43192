"""有限半順序集合の構成と基本操作

線形順序の交わり・被覆関係からの構成、高さとランク、極大鎖、線形拡大、
連結成分、部分半順序集合、同型写像の検証を提供します。
"""

import logging
import random
from collections.abc import Iterable, Iterator, Mapping, Sequence

import networkx as nx
import numpy as np

from src.models.permutation import Permutation
from src.models.poset import Chain, HeightProfile, Poset
from src.utils.errors import LabelRangeError, OrderCycleError, SizeMismatchError

logger = logging.getLogger(__name__)


# ========================================
# 構成
# ========================================

def from_linear_orders(lines: Sequence[Permutation]) -> Poset:
    """線形順序の族の交わり

    x < y となるのは全ての線形順序で x が y より前にあるときです。

    Raises:
        SizeMismatchError: 空のリスト、または大きさが揃っていない場合
    """
    if not lines:
        raise SizeMismatchError("at least one linear order is required")
    n = lines[0].n
    if any(line.n != n for line in lines):
        raise SizeMismatchError(f"linear orders have different sizes: {[line.n for line in lines]}")

    lt = np.ones((n, n), dtype=bool)
    for line in lines:
        positions = np.array([line.position(x) for x in range(1, n + 1)])
        lt &= positions[:, None] < positions[None, :]

    poset = Poset(lt)
    logger.debug(f"Intersected {len(lines)} linear orders on {n} elements: {len(poset.relations())} relations")
    return poset


def from_covers(n: int, covers: Iterable[tuple[int, int]]) -> Poset:
    """被覆関係（または任意の関係）の推移閉包

    Raises:
        LabelRangeError: ラベルが 1..n の範囲外の場合
        OrderCycleError: 推移閉包が反対称律を満たさない場合
    """
    digraph = nx.DiGraph()
    digraph.add_nodes_from(range(1, n + 1))
    for a, b in covers:
        for label in (a, b):
            if not 1 <= label <= n:
                raise LabelRangeError(f"cover label {label} outside 1..{n}")
        digraph.add_edge(a, b)

    if not nx.is_directed_acyclic_graph(digraph):
        cycle = [edge[0] for edge in nx.find_cycle(digraph)]
        raise OrderCycleError(f"cover relation contains a cycle through {cycle}", cycle=cycle)

    closure = nx.transitive_closure_dag(digraph)
    lt = np.zeros((n, n), dtype=bool)
    for a, b in closure.edges():
        lt[a - 1, b - 1] = True
    return Poset(lt)


def random_pure_poset(n: int, rng: random.Random, density: float = 0.4) -> Poset:
    """ランダムな純粋半順序集合

    要素を層に分け、隣接する層の間にだけ被覆を張ります。各要素は一つ下の層に
    少なくとも一つの下被覆、一つ上の層に少なくとも一つの上被覆を持つため純粋です。
    ラベルはシャッフルするので次元は任意です。
    """
    if n < 1:
        raise ValueError("n must be positive")
    layer_count = rng.randint(1, n)
    cuts = sorted(rng.sample(range(1, n), layer_count - 1))
    sizes = [b - a for a, b in zip([0, *cuts], [*cuts, n], strict=True)]

    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    layers: list[list[int]] = []
    start = 0
    for size in sizes:
        layers.append(labels[start:start + size])
        start += size

    covers = set()
    for lower, upper in zip(layers, layers[1:], strict=False):
        for y in upper:
            covers.update((x, y) for x in lower if rng.random() < density)
            if not any((x, y) in covers for x in lower):
                covers.add((rng.choice(lower), y))
        for x in lower:
            if not any((x, y) in covers for y in upper):
                covers.add((x, rng.choice(upper)))
    return from_covers(n, covers)


# ========================================
# 基本的な問い合わせ
# ========================================

def covers(poset: Poset) -> set[tuple[int, int]]:
    """被覆関係 x ⋖ y の全体"""
    lt = poset.lt.astype(np.int64)
    between = (lt @ lt) > 0
    return {(int(x) + 1, int(y) + 1) for x, y in np.argwhere(poset.lt & ~between)}


def comparable_pairs(poset: Poset) -> set[tuple[int, int]]:
    return poset.relations()


def is_antichain(poset: Poset) -> bool:
    return not poset.lt.any()


def is_chain(poset: Poset) -> bool:
    """全順序か（要素数 1 以下も含む）"""
    return len(poset.relations()) == poset.n * (poset.n - 1) // 2


def height_profile(poset: Poset) -> HeightProfile:
    """各要素の高さ、ランク、純粋性、層分割"""
    heights: dict[int, int] = {}
    # x < y なら下集合は真に小さいので、下集合の大きさ順は線形拡大になる
    down_sizes = poset.lt.sum(axis=0)
    for x in sorted(poset.elements, key=lambda v: int(down_sizes[v - 1])):
        below = poset.downset(x)
        heights[x] = max((heights[z] + 1 for z in below), default=0)

    rank = max(heights.values(), default=0)
    cover_pairs = covers(poset)
    maximal = [x for x in poset.elements if not poset.upset(x)]
    pure = all(heights[y] == heights[x] + 1 for x, y in cover_pairs) and all(
        heights[x] == rank for x in maximal
    )
    layers = [sorted(x for x, h in heights.items() if h == i) for i in range(rank + 1)]
    if poset.n == 0:
        layers = []
    return HeightProfile(heights=heights, rank=rank, pure=pure, layers=layers)


def induced_subposet(poset: Poset, subset: Iterable[int]) -> Poset:
    """S 上の誘導部分半順序集合

    結果の要素は 1..|S| で、labels が P での要素を表します。

    Raises:
        LabelRangeError: S に範囲外のラベルがある場合
    """
    elements = sorted(set(subset))
    for x in elements:
        poset.check_element(x)
    index = np.array([x - 1 for x in elements], dtype=np.intp)
    lt = poset.lt[np.ix_(index, index)] if elements else np.zeros((0, 0), dtype=bool)
    return Poset(lt, labels=elements)


def interval(poset: Poset, x: int, y: int) -> Poset:
    """区間 [x, y] = {z : x ≤ z ≤ y}"""
    poset.check_element(x)
    poset.check_element(y)
    if not poset.leq(x, y):
        raise ValueError(f"{x} is not below {y}")
    members = [z for z in poset.elements if poset.leq(x, z) and poset.leq(z, y)]
    return induced_subposet(poset, members)


def connected_components(poset: Poset) -> list[set[int]]:
    """比較可能性グラフの連結成分（最小要素の順）"""
    graph = nx.Graph()
    graph.add_nodes_from(poset.elements)
    graph.add_edges_from(poset.relations())
    return sorted((set(component) for component in nx.connected_components(graph)), key=min)


def maximal_chains(poset: Poset) -> list[Chain]:
    """極大鎖を辞書式順に列挙

    極大鎖はハッセ図上で極小元から極大元へ向かう道と一致します。
    """
    upper: dict[int, list[int]] = {x: [] for x in poset.elements}
    for x, y in covers(poset):
        upper[x].append(y)
    minimal = [x for x in poset.elements if not poset.downset(x)]

    chains: list[Chain] = []

    def extend(path: list[int]) -> None:
        successors = sorted(upper[path[-1]])
        if not successors:
            chains.append(Chain(elements=tuple(path)))
            return
        for y in successors:
            path.append(y)
            extend(path)
            path.pop()

    for x in minimal:
        extend([x])
    chains.sort(key=lambda chain: chain.elements)
    return chains


def linear_extensions(poset: Poset) -> Iterator[Permutation]:
    """線形拡大を全て列挙（ストリーム）"""
    digraph = nx.DiGraph()
    digraph.add_nodes_from(poset.elements)
    digraph.add_edges_from(covers(poset))
    for order in nx.all_topological_sorts(digraph):
        yield Permutation(word=tuple(order))


def is_linear_extension(poset: Poset, line: Permutation) -> bool:
    """line の線形順序が P の順序を含むか"""
    if line.n != poset.n:
        return False
    return all(line.precedes(x, y) for x, y in poset.relations())


def isomorphism_check(p: Poset, q: Poset, mapping: Mapping[int, int]) -> bool:
    """f が P から Q への順序同型か（x ≤ y in P ⇔ f(x) ≤ f(y) in Q）

    Raises:
        LabelRangeError: f が基礎集合の間の全単射でない場合
    """
    domain = set(mapping.keys())
    image = set(mapping.values())
    if domain != set(p.elements) or image != set(q.elements) or len(image) != len(domain):
        raise LabelRangeError("mapping is not a bijection between the ground sets")
    index = np.array([mapping[x] - 1 for x in p.elements], dtype=np.intp)
    return bool(np.array_equal(q.lt[np.ix_(index, index)], p.lt))
