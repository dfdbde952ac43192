"""置換演算・実現子の正規化・置換図式の交差グラフ

置換は全て純粋関数として扱い、値は構築後に変更されません。
"""

import itertools
import logging
from collections.abc import Iterator, Sequence

from src.models.permutation import Graph, Permutation
from src.utils.errors import SizeMismatchError

logger = logging.getLogger(__name__)


def identity(n: int) -> Permutation:
    """恒等置換 [1, ..., n]"""
    return Permutation(word=tuple(range(1, n + 1)))


def inverse(p: Permutation) -> Permutation:
    """逆置換 q（q(p(a)) = a）"""
    word = [0] * p.n
    for a, value in enumerate(p.word, start=1):
        word[value - 1] = a
    return Permutation(word=tuple(word))


def compose(s: Permutation, t: Permutation) -> Permutation:
    """合成 r(a) = s(t(a))

    Raises:
        SizeMismatchError: s と t の大きさが異なる場合
    """
    if s.n != t.n:
        raise SizeMismatchError(f"cannot compose permutations of sizes {s.n} and {t.n}")
    return Permutation(word=tuple(s(t(a)) for a in range(1, t.n + 1)))


def normalize_realizer(s: Permutation, t: Permutation) -> tuple[Permutation, dict[int, int]]:
    """実現子 (σ, τ) を P_{id,π} の形に正規化

    π = σ⁻¹τ とし、j ↦ σ(j) が P_{id,π} から P_{σ,τ} への順序同型になります。

    Returns:
        (π, 同型写像 j ↦ σ(j))

    Raises:
        SizeMismatchError: s と t の大きさが異なる場合
    """
    pi = compose(inverse(s), t)
    iso = {j: s(j) for j in range(1, s.n + 1)}
    logger.debug(f"Normalized realizer ({s}, {t}) to pi={pi}")
    return pi, iso


def augment(p: Permutation) -> Permutation:
    """π′ = [0, π, n+1] を {1..n+2} 上に付け替えたもの（全ての値を 1 ずらす）"""
    return Permutation(word=(1, *(v + 1 for v in p.word), p.n + 2))


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n の全ての置換を辞書式順に列挙"""
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word=word)


def diagram_intersection_graph(lines: Sequence[Permutation]) -> Graph:
    """k 個の置換図式を連結した図式の交差グラフ

    曲線 f_i と f_j が交わるのは、ある隣接する直線の組で i と j の相対順序が
    入れ替わるとき、すなわちいずれかの2直線で相対順序が異なるときです。

    Raises:
        SizeMismatchError: 直線が2本未満、または長さが揃っていない場合
    """
    if len(lines) < 2:
        raise SizeMismatchError(f"a diagram needs at least 2 lines, got {len(lines)}")
    n = lines[0].n
    if any(line.n != n for line in lines):
        raise SizeMismatchError(f"lines have different sizes: {[line.n for line in lines]}")

    edges = set()
    for i, j in itertools.combinations(range(1, n + 1), 2):
        orders = {line.precedes(i, j) for line in lines}
        if len(orders) > 1:
            edges.add((i, j))

    logger.debug(f"Diagram with {len(lines)} lines on {n} curves has {len(edges)} crossings")
    return Graph(n=n, edges=frozenset(edges))
