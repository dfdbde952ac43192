"""シェリング順序の構成と検証

P_π の極大鎖を、異なる最大の添字 j′ で層順序 <_{j′}（自然数の逆順）により比較して
並べると、層の連結性条件を満たす次元 2 以下の半順序集合のシェリング順序になります。
"""

import functools
import logging
from collections.abc import Iterable, Sequence
from typing import Optional

from src.models.poset import Chain, HeightProfile, Poset
from src.models.verdict import ChainOrder, UpperCovers
from src.services import perm_service, poset_service
from src.utils.errors import ShellingError

logger = logging.getLogger(__name__)

DEFAULT_MAX_FACETS = 9


def upper_covers(poset: Poset, x: int) -> UpperCovers:
    """U(x) と層順序 <_{i+1} での x_min, x_max

    <_{i+1} は自然数の逆順なので、x_min は U(x) の数値最大、x_max は数値最小です。
    """
    poset.check_element(x)
    above = frozenset(y for a, y in poset_service.covers(poset) if a == x)
    if not above:
        return UpperCovers(element=x)
    return UpperCovers(element=x, covers=above, x_min=max(above), x_max=min(above))


def chain_compare_E(c1: Chain, c2: Chain, profile: HeightProfile) -> int:
    """極大鎖の比較 <_E

    異なる最大の添字 j′ で c1[j′] <_{j′} c2[j′]（数値として c1[j′] > c2[j′]）なら c1 が小さい。

    Returns:
        -1（less）, 0（equal）, 1（greater）

    Raises:
        ShellingError: 純粋でない、または長さの異なる鎖の場合
    """
    if not profile.pure:
        raise ShellingError("chain order is defined for pure posets only")
    if len(c1) != len(c2) or len(c1) != profile.rank + 1:
        raise ShellingError(f"chains {c1.elements} and {c2.elements} are not maximal chains of equal length")
    for index in range(len(c1) - 1, -1, -1):
        if c1[index] != c2[index]:
            return -1 if c1[index] > c2[index] else 1
    return 0


def e_order(poset: Poset, realizer: Optional[tuple] = None) -> ChainOrder:
    """<_E による極大鎖の並び（シェリング順序）

    実現子 (σ, τ) を π = σ⁻¹τ に正規化し、P_π の極大鎖を <_E で昇順に並べてから
    同型 j ↦ σ(j) で P に戻します。結果は verify_shelling で検証済みです。

    Raises:
        ShellingError: 層の連結性条件を満たさない、または次元 ≥ 3 の場合
    """
    from src.services.cm_service import condition4, dim2_realizer, verify_realizer

    criterion = condition4(poset)
    if not criterion.holds:
        raise ShellingError(f"poset does not satisfy the layer condition (witness: {criterion.witness})")
    if realizer is None:
        realizer = dim2_realizer(poset)
        if realizer is None:
            raise ShellingError("poset has dimension >= 3; no chain order is defined")
    elif not verify_realizer(poset, list(realizer)):
        raise ShellingError("supplied realizer does not intersect to the poset")

    sigma, tau = realizer
    pi, iso = perm_service.normalize_realizer(sigma, tau)
    normal = poset_service.from_linear_orders([perm_service.identity(poset.n), pi])
    profile = poset_service.height_profile(normal)

    ordered = sorted(
        poset_service.maximal_chains(normal),
        key=functools.cmp_to_key(lambda a, b: chain_compare_E(a, b, profile))
    )
    chains = [Chain(elements=tuple(iso[x] for x in chain.elements)) for chain in ordered]

    verified, violation = verify_shelling([chain.elements for chain in chains])
    if not verified:
        logger.error(f"Chain order for pi={pi} failed verification at {violation}")
    logger.debug(f"Chain order for pi={pi}: {len(chains)} chains, verified={verified}")
    return ChainOrder(chains=chains, verified=verified, first_violation=violation, normal_form=pi)


def _as_facets(facets: Iterable[Iterable[int]]) -> list[frozenset[int]]:
    result = [frozenset(facet) for facet in facets]
    if len(set(result)) != len(result):
        raise ShellingError("facet list contains duplicates")
    for a in result:
        for b in result:
            if a < b:
                raise ShellingError(f"facet {sorted(a)} is contained in {sorted(b)}")
    return result


def _first_size_mismatch(facets: Sequence[frozenset[int]]) -> Optional[int]:
    """最初の極大面と大きさが異なる最初の添字（純粋なら None）"""
    return next((i for i, facet in enumerate(facets) if len(facet) != len(facets[0])), None)


def _first_violation(prefix: Sequence[frozenset[int]], facet: frozenset[int]) -> Optional[int]:
    """facet を prefix の後に置いたとき条件を破る最初の j"""
    singletons = set()
    for earlier in prefix:
        difference = facet - earlier
        if len(difference) == 1:
            singletons |= difference
    for j, earlier in enumerate(prefix):
        if not (facet - earlier) & singletons:
            return j
    return None


def verify_shelling(facets: Sequence[Iterable[int]]) -> tuple[bool, Optional[tuple[int, int]]]:
    """シェリング条件の検証

    全ての j < i について、ある v ∈ γ_i∖γ_j と k < i で γ_i∖γ_k = {v} となるか。
    極大面の大きさが揃っていない並びは、最初に大きさの異なる面 i で (i, 0) を違反とします。

    Returns:
        (条件を満たすか, 辞書式最初の違反 (i, j))

    Raises:
        ShellingError: 極大面に重複・包含がある場合
    """
    ordered = _as_facets(facets)
    mismatch = _first_size_mismatch(ordered)
    if mismatch is not None:
        return False, (mismatch, 0)
    for i in range(1, len(ordered)):
        j = _first_violation(ordered[:i], ordered[i])
        if j is not None:
            return False, (i, j)
    return True, None


def brute_force_shelling(
    facets: Sequence[Iterable[int]],
    max_facets: int = DEFAULT_MAX_FACETS
) -> Optional[list[frozenset[int]]]:
    """シェリング順序の全探索（接頭辞ごとに枝刈り）

    Returns:
        verify_shelling を通る並び。存在しない場合と極大面の大きさが揃っていない場合は None

    Raises:
        ShellingError: 極大面数が max_facets を超える場合
    """
    pool = _as_facets(facets)
    if _first_size_mismatch(pool) is not None:
        return None
    if len(pool) > max_facets:
        raise ShellingError(f"{len(pool)} facets exceed the brute-force cap of {max_facets}")
    pool.sort(key=sorted)

    order: list[frozenset[int]] = []
    used = [False] * len(pool)

    def search() -> bool:
        if len(order) == len(pool):
            return True
        for index, facet in enumerate(pool):
            if used[index] or _first_violation(order, facet) is not None:
                continue
            used[index] = True
            order.append(facet)
            if search():
                return True
            order.pop()
            used[index] = False
        return False

    return list(order) if search() else None
