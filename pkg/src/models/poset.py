"""半順序集合のモデル

Poset は推移閉包済みの狭義順序を n×n の真偽値行列として保持します。
要素は常に 1..n で、部分半順序集合は親への対応表（labels）を持ちます。
"""

from collections.abc import Iterable, Sequence
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.utils.errors import LabelRangeError, OrderCycleError


class Poset:
    """有限半順序集合

    lt[x-1, y-1] が真であることと x < y が同値です。構築時に非反射律・反対称律・
    推移律を検査し、行列は読み取り専用として保持します。
    """

    __slots__ = ("_lt", "_labels")

    def __init__(self, lt: np.ndarray, labels: Optional[Sequence[int]] = None):
        """
        Args:
            lt: n×n の真偽値行列（推移閉包済み）
            labels: 各要素の親半順序集合でのラベル（省略時は 1..n）
        """
        matrix = np.array(lt, dtype=bool)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"relation matrix must be square, got shape {matrix.shape}")
        n = matrix.shape[0]

        if matrix.diagonal().any():
            raise OrderCycleError("relation is not irreflexive")
        if (matrix & matrix.T).any():
            x, y = (int(v) + 1 for v in np.argwhere(matrix & matrix.T)[0])
            raise OrderCycleError(f"relation is not antisymmetric: {x} < {y} < {x}", cycle=[x, y])
        # 推移律: lt∘lt ⊆ lt
        composed = (matrix.astype(np.int64) @ matrix.astype(np.int64)) > 0
        if (composed & ~matrix).any():
            raise ValueError("relation is not transitively closed")

        if labels is None:
            labels = range(1, n + 1)
        labels = tuple(int(v) for v in labels)
        if len(labels) != n:
            raise LabelRangeError(f"expected {n} labels, got {len(labels)}")

        matrix.setflags(write=False)
        self._lt = matrix
        self._labels = labels

    @property
    def n(self) -> int:
        return self._lt.shape[0]

    @property
    def lt(self) -> np.ndarray:
        return self._lt

    @property
    def labels(self) -> tuple[int, ...]:
        return self._labels

    @property
    def label_map(self) -> dict[int, int]:
        """要素 → 親半順序集合でのラベル"""
        return {index: label for index, label in enumerate(self._labels, start=1)}

    @property
    def elements(self) -> range:
        return range(1, self.n + 1)

    def check_element(self, x: int) -> None:
        if not 1 <= x <= self.n:
            raise LabelRangeError(f"element {x} outside 1..{self.n}")

    def less(self, x: int, y: int) -> bool:
        return bool(self._lt[x - 1, y - 1])

    def leq(self, x: int, y: int) -> bool:
        return x == y or bool(self._lt[x - 1, y - 1])

    def comparable(self, x: int, y: int) -> bool:
        return x == y or bool(self._lt[x - 1, y - 1] or self._lt[y - 1, x - 1])

    def relations(self) -> set[tuple[int, int]]:
        """全ての狭義関係 (x, y), x < y"""
        return {(int(x) + 1, int(y) + 1) for x, y in np.argwhere(self._lt)}

    def upset(self, x: int) -> list[int]:
        return [int(y) + 1 for y in np.flatnonzero(self._lt[x - 1])]

    def downset(self, x: int) -> list[int]:
        return [int(y) + 1 for y in np.flatnonzero(self._lt[:, x - 1])]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self._lt, other._lt))

    def __hash__(self) -> int:
        return hash((self.n, self._lt.tobytes()))

    def __repr__(self) -> str:
        pairs = ", ".join(f"{x}<{y}" for x, y in sorted(self.relations()))
        return f"Poset(n={self.n}, {{{pairs}}})"


class Chain(BaseModel):
    """鎖（P で狭義増加する要素列）"""
    model_config = ConfigDict(frozen=True)

    elements: tuple[int, ...] = Field(..., description="P で増加順に並んだ要素")

    @classmethod
    def of(cls, elements: Iterable[int]) -> "Chain":
        return cls(elements=tuple(elements))

    @property
    def length(self) -> int:
        """鎖の長さ（要素数 − 1）"""
        return len(self.elements) - 1

    def as_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, index: int) -> int:
        return self.elements[index]


class HeightProfile(BaseModel):
    """高さ・ランク・純粋性・層分割"""
    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "heights": {"1": 0, "2": 0, "3": 1, "4": 2, "5": 2},
                "rank": 2,
                "pure": True,
                "layers": [[1, 2], [3], [4, 5]]
            }
        }
    )

    heights: dict[int, int] = Field(..., description="要素 → 高さ")
    rank: int = Field(..., ge=0, description="極大鎖の長さの最大値")
    pure: bool = Field(..., description="全ての極大鎖の長さが rank に等しいか")
    layers: list[list[int]] = Field(..., description="P_0, ..., P_rank（各層は昇順）")

    def layer_of(self, x: int) -> int:
        return self.heights[x]
