"""置換とグラフのモデル"""

from collections.abc import Iterable
from typing import Any

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator


class Permutation(BaseModel):
    """{1..n} 上の置換

    語 word は左から右への順序として線形順序も表します
    （a が b より左にあるとき a は b より前）。
    """
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"word": [2, 1, 3, 5, 4]}}
    )

    word: tuple[int, ...] = Field(..., min_length=1, description="1..n の各値をちょうど一度ずつ含む語")

    _positions: dict[int, int] = PrivateAttr(default_factory=dict)

    @field_validator("word")
    @classmethod
    def _check_bijection(cls, word: tuple[int, ...]) -> tuple[int, ...]:
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"word {list(word)} is not a permutation of 1..{len(word)}")
        return word

    def model_post_init(self, __context: Any) -> None:
        self._positions = {value: index for index, value in enumerate(self.word)}

    @classmethod
    def from_word(cls, word: Iterable[int]) -> "Permutation":
        return cls(word=tuple(word))

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, a: int) -> int:
        """π(a) を返す（1始まり）"""
        return self.word[a - 1]

    def position(self, value: int) -> int:
        """value の語中の位置（0始まり）"""
        return self._positions[value]

    def precedes(self, a: int, b: int) -> bool:
        """線形順序として a が b より前にあるか"""
        return self._positions[a] < self._positions[b]

    def is_identity(self) -> bool:
        return all(value == index for index, value in enumerate(self.word, start=1))

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.word) + "]"


class Graph(BaseModel):
    """頂点集合 {1..n} 上の単純無向グラフ"""
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"n": 5, "edges": [[1, 2], [4, 5]]}}
    )

    n: int = Field(..., ge=0, description="頂点数")
    edges: frozenset[tuple[int, int]] = Field(default_factory=frozenset, description="辺 {i,j}（i<j に正規化）")

    @field_validator("edges", mode="before")
    @classmethod
    def _normalize_edges(cls, edges: Any) -> frozenset[tuple[int, int]]:
        normalized = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            normalized.add((min(i, j), max(i, j)))
        return frozenset(normalized)

    @model_validator(mode="after")
    def _check_range(self) -> "Graph":
        for i, j in self.edges:
            if i < 1 or j > self.n:
                raise ValueError(f"edge {{{i},{j}}} outside 1..{self.n}")
        return self

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges)
        return graph
