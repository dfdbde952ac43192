"""単体複体・係数体・ホモロジーのモデル"""

import re
from collections.abc import Iterable
from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import isprime

from src.utils.errors import FieldError

_GF_PATTERN = re.compile(r"^gf\(?(\d+)\)?$")


class FieldSpec(BaseModel):
    """係数体の指定（素体 GF(p) または有理数体）"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["gf", "rat"] = Field(..., description="gf: 素体, rat: 有理数体")
    p: Optional[int] = Field(None, description="素体の標数")

    @classmethod
    def parse(cls, descriptor: str) -> "FieldSpec":
        """'gf2', 'gf3', 'gf<p>', 'rat' などの記述子を解析

        Raises:
            FieldError: 未知の記述子、または p が素数でない場合
        """
        text = descriptor.strip().lower()
        if text in ("rat", "qq", "q", "rational", "rationals"):
            return cls(kind="rat")
        match = _GF_PATTERN.match(text)
        if match is None:
            raise FieldError(f"unknown field descriptor '{descriptor}'", descriptor=descriptor)
        p = int(match.group(1))
        if not isprime(p):
            raise FieldError(f"field modulus {p} is not prime", descriptor=descriptor)
        return cls(kind="gf", p=p)

    @property
    def descriptor(self) -> str:
        return "rat" if self.kind == "rat" else f"gf{self.p}"

    @property
    def label(self) -> str:
        return "QQ" if self.kind == "rat" else f"GF({self.p})"


GF2 = FieldSpec(kind="gf", p=2)


class SimplicialComplex(BaseModel):
    """極大面で与える有限単体複体

    面は極大面の部分集合全体（非空な複体では ∅ を含む）です。
    facets が空のものは空複体（void complex）、facets == (∅,) は {∅} を表します。
    """
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"vertices": [4, 5, 7, 8], "facets": [[4, 7], [5, 8]]}}
    )

    vertices: frozenset[int] = Field(default_factory=frozenset, description="頂点ラベル集合")
    facets: tuple[frozenset[int], ...] = Field(default_factory=tuple, description="極大面")

    @field_validator("facets", mode="before")
    @classmethod
    def _freeze_facets(cls, facets: Any) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(facet) for facet in facets)

    @model_validator(mode="after")
    def _check_facets(self) -> "SimplicialComplex":
        if len(set(self.facets)) != len(self.facets):
            raise ValueError("duplicate facets")
        for a in self.facets:
            for b in self.facets:
                if a is not b and a < b:
                    raise ValueError(f"facet {sorted(a)} is contained in {sorted(b)}")
        covered = frozenset().union(*self.facets) if self.facets else frozenset()
        if not covered <= self.vertices:
            raise ValueError(f"facet vertices {sorted(covered - self.vertices)} missing from vertex set")
        return self

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]], vertices: Optional[Iterable[int]] = None) -> "SimplicialComplex":
        """任意の面の集まりから極大なものだけを残して複体を作る"""
        unique = {frozenset(face) for face in faces}
        maximal = [face for face in unique if not any(face < other for other in unique)]
        maximal.sort(key=lambda face: (sorted(face), len(face)))
        if vertices is None:
            vertices = frozenset().union(*maximal) if maximal else frozenset()
        return cls(vertices=frozenset(vertices), facets=tuple(maximal))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """次元（最大の極大面の大きさ − 1）。{∅} は −1"""
        if self.is_void:
            raise ValueError("void complex has no dimension")
        return max(len(facet) for facet in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(facet) for facet in self.facets}) <= 1

    def contains_face(self, face: Iterable[int]) -> bool:
        target = frozenset(face)
        return any(target <= facet for facet in self.facets)

    def sorted_facets(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(facet)) for facet in self.facets)


class HomologyProfile(BaseModel):
    """被約ホモロジーのベッチ数"""
    model_config = ConfigDict(
        json_schema_extra={
            "example": {"field": "GF(2)", "reduced_betti": {"-1": 0, "0": 1, "1": 0}, "face_counts": {"-1": 1, "0": 4, "1": 2}}
        }
    )

    field: str = Field(..., description="係数体のラベル")
    reduced_betti: dict[int, int] = Field(..., description="i → β̃_i（−1 ≤ i ≤ dim）")
    face_counts: dict[int, int] = Field(..., description="i → i 次元面の個数 f_i（f_{−1} = 1）")

    def betti(self, i: int) -> int:
        return self.reduced_betti.get(i, 0)

    def euler_identity_holds(self) -> bool:
        """Σ_{i≥0} (−1)^i f_i − 1 = Σ_i (−1)^i β̃_i"""
        lhs = sum((-1) ** i * count for i, count in self.face_counts.items() if i >= 0) - 1
        rhs = sum((-1) ** (i % 2) * beta for i, beta in self.reduced_betti.items())
        return lhs == rhs

    def vanishes_below(self, degree: int) -> bool:
        """i < degree の全ての β̃_i が 0 か"""
        return all(beta == 0 for i, beta in self.reduced_betti.items() if i < degree)


class ReisnerResult(BaseModel):
    """Reisner 判定の結果"""

    is_cm: bool = Field(..., description="Cohen-Macaulay か")
    witness: Optional[tuple[int, ...]] = Field(None, description="最初に条件を満たさなかった面")
    field: str = Field(..., description="係数体のラベル")
    checked_faces: int = Field(..., ge=0, description="検査した面の数")
