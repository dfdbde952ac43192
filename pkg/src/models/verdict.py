"""判定結果のモデル"""

from enum import Enum
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.models.permutation import Permutation
from src.models.poset import Chain

NOT_PURE = "not pure"


class DimensionClass(str, Enum):
    """次元の分類"""
    AT_MOST_ONE = "dim<=1"
    TWO = "dim=2"
    AT_LEAST_THREE = "dim>=3"


class Condition4Result(BaseModel):
    """層の連結性条件の判定結果

    witness は最初に連結でなかった層の番号 i、純粋でない場合は "not pure"。
    """
    model_config = ConfigDict(frozen=True)

    holds: bool = Field(..., description="条件を満たすか")
    is_antichain: bool = Field(..., description="反鎖か")
    pure: bool = Field(..., description="純粋か")
    failing_layer: Optional[int] = Field(None, description="連結でない最初の層 P_i ∪ P_{i+1} の i")

    @property
    def witness(self) -> Union[int, str, None]:
        if self.holds:
            return None
        if not self.pure:
            return NOT_PURE
        return self.failing_layer

    def __bool__(self) -> bool:
        return self.holds


class UpperCovers(BaseModel):
    """U(x) と層順序 <_{i+1} での最小・最大"""
    model_config = ConfigDict(frozen=True)

    element: int
    covers: frozenset[int] = Field(default_factory=frozenset, description="x を被覆する要素全体")
    x_min: Optional[int] = Field(None, description="<_{i+1} での最小（数値としては最大）")
    x_max: Optional[int] = Field(None, description="<_{i+1} での最大（数値としては最小）")


class ChainOrder(BaseModel):
    """極大鎖の並び（シェリング順序の候補）と検証結果"""

    chains: list[Chain] = Field(..., description="極大鎖の並び")
    verified: bool = Field(..., description="シェリング条件を満たすか")
    first_violation: Optional[tuple[int, int]] = Field(None, description="最初に条件を破る (i, j)")
    normal_form: Optional[Permutation] = Field(None, description="並びを計算した P_π の π")

    def as_lists(self) -> list[list[int]]:
        return [list(chain.elements) for chain in self.chains]


class CmVerdict(BaseModel):
    """Cohen-Macaulay 判定の結果一式"""
    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "is_antichain": False,
                "pure": True,
                "condition4": True,
                "failing_layer": None,
                "dimension_class": "dim=2",
                "realizer": [{"word": [2, 3, 1, 4, 5]}, {"word": [3, 2, 1, 5, 4]}],
                "cm": True,
                "shelling_certificate": None,
                "note": None
            }
        }
    )

    is_antichain: bool = Field(..., description="反鎖か")
    pure: bool = Field(..., description="純粋か")
    condition4: bool = Field(..., description="反鎖、または純粋かつ隣接2層が全て連結")
    failing_layer: Optional[int] = Field(None, description="連結でない最初の層の番号")
    dimension_class: DimensionClass = Field(..., description="次元の分類")
    realizer: Optional[tuple[Permutation, Permutation]] = Field(None, description="次元 ≤ 2 の実現子")
    cm: Optional[bool] = Field(None, description="Cohen-Macaulay か（次元 ≥ 3 では未定）")
    shelling_certificate: Optional[ChainOrder] = Field(None, description="シェリング順序の証明書")
    note: Optional[str] = Field(None, description="補足")

    @model_validator(mode="after")
    def _check_consistency(self) -> "CmVerdict":
        expected = self.is_antichain or (self.pure and self.failing_layer is None)
        if self.condition4 != expected:
            raise ValueError("condition4 inconsistent with antichain/pure/failing_layer")
        if self.dimension_class == DimensionClass.AT_MOST_ONE and self.cm is not True:
            raise ValueError("dimension <= 1 posets are Cohen-Macaulay")
        if self.dimension_class == DimensionClass.TWO and self.cm != self.condition4:
            raise ValueError("for dimension two, cm must equal condition4")
        return self
