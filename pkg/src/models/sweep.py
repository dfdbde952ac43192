"""全数検査・ランダム検査の結果モデル"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from src.models.permutation import Permutation


class SweepCase(BaseModel):
    """P_π 一つについての4つの判定"""

    pi: Permutation = Field(..., description="P_π の π")
    condition4: bool = Field(..., description="層の連結性条件")
    shellable: Optional[bool] = Field(
        None,
        description="e_order が検証を通るか（条件不成立時は全探索の結果、未実施なら None）"
    )
    reisner: bool = Field(..., description="主の係数体での Reisner 判定")
    strongly_connected: bool = Field(..., description="順序複体の強連結性")
    reisner_second_field: Optional[bool] = Field(None, description="比較用の係数体での Reisner 判定")
    witness: Optional[tuple[int, ...]] = Field(None, description="Reisner 判定の反例となる面")

    @property
    def agree(self) -> bool:
        verdicts = [self.condition4, self.reisner, self.strongly_connected]
        if self.shellable is not None:
            verdicts.append(self.shellable)
        if self.reisner_second_field is not None:
            verdicts.append(self.reisner_second_field)
        return len(set(verdicts)) == 1


class SweepSummary(BaseModel):
    """S_n 全体の集計"""
    model_config = ConfigDict(
        json_schema_extra={
            "example": {"n": 3, "field": "GF(2)", "total": 6, "cm_count": 4, "non_cm_count": 2, "disagreements": []}
        }
    )

    n: int = Field(..., ge=1, description="置換の大きさ")
    field: str = Field(..., description="係数体のラベル")
    second_field: Optional[str] = Field(None, description="比較用の係数体のラベル")
    total: int = Field(..., ge=0, description="検査した半順序集合の数")
    cm_count: int = Field(..., ge=0, description="Cohen-Macaulay の数")
    non_cm_count: int = Field(..., ge=0, description="Cohen-Macaulay でない数")
    disagreements: list[SweepCase] = Field(default_factory=list, description="判定が一致しなかった例")

    @property
    def all_agree(self) -> bool:
        return not self.disagreements


class LemmaSummary(BaseModel):
    """強連結 ⇒ 層の連結性 のランダム検査結果"""

    samples: int = Field(..., ge=0, description="生成した半順序集合の数")
    max_n: int = Field(..., ge=1, description="要素数の上限")
    seed: int = Field(..., description="乱数の種")
    strongly_connected_count: int = Field(0, ge=0, description="強連結だった数")
    counterexamples: list[list[tuple[int, int]]] = Field(
        default_factory=list,
        description="反例の被覆関係"
    )
