"""CLI の入力と解析レポートのモデル"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.models.permutation import Permutation
from src.models.poset import Chain
from src.models.verdict import ChainOrder, CmVerdict, DimensionClass


class InputSpec(BaseModel):
    """入力ファイルの内容（置換の列、または要素数と被覆関係）"""
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "examples": [
                {"perms": [{"word": [2, 3, 1, 4, 5]}, {"word": [3, 2, 1, 5, 4]}]},
                {"n": 3, "covers": [[1, 3], [2, 3]]}
            ]
        }
    )

    perms: Optional[list[Permutation]] = Field(None, description="perm 行の置換")
    n: Optional[int] = Field(None, ge=1, description="要素数（被覆関係の形式）")
    covers: Optional[list[tuple[int, int]]] = Field(None, description="被覆関係 a ⋖ b")

    @model_validator(mode="after")
    def _exactly_one_form(self) -> "InputSpec":
        has_perms = self.perms is not None
        has_covers = self.n is not None
        if has_perms == has_covers:
            raise ValueError("exactly one of perms or (n, covers) must be given")
        if has_perms and not self.perms:
            raise ValueError("perms must not be empty")
        if self.covers is not None and self.n is None:
            raise ValueError("covers require n")
        return self

    @property
    def kind(self) -> str:
        return "perms" if self.perms is not None else "covers"


class Report(BaseModel):
    """解析レポート

    JSON 形式は model_validate_json で読み戻せ、to_verdict で CmVerdict を復元できます。
    """
    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "n": 5,
                "field": "GF(2)",
                "dimension_class": "dim=2",
                "is_antichain": False,
                "pure": True,
                "condition4": True,
                "failing_layer": None,
                "cm": True,
                "realizer": [[1, 2, 3, 4, 5], [2, 1, 3, 5, 4]],
                "shelling": [[2, 3, 5], [1, 3, 5], [2, 3, 4], [1, 3, 4]],
                "shelling_verified": True,
                "strongly_connected": True,
                "reisner_cm": None,
                "reisner_witness": None,
                "oracle_agrees": None,
                "ideal_generators": [[1, 2], [4, 5]],
                "note": None
            }
        }
    )

    n: int = Field(..., ge=0, description="要素数")
    field: str = Field(..., description="係数体のラベル")
    dimension_class: DimensionClass = Field(..., description="次元の分類")
    is_antichain: bool = Field(..., description="反鎖か")
    pure: bool = Field(..., description="純粋か")
    condition4: bool = Field(..., description="層の連結性条件")
    failing_layer: Optional[int] = Field(None, description="連結でない最初の層の番号")
    cm: Optional[bool] = Field(None, description="Cohen-Macaulay か（次元 ≥ 3 では未定）")
    realizer: Optional[list[list[int]]] = Field(None, description="次元 ≤ 2 の実現子")
    relabeling: Optional[dict[int, int]] = Field(
        None,
        description="2直線入力を P_π に正規化したときの対応 j ↦ σ(j)"
    )
    shelling: Optional[list[list[int]]] = Field(None, description="シェリング順序（極大鎖の列）")
    shelling_verified: Optional[bool] = Field(None, description="シェリング順序が検証を通ったか")
    strongly_connected: bool = Field(..., description="順序複体の強連結性")
    reisner_cm: Optional[bool] = Field(None, description="Reisner 判定（--oracle 指定時）")
    reisner_witness: Optional[list[int]] = Field(None, description="Reisner 判定の反例となる面")
    oracle_agrees: Optional[bool] = Field(None, description="Reisner 判定と cm が一致するか")
    homology: Optional[dict[int, int]] = Field(None, description="順序複体の被約ベッチ数")
    ideal_generators: list[tuple[int, int]] = Field(default_factory=list, description="辺イデアルの生成元")
    note: Optional[str] = Field(None, description="補足")

    @classmethod
    def from_verdict(
        cls,
        verdict: CmVerdict,
        *,
        n: int,
        field: str,
        strongly_connected: bool,
        ideal_generators: list[tuple[int, int]],
        reisner_cm: Optional[bool] = None,
        reisner_witness: Optional[tuple[int, ...]] = None,
        homology: Optional[dict[int, int]] = None,
        relabeling: Optional[dict[int, int]] = None
    ) -> "Report":
        certificate = verdict.shelling_certificate
        oracle_agrees = None
        if reisner_cm is not None and verdict.cm is not None:
            oracle_agrees = reisner_cm == verdict.cm
        return cls(
            n=n,
            field=field,
            dimension_class=verdict.dimension_class,
            is_antichain=verdict.is_antichain,
            pure=verdict.pure,
            condition4=verdict.condition4,
            failing_layer=verdict.failing_layer,
            cm=verdict.cm,
            realizer=None if verdict.realizer is None else [list(line.word) for line in verdict.realizer],
            relabeling=relabeling,
            shelling=None if certificate is None else certificate.as_lists(),
            shelling_verified=None if certificate is None else certificate.verified,
            strongly_connected=strongly_connected,
            reisner_cm=reisner_cm,
            reisner_witness=None if reisner_witness is None else list(reisner_witness),
            oracle_agrees=oracle_agrees,
            homology=homology,
            ideal_generators=ideal_generators,
            note=verdict.note
        )

    def to_verdict(self) -> CmVerdict:
        """CmVerdict を復元（証明書の normal_form と first_violation は保持しない）"""
        realizer = None
        if self.realizer is not None:
            first, second = self.realizer
            realizer = (Permutation.from_word(first), Permutation.from_word(second))
        certificate = None
        if self.shelling is not None:
            certificate = ChainOrder(
                chains=[Chain.of(chain) for chain in self.shelling],
                verified=bool(self.shelling_verified)
            )
        return CmVerdict(
            is_antichain=self.is_antichain,
            pure=self.pure,
            condition4=self.condition4,
            failing_layer=self.failing_layer,
            dimension_class=self.dimension_class,
            realizer=realizer,
            cm=self.cm,
            shelling_certificate=certificate,
            note=self.note
        )

    def render_text(self) -> str:
        """人が読むための複数行テキスト"""
        cm = "undecided" if self.cm is None else str(self.cm).lower()
        lines = [
            f"elements:            {self.n}",
            f"dimension:           {self.dimension_class.value}",
            f"antichain:           {str(self.is_antichain).lower()}",
            f"pure:                {str(self.pure).lower()}",
            f"condition4:          {str(self.condition4).lower()}",
        ]
        if self.failing_layer is not None:
            lines.append(f"failing layer:       {self.failing_layer}")
        lines.append(f"cohen-macaulay:      {cm}")
        if self.realizer is not None:
            lines.append("realizer:            " + " ".join(_bracket(line) for line in self.realizer))
        if self.relabeling is not None:
            pairs = ", ".join(f"{j}->{v}" for j, v in sorted(self.relabeling.items()))
            lines.append(f"relabeling:          {pairs}")
        if self.shelling is not None:
            verified = "verified" if self.shelling_verified else "NOT verified"
            lines.append(f"shelling ({len(self.shelling)} chains, {verified}):")
            lines.extend(f"  {index}: {_bracket(chain)}" for index, chain in enumerate(self.shelling, start=1))
        lines.append(f"strongly connected:  {str(self.strongly_connected).lower()}")
        if self.reisner_cm is not None:
            lines.append(f"reisner ({self.field}):     {str(self.reisner_cm).lower()}")
            if self.reisner_witness is not None:
                lines.append(f"reisner witness:     {{{','.join(str(v) for v in self.reisner_witness)}}}")
            if self.oracle_agrees is not None:
                lines.append(f"oracle agrees:       {str(self.oracle_agrees).lower()}")
        if self.homology is not None:
            betti = ", ".join(f"b{i}={value}" for i, value in sorted(self.homology.items()))
            lines.append(f"reduced betti:       {betti}")
        generators = ", ".join(f"x{i}*x{j}" for i, j in self.ideal_generators) or "<trivial ideal>"
        lines.append(f"edge ideal:          {generators}")
        if self.note:
            lines.append(f"note: {self.note}")
        return "\n".join(lines)


def _bracket(values: list[int]) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"
