"""設定モデル"""

from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class AnalysisConfig(BaseModel):
    """解析設定

    環境変数（config_loader）とCLIフラグの両方から組み立てられます。
    """
    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "default_field": "gf2",
                "sweep_max_n": 7,
                "brute_force_max_facets": 9,
                "exhaustive_realizer_max_n": 9,
                "sweep_workers": 1,
                "log_level": "WARNING",
                "log_file": None
            }
        }
    )

    default_field: str = Field(
        default="gf2",
        description="ホモロジー計算の係数体 (gf2/gf<p>/rat)"
    )
    sweep_max_n: int = Field(
        default=7,
        ge=1,
        description="全数検査で許可する最大の n"
    )
    brute_force_max_facets: int = Field(
        default=9,
        ge=1,
        description="シェリング全探索で許可する極大面数の上限"
    )
    exhaustive_realizer_max_n: int = Field(
        default=9,
        ge=1,
        description="実現子探索で線形拡大の組の全探索にフォールバックする最大の n"
    )
    sweep_workers: int = Field(
        default=1,
        ge=1,
        description="全数検査のプロセス数"
    )
    log_level: str = Field(
        default="WARNING",
        description="ログレベル"
    )
    log_file: Optional[Path] = Field(
        default=None,
        description="ログファイルパス（未指定なら標準エラー出力のみ）"
    )
