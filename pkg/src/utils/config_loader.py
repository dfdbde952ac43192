"""設定ローダー - 環境変数から設定を読み込む"""

import os
from pathlib import Path

from src.models.config import AnalysisConfig


def load_analysis_config() -> AnalysisConfig:
    """環境変数から解析設定を読み込む

    Returns:
        解析設定
    """
    log_file = os.getenv("CMPOSET_LOG_FILE")
    return AnalysisConfig(
        default_field=os.getenv("CMPOSET_FIELD", "gf2"),
        sweep_max_n=int(os.getenv("CMPOSET_SWEEP_MAX_N", "7")),
        brute_force_max_facets=int(os.getenv("CMPOSET_BRUTE_FORCE_MAX_FACETS", "9")),
        exhaustive_realizer_max_n=int(os.getenv("CMPOSET_REALIZER_MAX_N", "9")),
        sweep_workers=int(os.getenv("CMPOSET_SWEEP_WORKERS", "1")),
        log_level=os.getenv("CMPOSET_LOG_LEVEL", "WARNING"),
        log_file=Path(log_file) if log_file else None
    )
