"""
ロガー設定

cmposetで使用する統一的なロガー設定を提供します。
標準出力はレポート（JSON含む）専用のため、ログは標準エラー出力に書き出します。
"""

import logging
import sys
from pathlib import Path
from typing import Optional

from src.models.config import AnalysisConfig

# 各モジュールは logging.getLogger(__name__) を使うため、パッケージ名のロガーを設定する
PACKAGE_LOGGER_NAME = "src"

DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# 有限体・数式処理ライブラリは DEBUG で大量に出力する
THIRD_PARTY_LOGGERS: tuple[str, ...] = ("galois", "numba", "sympy")


def _attach(logger: logging.Logger, handler: logging.Handler, level: int, formatter: logging.Formatter) -> None:
    handler.setLevel(level)
    handler.setFormatter(formatter)
    logger.addHandler(handler)


def setup_logger(
    name: str = PACKAGE_LOGGER_NAME,
    level: str = "WARNING",
    log_file: Optional[Path] = None,
    format_string: Optional[str] = None
) -> logging.Logger:
    """ロガーをセットアップ

    Args:
        name: ロガー名
        level: ログレベル (DEBUG, INFO, WARNING, ERROR, CRITICAL)。不明な値は WARNING
        log_file: ログファイルパス（Noneの場合は標準エラー出力のみ）
        format_string: カスタムフォーマット文字列

    Returns:
        設定済みのロガー
    """
    logger = logging.getLogger(name)
    logger.handlers.clear()

    log_level = getattr(logging, level.upper(), logging.WARNING)
    logger.setLevel(log_level)
    formatter = logging.Formatter(format_string or DEFAULT_FORMAT)

    _attach(logger, logging.StreamHandler(sys.stderr), log_level, formatter)
    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        _attach(logger, logging.FileHandler(log_file, encoding="utf-8"), log_level, formatter)

    logger.propagate = False
    return logger


def configure_cli_logging(
    config: AnalysisConfig,
    level: Optional[str] = None,
    log_file: Optional[Path] = None
) -> logging.Logger:
    """CLI 起動時のログ設定

    フラグ（level, log_file）が設定値より優先されます。
    サードパーティのロガーは WARNING 未満を出さないようにします。
    """
    logger = setup_logger(level=level or config.log_level, log_file=log_file or config.log_file)
    for name in THIRD_PARTY_LOGGERS:
        logging.getLogger(name).setLevel(max(logger.level, logging.WARNING))
    logger.debug(f"Logging configured at {logging.getLevelName(logger.level)}")
    return logger


def get_logger(name: str = PACKAGE_LOGGER_NAME) -> logging.Logger:
    """既存のロガーを取得

    Returns:
        ロガー（ハンドラ未設定の場合はデフォルト設定で作成）
    """
    logger = logging.getLogger(name)
    if not logger.handlers:
        return setup_logger(name)
    return logger
