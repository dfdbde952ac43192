"""CLI のエラーハンドリング

例外を終了コードと標準エラー出力のメッセージに対応付けます。
0: 成功, 1: 入力エラー, 2: 内部エラー・判定の不一致
"""

import logging
import sys
from typing import Optional, TextIO

from pydantic import ValidationError

from src.utils.errors import (
    ComplexError,
    FieldError,
    InputError,
    LabelRangeError,
    LayerIndexError,
    OrderCycleError,
    ShellingError,
    SizeMismatchError,
    SweepDisagreementError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INTERNAL_ERROR = 2

_INPUT_ERRORS = (
    InputError,
    SizeMismatchError,
    LabelRangeError,
    LayerIndexError,
    OrderCycleError,
    FieldError,
    ComplexError,
    ShellingError,
    ValidationError,
    FileNotFoundError,
    IsADirectoryError,
)


class ErrorHandler:
    """エラーハンドリングクラス"""

    @staticmethod
    def exit_code_for(error: BaseException) -> int:
        """例外に対応する終了コード"""
        if isinstance(error, SweepDisagreementError):
            return EXIT_INTERNAL_ERROR
        if isinstance(error, _INPUT_ERRORS):
            return EXIT_INPUT_ERROR
        return EXIT_INTERNAL_ERROR

    @staticmethod
    def handle_cli_error(error: BaseException, context: str = "", stream: Optional[TextIO] = None) -> int:
        """CLI 実行中の例外を処理

        Args:
            error: 発生した例外
            context: エラーのコンテキスト（どのコマンドで発生したか）
            stream: メッセージの出力先（省略時は標準エラー出力）

        Returns:
            終了コード
        """
        stream = stream or sys.stderr
        code = ErrorHandler.exit_code_for(error)
        prefix = f"{context}: " if context else ""

        if isinstance(error, FileNotFoundError):
            message = f"file not found: {error.filename}"
        elif isinstance(error, SweepDisagreementError):
            message = f"{error.message} ({len(error.cases)} case(s))"
        else:
            message = str(error)

        if code == EXIT_INTERNAL_ERROR and not isinstance(error, SweepDisagreementError):
            logger.exception(f"{prefix}internal failure")
        else:
            logger.error(f"{prefix}{message}")

        print(f"error: {prefix}{message}", file=stream)
        return code
