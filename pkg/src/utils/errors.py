"""
カスタム例外クラス

cmposetで使用するカスタム例外を定義します。
引数の誤りを表す例外は ValueError も継承し、既存の呼び出し側との互換性を保ちます。
"""

from typing import Optional


class CmPosetError(Exception):
    """cmposet基底例外クラス"""

    def __init__(self, message: str, details: Optional[dict] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


class InputError(CmPosetError, ValueError):
    """入力ファイル関連エラー

    入力ファイルの書式不正時に使用。行番号を保持します。
    """

    def __init__(self, message: str, line: Optional[int] = None, details: Optional[dict] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message, details)


class SizeMismatchError(CmPosetError, ValueError):
    """サイズ不一致エラー

    置換や直線の長さが揃っていない場合、または直線の本数が不足している場合に使用
    """


class LabelRangeError(CmPosetError, ValueError):
    """ラベル範囲エラー

    要素ラベルが {1..n} の範囲外、または写像が全単射でない場合に使用
    """


class LayerIndexError(CmPosetError, ValueError):
    """層番号エラー

    層 P_i ∪ P_{i+1} の i が 0 ≤ i ≤ rank − 1 を満たさない場合に使用
    """


class OrderCycleError(CmPosetError, ValueError):
    """順序関係の循環エラー

    被覆関係の推移閉包が反対称律を満たさない場合に使用
    """

    def __init__(self, message: str, cycle: Optional[list] = None, details: Optional[dict] = None):
        self.cycle = cycle or []
        super().__init__(message, details)


class FieldError(CmPosetError, ValueError):
    """係数体指定エラー"""

    def __init__(self, message: str, descriptor: Optional[str] = None, details: Optional[dict] = None):
        self.descriptor = descriptor
        super().__init__(message, details)


class ComplexError(CmPosetError, ValueError):
    """単体複体関連エラー

    空複体（面を一つも持たない）、複体に含まれない面、重複・包含関係にある極大面などに使用
    """


class ShellingError(CmPosetError, ValueError):
    """シェリング関連エラー

    e_order の前提条件違反や、全探索の上限超過時に使用
    """


class SweepDisagreementError(CmPosetError):
    """全数検査での不一致エラー

    4つの判定条件が一致しない例が見つかった場合に使用
    """

    def __init__(self, message: str, cases: Optional[list] = None, details: Optional[dict] = None):
        self.cases = cases or []
        super().__init__(message, details)
