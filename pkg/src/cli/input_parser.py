"""入力ファイルの解析

行単位のテキスト形式です。`#` 以降はコメントとして無視します。

    perm v1 v2 ... vn      置換（1行なら恒等置換と組にして P_π、2行なら P_π に正規化）
    n <int>                要素数（被覆関係の形式）
    cover a b              被覆関係 a ⋖ b

perm 行と n/cover 行を混在させることはできません。
"""

import logging
from pathlib import Path
from typing import NamedTuple, Optional

from pydantic import ValidationError

from src.models.permutation import Permutation
from src.models.poset import Poset
from src.models.report import InputSpec
from src.services import perm_service, poset_service
from src.utils.errors import InputError

logger = logging.getLogger(__name__)

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"

Realizer = tuple[Permutation, Permutation]


def fixture_path(name: str) -> Path:
    """同梱の入力例（fig2.perms, fig3.covers, fig3.perms）のパス"""
    return FIXTURE_DIR / name


def _integers(tokens: list[str], line: int) -> list[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError as e:
        raise InputError(f"expected integers, got {' '.join(tokens)!r}", line=line) from e


def parse_input_text(text: str) -> InputSpec:
    """入力テキストを InputSpec に変換

    Raises:
        InputError: 書式不正（行番号付き）
    """
    perms: list[Permutation] = []
    n: Optional[int] = None
    covers: list[tuple[int, int]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        keyword, *tokens = content.split()
        keyword = keyword.lower()

        if keyword == "perm":
            if n is not None:
                raise InputError("perm lines cannot be mixed with n/cover lines", line=number)
            values = _integers(tokens, number)
            if not values:
                raise InputError("perm line has no values", line=number)
            try:
                perm = Permutation(word=tuple(values))
            except ValidationError as e:
                raise InputError(f"{values} is not a permutation of 1..{len(values)}", line=number) from e
            if perms and perm.n != perms[0].n:
                raise InputError(f"permutation of size {perm.n} differs from size {perms[0].n}", line=number)
            perms.append(perm)

        elif keyword == "n":
            if perms:
                raise InputError("n line cannot be mixed with perm lines", line=number)
            if n is not None:
                raise InputError("n given more than once", line=number)
            values = _integers(tokens, number)
            if len(values) != 1 or values[0] < 1:
                raise InputError("n line needs one positive integer", line=number)
            n = values[0]

        elif keyword == "cover":
            if n is None:
                raise InputError("cover line before n line", line=number)
            values = _integers(tokens, number)
            if len(values) != 2:
                raise InputError("cover line needs exactly two labels", line=number)
            a, b = values
            for label in (a, b):
                if not 1 <= label <= n:
                    raise InputError(f"cover label {label} outside 1..{n}", line=number)
            if a == b:
                raise InputError(f"cover {a} {b} relates an element to itself", line=number)
            covers.append((a, b))

        else:
            raise InputError(f"unknown keyword {keyword!r}", line=number)

    if not perms and n is None:
        raise InputError("input has no perm or n line")
    if perms:
        return InputSpec(perms=perms)
    return InputSpec(n=n, covers=covers)


def load_input(path: Path) -> InputSpec:
    """入力ファイルを読み込む

    Raises:
        FileNotFoundError: ファイルが存在しない場合
        InputError: 書式不正
    """
    logger.info(f"Reading input from {path}")
    return parse_input_text(Path(path).read_text(encoding="utf-8"))


class LoadedPoset(NamedTuple):
    """入力から作った半順序集合

    relabeling は2直線入力のときだけ与えられ、要素 j が入力の要素 σ(j) に対応します。
    """
    poset: Poset
    realizer: Optional[Realizer] = None
    relabeling: Optional[dict[int, int]] = None


def build_poset(spec: InputSpec) -> LoadedPoset:
    """InputSpec から半順序集合と（分かる場合は）実現子を作る

    perm が1つなら P_π と実現子 (id, π) です。2つ (σ, τ) なら π = σ⁻¹τ に正規化した
    P_π を返し、同型 j ↦ σ(j) を relabeling に入れます（σ が恒等置換なら None）。
    3つ以上なら交わりだけを返します。

    Raises:
        OrderCycleError: 被覆関係に循環がある場合
    """
    if spec.perms is None:
        poset = poset_service.from_covers(spec.n, spec.covers or [])
        logger.info(f"Built poset on {poset.n} elements from {len(spec.covers or [])} covers")
        return LoadedPoset(poset)

    lines = list(spec.perms)
    if len(lines) > 2:
        poset = poset_service.from_linear_orders(lines)
        logger.info(f"Built poset on {poset.n} elements from {len(lines)} linear orders")
        return LoadedPoset(poset)

    relabeling = None
    pi = lines[0]
    if len(lines) == 2 and lines[0].is_identity():
        pi = lines[1]
    elif len(lines) == 2:
        pi, relabeling = perm_service.normalize_realizer(lines[0], lines[1])
    identity = perm_service.identity(pi.n)
    poset = poset_service.from_linear_orders([identity, pi])
    logger.info(f"Built P_pi on {poset.n} elements for pi={pi}")
    return LoadedPoset(poset, (identity, pi), relabeling)
