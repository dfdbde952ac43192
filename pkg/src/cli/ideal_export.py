"""辺イデアルの計算機代数システム向け出力"""

from typing import Literal

IdealFormat = Literal["macaulay2", "singular", "plain"]

FORMATS: tuple[str, ...] = ("macaulay2", "singular", "plain")

TRIVIAL_IDEAL = "<trivial ideal>"

_MACAULAY2_TEMPLATE = "R = QQ[x_1..x_{n}]; I = ideal({generators});"
_SINGULAR_TEMPLATE = "ring R = 0, (x(1..{n})), dp; ideal I = {generators};"


def render_ideal(generators: list[tuple[int, int]], n: int, fmt: IdealFormat = "macaulay2") -> str:
    """生成元 x_i·x_j（i < j、辞書式順）を指定の書式で出力

    生成元がないとき、macaulay2 と singular では零イデアルを書き出します。

    Raises:
        ValueError: 未知の書式
    """
    ordered = sorted((min(i, j), max(i, j)) for i, j in generators)
    if fmt == "macaulay2":
        body = ", ".join(f"x_{i}*x_{j}" for i, j in ordered) or "0_R"
        return _MACAULAY2_TEMPLATE.format(n=n, generators=body)
    if fmt == "singular":
        body = ", ".join(f"x({i})*x({j})" for i, j in ordered) or "0"
        return _SINGULAR_TEMPLATE.format(n=n, generators=body)
    if fmt == "plain":
        return ", ".join(f"x{i}*x{j}" for i, j in ordered) or TRIVIAL_IDEAL
    raise ValueError(f"unknown ideal format {fmt!r}; expected one of {', '.join(FORMATS)}")
