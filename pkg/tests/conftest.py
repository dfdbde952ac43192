"""共通テストフィクスチャ

5要素の次元2の半順序集合（P_π, π = [2,1,3,5,4] と、その実現子 (σ, τ) による表示）、
層の連結性条件を満たすが Cohen-Macaulay でない8要素の次元3の半順序集合、
小さな鎖・反鎖・単体複体を提供します。
"""

import logging
import sys
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

import pytest

from src.cli.input_parser import fixture_path
from src.models.complex import SimplicialComplex
from src.models.permutation import Permutation
from src.models.poset import Poset
from src.services import perm_service, poset_service
from src.utils.logger import PACKAGE_LOGGER_NAME
from tests.fixtures.posets import FIG2_PI, FIG2_SIGMA, FIG2_TAU, FIG3_COVERS, FIG3_PERMS


@pytest.fixture
def fig2_pi() -> Permutation:
    return Permutation(word=FIG2_PI)


@pytest.fixture
def fig2_realizer() -> tuple[Permutation, Permutation]:
    """(σ, τ) = ([2,3,1,4,5], [3,2,1,5,4])"""
    return Permutation(word=FIG2_SIGMA), Permutation(word=FIG2_TAU)


@pytest.fixture
def fig2_poset(fig2_pi: Permutation) -> Poset:
    """P_π, π = [2,1,3,5,4]（関係 1<3, 2<3, 3<4, 3<5）"""
    return poset_service.from_linear_orders([perm_service.identity(5), fig2_pi])


@pytest.fixture
def fig2_sigma_tau_poset(fig2_realizer: tuple[Permutation, Permutation]) -> Poset:
    """P_{σ,τ}（fig2_poset と同型）"""
    return poset_service.from_linear_orders(list(fig2_realizer))


@pytest.fixture
def fig3_poset() -> Poset:
    """8要素・次元3・純粋・層が連結だが Cohen-Macaulay でない半順序集合"""
    return poset_service.from_covers(8, FIG3_COVERS)


@pytest.fixture
def fig3_lines() -> list[Permutation]:
    return [Permutation(word=word) for word in FIG3_PERMS]


@pytest.fixture
def antichain3() -> Poset:
    return poset_service.from_covers(3, [])


@pytest.fixture
def chain3() -> Poset:
    return poset_service.from_covers(3, [(1, 2), (2, 3)])


@pytest.fixture
def hollow_triangle() -> SimplicialComplex:
    return SimplicialComplex.from_faces([{1, 2}, {1, 3}, {2, 3}])


@pytest.fixture
def full_simplex() -> SimplicialComplex:
    return SimplicialComplex.from_faces([{1, 2, 3}])


@pytest.fixture
def fig2_perms_file() -> Path:
    return fixture_path("fig2.perms")


@pytest.fixture
def fig3_covers_file() -> Path:
    return fixture_path("fig3.covers")


@pytest.fixture
def fig3_perms_file() -> Path:
    return fixture_path("fig3.perms")


@pytest.fixture
def write_input(tmp_path: Path):
    """入力テキストを一時ファイルに書き出すヘルパー"""

    def _write(text: str, name: str = "input.txt") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture(autouse=True)
def reset_package_logger():
    """CLI テストで差し替えた標準エラー出力をハンドラが掴んだままにしない"""
    yield
    package_logger = logging.getLogger(PACKAGE_LOGGER_NAME)
    package_logger.handlers.clear()
    package_logger.setLevel(logging.NOTSET)
    package_logger.propagate = True
