"""入力仕様・レポートモデルのユニットテスト"""

import json

import pytest
from pydantic import ValidationError

from src.models.permutation import Permutation
from src.models.poset import Chain
from src.models.report import InputSpec, Report
from src.models.verdict import ChainOrder, CmVerdict, DimensionClass

pytestmark = pytest.mark.unit


@pytest.fixture
def dim2_verdict() -> CmVerdict:
    return CmVerdict(
        is_antichain=False,
        pure=True,
        condition4=True,
        dimension_class=DimensionClass.TWO,
        realizer=(Permutation(word=(1, 2, 3, 4, 5)), Permutation(word=(2, 1, 3, 5, 4))),
        cm=True,
        shelling_certificate=ChainOrder(
            chains=[Chain.of(c) for c in [(2, 3, 5), (1, 3, 5), (2, 3, 4), (1, 3, 4)]],
            verified=True
        )
    )


# ========================================
# InputSpec tests
# ========================================

def test_input_spec_perm_form():
    spec = InputSpec(perms=[Permutation(word=(2, 1))])

    assert spec.kind == "perms"


def test_input_spec_cover_form():
    spec = InputSpec(n=3, covers=[(1, 2)])

    assert spec.kind == "covers"


def test_input_spec_rejects_both_forms():
    with pytest.raises(ValidationError):
        InputSpec(perms=[Permutation(word=(1,))], n=1, covers=[])


def test_input_spec_rejects_neither_form():
    with pytest.raises(ValidationError):
        InputSpec()


def test_input_spec_rejects_covers_without_n():
    with pytest.raises(ValidationError):
        InputSpec(perms=[Permutation(word=(1,))], covers=[(1, 2)])


# ========================================
# Report tests
# ========================================

def test_report_from_verdict_flattens_fields(dim2_verdict):
    report = Report.from_verdict(
        dim2_verdict,
        n=5,
        field="GF(2)",
        strongly_connected=True,
        ideal_generators=[(1, 2), (4, 5)]
    )

    assert report.realizer == [[1, 2, 3, 4, 5], [2, 1, 3, 5, 4]]
    assert report.shelling == [[2, 3, 5], [1, 3, 5], [2, 3, 4], [1, 3, 4]]
    assert report.shelling_verified is True
    assert report.oracle_agrees is None


def test_report_oracle_agreement(dim2_verdict):
    report = Report.from_verdict(
        dim2_verdict,
        n=5,
        field="GF(2)",
        strongly_connected=True,
        ideal_generators=[],
        reisner_cm=False,
        reisner_witness=(2,)
    )

    assert report.oracle_agrees is False
    assert report.reisner_witness == [2]


def test_report_json_round_trip(dim2_verdict):
    """JSON を読み戻すと判定の全フィールドが再現される"""
    report = Report.from_verdict(
        dim2_verdict,
        n=5,
        field="GF(2)",
        strongly_connected=True,
        ideal_generators=[(1, 2), (4, 5)],
        homology={-1: 0, 0: 0, 1: 0, 2: 0},
        relabeling={1: 2, 2: 3, 3: 1, 4: 4, 5: 5}
    )

    restored = Report.model_validate_json(report.model_dump_json())

    assert restored == report
    assert restored.homology == {-1: 0, 0: 0, 1: 0, 2: 0}
    assert restored.to_verdict().model_dump(exclude={"shelling_certificate"}) == dim2_verdict.model_dump(
        exclude={"shelling_certificate"}
    )
    assert restored.to_verdict().shelling_certificate.as_lists() == dim2_verdict.shelling_certificate.as_lists()


def test_report_json_has_stable_keys(dim2_verdict):
    report = Report.from_verdict(
        dim2_verdict, n=5, field="GF(2)", strongly_connected=True, ideal_generators=[]
    )

    data = json.loads(report.model_dump_json())

    for key in (
        "dimension_class", "condition4", "failing_layer", "strongly_connected", "cm",
        "field", "shelling", "realizer", "reisner_witness",
    ):
        assert key in data
    assert data["dimension_class"] == "dim=2"


def test_report_render_text_mentions_verdict(dim2_verdict):
    report = Report.from_verdict(
        dim2_verdict, n=5, field="GF(2)", strongly_connected=True, ideal_generators=[(1, 2), (4, 5)]
    )

    text = report.render_text()

    assert "dimension:           dim=2" in text
    assert "cohen-macaulay:      true" in text
    assert "shelling (4 chains, verified):" in text
    assert "edge ideal:          x1*x2, x4*x5" in text


def test_report_render_text_trivial_ideal_and_undecided():
    verdict = CmVerdict(
        is_antichain=False,
        pure=True,
        condition4=True,
        dimension_class=DimensionClass.AT_LEAST_THREE,
        cm=None,
        note="undecided"
    )
    report = Report.from_verdict(verdict, n=8, field="GF(2)", strongly_connected=True, ideal_generators=[])

    text = report.render_text()

    assert "cohen-macaulay:      undecided" in text
    assert "<trivial ideal>" in text
    assert "note: undecided" in text
