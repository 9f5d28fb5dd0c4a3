import pytest

from spincas import colour
from spincas.casimir import SECTORS, sector_casimir
from spincas.linalg import ExactMatrix
from spincas.scalar import Rat


def test_spec_validation():
    with pytest.raises(ValueError):
        colour.LadderSpec(r=1, L=1, sector="++")
    with pytest.raises(ValueError):
        colour.LadderSpec(r=2, L=-1, sector="++")
    with pytest.raises(ValueError):
        colour.LadderSpec(r=2, L=colour.MAX_RUNGS + 1, sector="++")
    with pytest.raises(ValueError):
        colour.LadderSpec(r=2, L=1, sector="xx")
    with pytest.raises(ValueError):
        colour.LadderSpec(r=2, L=1, sector="++", closure="sideways")


def test_zero_rungs_is_identity():
    for sector in SECTORS:
        op = colour.ladder_operator(colour.LadderSpec(r=3, L=0, sector=sector))
        assert op == ExactMatrix.identity(op.dim)


def test_one_rung_is_sector_casimir():
    for sector in SECTORS:
        op = colour.ladder_operator(colour.LadderSpec(r=3, L=1, sector=sector))
        assert op == sector_casimir(3, sector).matrix


def test_opposite_chirality_vanishes_at_minimal_rank():
    # both eigenvalues in the (+,-) block are zero at rank 2
    for L in range(1, 6):
        op = colour.ladder_operator(colour.LadderSpec(r=2, L=L, sector="+-"))
        assert op.is_zero()


@pytest.mark.parametrize("r", [2, 3, 4])
def test_ladder_consistency(r):
    record = colour.ladder_consistency(r)
    assert record.ok, [c.check_id for c in record.failures]


def test_worked_values():
    record = colour.worked_values()
    assert record.ok, [c.check_id for c in record.failures]


def test_full_trace_values():
    assert colour.ladder_full_trace(colour.LadderSpec(r=2, L=2, sector="++")) == Rat(3, 16)
    assert colour.ladder_full_trace(colour.LadderSpec(r=4, L=2, sector="++")) == Rat(7, 9)
    for r in (2, 3, 4, 5):
        for sector in SECTORS:
            assert colour.ladder_full_trace(colour.LadderSpec(r=r, L=1, sector=sector)) == 0


def test_partial_trace_values():
    coeff, scalar = colour.ladder_partial_trace(colour.LadderSpec(r=2, L=2, sector="++"))
    assert scalar and coeff == Rat(3, 32)
    coeff, _ = colour.ladder_partial_trace(colour.LadderSpec(r=2, L=1, sector="++"))
    assert coeff == 0
    coeff, _ = colour.ladder_partial_trace(colour.LadderSpec(r=4, L=0, sector="--"))
    assert coeff == 2 ** (4 - 1)


def test_report_schema():
    spec = colour.LadderSpec(r=3, L=3, sector="--", closure="partial_trace")
    report = colour.colour_report(spec)
    assert report["spec"] == {"r": 3, "L": 3, "sector": "--", "closure": "partial_trace"}
    assert report["cross_check"] is True
    assert report["is_identity_multiple"] is True
    labels = [term["k"] for term in report["per_k"]]
    assert labels == [1, 3]
    assert "normalization_power" in report["metadata"]
