"""Colour factors of ladder exchanges between two spinor lines.

The L-rung ladder is the L-th power of the sector split Casimir.  Spectral
evaluation (eigenvalue powers times eigenprojectors) is cross-checked
entrywise against direct binary-exponentiation matrix powers, and the two
closures are the full trace and the partial trace over the second line.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import ExactMatrix, TensorShape, first_difference, partial_trace
from .records import VerificationRecord, diff_witness
from .scalar import Rat
from .spectra import (
    SECTORS,
    c2k_eigenvalue,
    sector_kvalues,
    sector_spectral,
    sector_trace_closed_form,
)

MAX_RUNGS = 16

CLOSURES = ("open", "full_trace", "partial_trace")


@dataclass(frozen=True)
class LadderSpec:
    r: int
    L: int
    sector: str
    closure: str = "open"

    def __post_init__(self):
        if self.r < 2:
            raise ValueError("rank must be at least 2")
        if not 0 <= self.L <= MAX_RUNGS:
            raise ValueError(f"rung count must lie in [0, {MAX_RUNGS}]")
        if self.sector not in SECTORS:
            raise ValueError(f"unknown sector {self.sector!r}")
        if self.closure not in CLOSURES:
            raise ValueError(f"unknown closure {self.closure!r}")


def ladder_operator(spec: LadderSpec) -> ExactMatrix:
    """Sum over k of eigenvalue^L times the sector eigenprojector.

    Acts on the compressed sector block of dimension 4^(r-1); L = 0 gives the
    block identity and L = 1 the sector Casimir itself.
    """
    data = sector_spectral(spec.r, spec.sector)
    acc = ExactMatrix.zero(data.block.dim)
    for k in sector_kvalues(spec.r, spec.sector):
        acc = acc + data.projectors[k] * c2k_eigenvalue(spec.r, k) ** spec.L
    return acc


def ladder_full_trace(spec: LadderSpec) -> Rat:
    """Trace of the ladder: sum of eigenvalue^L times the projector trace."""
    total = Rat(0)
    for k in sector_kvalues(spec.r, spec.sector):
        total += c2k_eigenvalue(spec.r, k) ** spec.L * sector_trace_closed_form(spec.r, k)
    return total


def ladder_partial_trace(spec: LadderSpec) -> tuple[Rat, bool]:
    """Close only the second line: exact identity multiple on the first.

    Returns (coefficient, is_identity_multiple).  A non-scalar result would
    break invariance of the construction, so it raises instead of returning
    silently wrong data.
    """
    half = 2 ** (spec.r - 1)
    coefficient = ladder_full_trace(spec) / half
    traced = partial_trace(
        ladder_operator(spec), TensorShape([half, half]), 2
    )
    expected = ExactMatrix.identity(half) * coefficient
    if traced != expected:
        raise ArithmeticError(
            f"partial trace of {spec} is not an identity multiple"
        )
    return coefficient, True


def colour_report(spec: LadderSpec) -> dict:
    """Per-eigenvalue breakdown with the spectral-vs-direct cross-check.

    The metadata records the overall normalization bookkeeping for diagrams
    with n34 index-loop vertices and npr propagator insertions: the power of
    the trace normalization constant is k = n34 - npr.
    """
    data = sector_spectral(spec.r, spec.sector)
    direct = data.block.pow(spec.L)
    spectral = ladder_operator(spec)
    per_k = []
    for k in sector_kvalues(spec.r, spec.sector):
        per_k.append(
            {
                "k": k,
                "eigenvalue": str(c2k_eigenvalue(spec.r, k)),
                "eigenvalue_power_L": str(c2k_eigenvalue(spec.r, k) ** spec.L),
                "weight": sector_trace_closed_form(spec.r, k),
            }
        )
    report = {
        "spec": {
            "r": spec.r,
            "L": spec.L,
            "sector": spec.sector,
            "closure": spec.closure,
        },
        "per_k": per_k,
        "cross_check": spectral == direct,
        "metadata": {"normalization_power": "k = n34 - npr"},
    }
    if spec.closure == "full_trace":
        report["total"] = str(ladder_full_trace(spec))
    elif spec.closure == "partial_trace":
        coefficient, scalar = ladder_partial_trace(spec)
        report["total"] = str(coefficient)
        report["is_identity_multiple"] = scalar
    else:
        report["total"] = "matrix"
    return report


def ladder_consistency(r: int, max_L: int = 6) -> VerificationRecord:
    """Spectral vs direct powers, tracelessness at L=1, scalar partial traces."""
    record = VerificationRecord(name=f"ladder-colour-factors r={r}")
    for sector in SECTORS:
        data = sector_spectral(r, sector)
        power = ExactMatrix.identity(data.block.dim)
        for L in range(max_L + 1):
            spec = LadderSpec(r=r, L=L, sector=sector)
            spectral = ladder_operator(spec)
            record.add(
                f"spectral-equals-direct-{sector}-L{L}",
                spectral == power,
                diff_witness(first_difference(spectral, power)),
            )
            record.add(
                f"full-trace-matches-matrix-{sector}-L{L}",
                ladder_full_trace(spec) == power.trace().re and power.trace().is_real(),
            )
            coefficient, scalar = ladder_partial_trace(spec)
            record.add(f"partial-trace-scalar-{sector}-L{L}", scalar, str(coefficient))
            power = power @ data.block
        record.add(
            f"traceless-L1-{sector}",
            ladder_full_trace(LadderSpec(r=r, L=1, sector=sector)) == 0,
        )
    return record


def worked_values() -> VerificationRecord:
    """Small closed-form ladder values pinned as regression anchors."""
    record = VerificationRecord(name="ladder-worked-values")
    record.add(
        "full-trace-r2-pp-L2",
        ladder_full_trace(LadderSpec(r=2, L=2, sector="++")) == Rat(3, 16),
    )
    coefficient, _ = ladder_partial_trace(LadderSpec(r=2, L=2, sector="++"))
    record.add("partial-trace-r2-pp-L2", coefficient == Rat(3, 32))
    coefficient, _ = ladder_partial_trace(LadderSpec(r=2, L=1, sector="++"))
    record.add("partial-trace-r2-pp-L1-vanishes", coefficient == 0)
    record.add(
        "full-trace-r4-pp-L2",
        ladder_full_trace(LadderSpec(r=4, L=2, sector="++")) == Rat(7, 9),
    )
    record.add(
        "full-trace-r5-pp-L1-vanishes",
        ladder_full_trace(LadderSpec(r=5, L=1, sector="++")) == 0,
    )
    record.add(
        "opposite-sector-vanishes-r2",
        all(
            ladder_operator(LadderSpec(r=2, L=L, sector="+-")).is_zero()
            for L in range(1, 5)
        ),
    )
    L0 = ladder_partial_trace(LadderSpec(r=3, L=0, sector="++"))[0]
    record.add("L0-partial-trace-counts-dimension-r3", L0 == 2 ** (3 - 1))
    return record
