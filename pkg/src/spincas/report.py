"""Suite orchestration and machine-readable reports.

Reports are deterministic: suites run in a fixed order and the emitted
JSON/CSV bytes depend only on the configuration, never on timing.  Wall
time belongs on stderr, not in the artifact.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field

from . import __version__, casimir, clifford, colour, oracles, spectra, ybe
from .records import FAIL, NOTE, PASS, SKIP, VerificationRecord
from .scalar import binomial
from .spectra import c2k_eigenvalue, sector_kvalues, sector_trace_closed_form

SUITES = ("gamma", "invariants", "spectra", "colour", "ybe")

SECTOR_LABELS = {"++": "pp", "+-": "pm", "-+": "mp", "--": "mm"}

# triple-product sweeps grow as 8^r; these caps keep the suite at desk scale
YBE_SECTOR_MAX_R = 4
YBE_FULL_MAX_R = 3
COLOUR_MAX_R = 4
SPECTRA_FULL_CROSSCHECK_MAX_R = 4


@dataclass(frozen=True)
class SuiteConfig:
    r_min: int = 2
    r_max: int = 5
    suites: tuple[str, ...] = SUITES
    fmt: str = "json"

    def __post_init__(self):
        if not 2 <= self.r_min <= self.r_max <= 6:
            raise ValueError("rank range must satisfy 2 <= min <= max <= 6")
        for suite in self.suites:
            if suite not in SUITES:
                raise ValueError(f"unknown suite {suite!r}")
        if self.fmt not in ("json", "csv"):
            raise ValueError(f"unknown format {self.fmt!r}")


def gamma_suite(r: int) -> list[VerificationRecord]:
    return [clifford.integrity_report(clifford.build_gamma(r))]


def oracle_suite(r: int) -> list[VerificationRecord]:
    return [
        oracles.algebra_integrity(2 * r),
        oracles.defining_rep_check(2 * r),
        oracles.weight_consistency(r),
    ]


def invariants_suite(r: int) -> list[VerificationRecord]:
    records = [
        casimir.verify_recurrences(r),
        casimir.polynomial_consistency(r),
        casimir.lemma_duality_sweep(r),
        casimir.ad_invariance_check(r),
        casimir.coproduct_consistency(r),
    ]
    reference = VerificationRecord(name=f"reference-polynomial-tables r={r}")
    for k in range(2, 7):
        reference.add(
            f"table-k{k}",
            casimir.i2k_polynomial(r, k) == casimir.reference_even_polynomial(r, k),
        )
    records.append(reference)
    return records


def spectra_suite(r: int) -> list[VerificationRecord]:
    records = [spectra.projector_axioms(r, s) for s in casimir.SECTORS]
    records.append(spectra.char_identity_rho(r))
    records.append(spectra.eigenvalue_consistency(r))
    records.append(spectra.power_trace_check(r))
    records.append(spectra.duality_pair_identities(r))
    records.append(spectra.sector_minimal_identities(r))
    records.append(spectra.permutation_symmetry(r, "+"))
    records.append(spectra.permutation_symmetry(r, "-"))
    records.append(
        spectra.rho_family_check(r, direct_lagrange=r <= SPECTRA_FULL_CROSSCHECK_MAX_R)
    )
    return records


def colour_suite(r: int) -> list[VerificationRecord]:
    records = []
    if r <= COLOUR_MAX_R:
        records.append(colour.ladder_consistency(r))
    if r == 2:
        records.append(colour.worked_values())
    return records


def ybe_suite(r: int) -> list[VerificationRecord]:
    records = [
        ybe.asymptotic_check(r),
        ybe.tau_ratio_constraints(r),
        ybe.coefficient_consistency(r),
    ]
    if r <= YBE_SECTOR_MAX_R:
        records.append(ybe.ybe_check(r, "+"))
        records.append(ybe.unitarity_check(r, "+"))
        records.append(ybe.unitarity_check(r, "-"))
        records.append(ybe.symmetry_check(r, "+"))
        us, vs = ybe.admissible_grid(r)
        records.append(ybe.plain_ybe_spot_check(r, "+", [(us[0], vs[0]), (us[1], vs[1])]))
        records.append(ybe.symmetric_part_factorization(r))
        records.append(ybe.chirality_split_check(r))
    if r <= YBE_FULL_MAX_R:
        records.append(ybe.full_ybe_check(r))
    if r == 2:
        records.append(ybe.rising_factorial_identity())
    return records


_SUITE_RUNNERS = {
    "gamma": gamma_suite,
    "invariants": invariants_suite,
    "spectra": spectra_suite,
    "colour": colour_suite,
    "ybe": ybe_suite,
}


def run_suite(cfg: SuiteConfig) -> dict:
    """Execute the configured suites and aggregate a deterministic report."""
    records: list[tuple[str, int, VerificationRecord]] = []
    for suite in SUITES:
        if suite not in cfg.suites:
            continue
        for r in range(cfg.r_min, cfg.r_max + 1):
            for record in _SUITE_RUNNERS[suite](r):
                records.append((suite, r, record))
    summary = {PASS: 0, FAIL: 0, SKIP: 0, NOTE: 0}
    entries = []
    notes = []
    for suite, r, record in records:
        for check in record.checks:
            summary[check.status] += 1
            if check.status == NOTE:
                notes.append(
                    {
                        "suite": suite,
                        "r": r,
                        "record": record.name,
                        "id": check.check_id,
                        "witness": check.witness,
                    }
                )
        entries.append({"suite": suite, "r": r, **record.as_dict()})
    return {
        "engine_version": __version__,
        "config": {
            "r_min": cfg.r_min,
            "r_max": cfg.r_max,
            "suites": list(cfg.suites),
        },
        "summary": summary,
        "ok": summary[FAIL] == 0,
        "records": entries,
        "notes": notes,
    }


def render_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=False) + "\n"
    out = io.StringIO()
    out.write("suite,r,record,check,status,witness\n")
    for entry in report["records"]:
        for check in entry["checks"]:
            witness = check.get("witness", "").replace('"', "'")
            out.write(
                f'{entry["suite"]},{entry["r"]},"{entry["name"]}",'
                f'"{check["id"]}",{check["status"]},"{witness}"\n'
            )
    return out.getvalue()


def emit_tables(r: int) -> str:
    """CSV of the eigenvalue/multiplicity listings, one row per (sector, k).

    Sector labels: pp, pm, mp, mm for the four chirality blocks and rho for
    the assembled family on the full tensor square.
    """
    rows = []
    for sector in casimir.SECTORS:
        label = SECTOR_LABELS[sector]
        for k in sector_kvalues(r, sector):
            rows.append((label, k, str(c2k_eigenvalue(r, k)), sector_trace_closed_form(r, k)))
    for k in range(r + 1):
        mult = 2 * binomial(2 * r, k) if k < r else binomial(2 * r, r)
        rows.append(("rho", k, str(c2k_eigenvalue(r, k)), mult))
    rows.sort(key=lambda row: (row[0], row[1]))
    out = io.StringIO()
    out.write("sector,k,eigenvalue,multiplicity\n")
    for label, k, eigenvalue, mult in rows:
        out.write(f"{label},{k},{eigenvalue},{mult}\n")
    return out.getvalue()
