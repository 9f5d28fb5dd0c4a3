"""Structured pass/fail records shared by all verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
SKIP = "skip"
NOTE = "documented-discrepancy"


@dataclass(frozen=True)
class CheckResult:
    """One verified statement: identity, trace value, spectrum entry, ..."""

    check_id: str
    status: str
    witness: str = ""

    @property
    def ok(self) -> bool:
        return self.status in (PASS, NOTE, SKIP)


@dataclass
class VerificationRecord:
    """Ordered collection of check results for one verification sweep."""

    name: str
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, check_id: str, passed: bool, witness: str = "") -> CheckResult:
        result = CheckResult(check_id, PASS if passed else FAIL, witness if not passed else "")
        self.checks.append(result)
        return result

    def note(self, check_id: str, witness: str = "") -> CheckResult:
        result = CheckResult(check_id, NOTE, witness)
        self.checks.append(result)
        return result

    def skip(self, check_id: str, witness: str = "") -> CheckResult:
        result = CheckResult(check_id, SKIP, witness)
        self.checks.append(result)
        return result

    def extend(self, other: "VerificationRecord") -> None:
        self.checks.extend(other.checks)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "checks": [
                {"id": c.check_id, "status": c.status, **({"witness": c.witness} if c.witness else {})}
                for c in self.checks
            ],
        }


def diff_witness(difference) -> str:
    """Render the output of linalg.first_difference for a failure report."""
    if difference is None:
        return ""
    i, j, left, right = difference
    return f"first differing entry ({i}, {j}): {left} != {right}"
