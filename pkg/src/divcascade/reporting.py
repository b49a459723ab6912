"""Result records shared by the audit checks."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    """Outcome of one audited claim.

    ``max_violation`` is the worst relative violation seen (negative or
    zero means the claim held with margin everywhere).  Counterexamples
    hold at most the first ten offending samples in sample-index order.
    """

    id: str
    kind: str
    samples: int
    max_violation: float
    verdict: str                      # "pass" or "fail"
    counterexamples: list = field(default_factory=list)
    ref: str = ""
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "samples": self.samples,
            "max_violation": self.max_violation,
            "verdict": self.verdict,
            "counterexamples": self.counterexamples,
            "paper_ref": self.ref,
        }


def make_result(id: str, kind: str, samples: int, max_violation: float,
                tol: float, counterexamples=None, ref: str = "",
                detail: str = "") -> CheckResult:
    return CheckResult(
        id=id, kind=kind, samples=samples,
        max_violation=float(max_violation),
        verdict="pass" if max_violation <= tol else "fail",
        counterexamples=list(counterexamples or []), ref=ref, detail=detail)
