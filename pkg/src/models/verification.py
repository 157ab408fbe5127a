"""Verification models: check results, cases and suite reports."""
from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckResult:
    """Result from one identity check on one case."""
    passed: bool
    data: dict[str, Any]
    reasoning: str


@dataclass(frozen=True)
class Bounds:
    """Enumeration range of a suite run."""
    max_cells: int = 6
    max_n: int = 4
    qmax: int = 4
    sample: int | None = None
    seed: int = 0

    def to_json(self) -> dict[str, Any]:
        return {
            "max_cells": self.max_cells,
            "max_n": self.max_n,
            "qmax": self.qmax,
            "sample": self.sample,
            "seed": self.seed,
        }


@dataclass
class Case:
    """One object a suite checks, with the JSON witness reported if it fails."""
    label: str
    witness: dict[str, Any]
    data: dict[str, Any] = field(default_factory=dict)


@dataclass
class Counterexample:
    suite: str
    case: str
    witness: dict[str, Any]
    reasoning: str

    def to_json(self) -> dict[str, Any]:
        return {"suite": self.suite, "case": self.case, "witness": self.witness, "reasoning": self.reasoning}


@dataclass
class SuiteReport:
    """Outcome of one suite run; stops at the first counterexample."""
    suite: str
    passed: bool
    cases_checked: int
    bounds: Bounds
    elapsed_ms: float = 0.0
    counterexample: Counterexample | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "cases_checked": self.cases_checked,
            "bounds": self.bounds.to_json(),
            "elapsed_ms": round(self.elapsed_ms, 3),
            "counterexample": self.counterexample.to_json() if self.counterexample else None,
        }
