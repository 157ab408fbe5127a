"""Runs identity suites and reports the first counterexample."""
import logging
import os
import random
import time
from typing import Iterator

from src.core.errors import QWhittakerError
from src.models.verification import Bounds, Case, Counterexample, SuiteReport
from src.verification.base import IdentitySuite
from src.verification.pipeline import CheckPipeline

logger = logging.getLogger(__name__)

SEEDLESS_ENV = "QWL_SEEDLESS"


def seedless() -> bool:
    return os.environ.get(SEEDLESS_ENV) == "1"


class SuiteRunner:
    """Iterates a suite's cases in canonical order and stops at the first failure."""

    def __init__(self, bounds: Bounds):
        self.bounds = bounds

    def _select(self, cases: Iterator[Case]) -> Iterator[Case]:
        if self.bounds.sample is None:
            return cases
        if seedless():
            logger.warning(f"{SEEDLESS_ENV}=1: ignoring sample={self.bounds.sample}, running exhaustively")
            return cases
        pool = list(cases)
        size = min(self.bounds.sample, len(pool))
        chosen = sorted(random.Random(self.bounds.seed).sample(range(len(pool)), size))
        logger.info(f"Sampling {size} of {len(pool)} cases (seed={self.bounds.seed})")
        return iter([pool[i] for i in chosen])

    def run(self, suite: IdentitySuite) -> SuiteReport:
        start = time.perf_counter()
        pipeline = CheckPipeline(suite.checks)
        checked = 0
        logger.info(f"Running suite '{suite.name}' with {self.bounds.to_json()}")

        for case in self._select(suite.cases(self.bounds)):
            logger.debug(
                "ENTER: check case",
                extra={"extra_data": {"action": "check_case", "suite": suite.name, "case": case.label}},
            )
            try:
                passed, _, reasoning = pipeline.run(case)
            except QWhittakerError as e:
                passed, reasoning = False, f"{type(e).__name__}: {e}"
            checked += 1
            if not passed:
                elapsed = (time.perf_counter() - start) * 1000
                logger.warning(f"Suite '{suite.name}' failed on {case.label}")
                return SuiteReport(
                    suite=suite.name,
                    passed=False,
                    cases_checked=checked,
                    bounds=self.bounds,
                    elapsed_ms=elapsed,
                    counterexample=Counterexample(suite.name, case.label, case.witness, reasoning),
                )

        elapsed = (time.perf_counter() - start) * 1000
        logger.info(f"Suite '{suite.name}' passed {checked} cases in {elapsed:.0f} ms")
        return SuiteReport(suite=suite.name, passed=True, cases_checked=checked, bounds=self.bounds, elapsed_ms=elapsed)
