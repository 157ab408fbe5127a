"""Identity check pipeline runner."""
import logging

from src.models.verification import Case
from src.verification.base import IdentityCheck

logger = logging.getLogger(__name__)


class CheckPipeline:
    """Runs one case through a sequence of checks.

    Each check can add to the data dict for the next one. Processing stops
    at the first check that returns passed=False.
    """

    def __init__(self, checks: list[IdentityCheck]):
        self.checks = checks

    def run(self, case: Case) -> tuple[bool, dict, str]:
        """Run a case through all checks.

        Args:
            case: The case being verified

        Returns:
            Tuple of (passed_all_checks, final_data, accumulated_reasoning)
        """
        if not self.checks:
            return True, dict(case.data), ""

        data = dict(case.data)
        reasoning_parts: list[str] = []

        for check in self.checks:
            result = check.process(case, data)
            reasoning_parts.append(f"[{check.name}] {result.reasoning}")
            data = result.data

            if not result.passed:
                logger.debug(f"Check '{check.name}' failed on {case.label}: {result.reasoning}")
                return False, data, "\n".join(reasoning_parts)

        return True, data, "\n".join(reasoning_parts)
