"""Base protocols and classes for identity suites."""
from typing import Callable, Iterator, Protocol, runtime_checkable

from src.models.verification import Bounds, Case, CheckResult


@runtime_checkable
class IdentityCheck(Protocol):
    """Protocol for a single check in a suite pipeline.

    Checks may enrich the case data dict for the checks that follow.
    """

    name: str

    def process(self, case: Case, data: dict) -> CheckResult:
        """Check one case.

        Args:
            case: The case being verified
            data: Dict of data accumulated from previous checks

        Returns:
            CheckResult indicating whether the identity held
        """
        ...


@runtime_checkable
class IdentitySuite(Protocol):
    """Protocol for a named family of identities over an enumeration range."""

    name: str
    checks: list[IdentityCheck]

    def cases(self, bounds: Bounds) -> Iterator[Case]:
        """Yield the cases of the suite in canonical order."""
        ...


class FunctionCheck:
    """Adapts a predicate `(case, data) -> (passed, reasoning)` to IdentityCheck."""

    def __init__(self, name: str, predicate: Callable[[Case, dict], tuple[bool, str]]):
        self.name = name
        self._predicate = predicate

    def process(self, case: Case, data: dict) -> CheckResult:
        passed, reasoning = self._predicate(case, data)
        return CheckResult(passed=passed, data=data, reasoning=reasoning)


class BaseSuite:
    """Common plumbing: a name, a check list and the bounds the suite accepts as params."""

    name = "base"
    description = ""

    def __init__(self, **params):
        self.params = params
        self.checks: list[IdentityCheck] = self.build_checks()

    def build_checks(self) -> list[IdentityCheck]:
        return []

    def cases(self, bounds: Bounds) -> Iterator[Case]:
        return iter(())

    def param(self, key: str, default):
        return self.params.get(key, default)
