"""Tests for the identity check pipeline."""
from src.models.verification import Case, CheckResult


class PassingCheck:
    """Test check that always passes."""

    name = "passing_check"

    def process(self, case: Case, data: dict) -> CheckResult:
        data["processed_by"] = data.get("processed_by", []) + [self.name]
        return CheckResult(passed=True, data=data, reasoning="Passed")


class FailingCheck:
    """Test check that always fails."""

    name = "failing_check"

    def process(self, case: Case, data: dict) -> CheckResult:
        return CheckResult(passed=False, data=data, reasoning="Identity does not hold")


class EnrichingCheck:
    """Test check that enriches data."""

    name = "enriching_check"

    def process(self, case: Case, data: dict) -> CheckResult:
        data["enriched"] = True
        data["label_seen"] = case.label
        return CheckResult(passed=True, data=data, reasoning=f"Enriched data for {case.label}")


def _case():
    return Case(label="λ=(2) n=2", witness={"shape": [2], "n": 2}, data={"n": 2})


def test_pipeline_all_pass():
    from src.verification.pipeline import CheckPipeline

    pipeline = CheckPipeline(checks=[PassingCheck(), PassingCheck()])

    passed, final_data, reasoning = pipeline.run(_case())

    assert passed is True
    assert final_data["processed_by"] == ["passing_check", "passing_check"]
    assert final_data["n"] == 2


def test_pipeline_stops_at_failure():
    from src.verification.pipeline import CheckPipeline

    pipeline = CheckPipeline(checks=[PassingCheck(), FailingCheck(), PassingCheck()])

    passed, final_data, reasoning = pipeline.run(_case())

    assert passed is False
    assert len(final_data["processed_by"]) == 1  # Only first check ran
    assert "[failing_check] Identity does not hold" in reasoning


def test_pipeline_accumulates_reasoning():
    from src.verification.pipeline import CheckPipeline

    pipeline = CheckPipeline(checks=[EnrichingCheck(), PassingCheck()])

    passed, final_data, reasoning = pipeline.run(_case())

    assert passed is True
    assert final_data["label_seen"] == "λ=(2) n=2"
    assert reasoning.splitlines() == ["[enriching_check] Enriched data for λ=(2) n=2", "[passing_check] Passed"]


def test_pipeline_does_not_mutate_case_data():
    from src.verification.pipeline import CheckPipeline

    case = _case()
    CheckPipeline(checks=[EnrichingCheck()]).run(case)

    assert case.data == {"n": 2}


def test_empty_pipeline_passes():
    from src.verification.pipeline import CheckPipeline

    passed, final_data, reasoning = CheckPipeline(checks=[]).run(_case())

    assert passed is True
    assert final_data == {"n": 2}
    assert reasoning == ""


def test_function_check_adapts_predicate():
    from src.verification.base import FunctionCheck, IdentityCheck

    check = FunctionCheck("even", lambda case, data: (data["n"] % 2 == 0, f"n={data['n']}"))

    assert isinstance(check, IdentityCheck)
    result = check.process(_case(), {"n": 2})
    assert result.passed is True
    assert result.reasoning == "n=2"
