"""Tests for the suite runner."""
from src.models.verification import Bounds, Case
from src.verification.base import BaseSuite, FunctionCheck


class CountingSuite(BaseSuite):
    """Cases 0..9; fails on the value given as `fail_on`."""

    name = "counting"

    def build_checks(self):
        def below(case, data):
            return data["value"] != self.param("fail_on", None), f"value={data['value']}"

        def explode(case, data):
            if data["value"] == self.param("raise_on", None):
                from src.core.errors import ShapeError

                raise ShapeError("bad shape")
            return True, "ok"

        return [FunctionCheck("below", below), FunctionCheck("explode", explode)]

    def cases(self, bounds: Bounds):
        for value in range(10):
            yield Case(label=f"v={value}", witness={"value": value}, data={"value": value})


def test_runner_passes_all_cases():
    from src.verification.runner import SuiteRunner

    report = SuiteRunner(Bounds()).run(CountingSuite())

    assert report.passed is True
    assert report.cases_checked == 10
    assert report.counterexample is None
    assert report.suite == "counting"


def test_runner_stops_at_first_failure():
    from src.verification.runner import SuiteRunner

    report = SuiteRunner(Bounds()).run(CountingSuite(fail_on=3))

    assert report.passed is False
    assert report.cases_checked == 4
    assert report.counterexample.case == "v=3"
    assert report.counterexample.witness == {"value": 3}
    assert "[below] value=3" in report.counterexample.reasoning


def test_runner_reports_library_errors_as_failures():
    from src.verification.runner import SuiteRunner

    report = SuiteRunner(Bounds()).run(CountingSuite(raise_on=5))

    assert report.passed is False
    assert report.counterexample.reasoning == "ShapeError: bad shape"


def test_runner_samples_with_seed(monkeypatch):
    from src.verification.runner import SEEDLESS_ENV, SuiteRunner

    monkeypatch.delenv(SEEDLESS_ENV, raising=False)
    first = SuiteRunner(Bounds(sample=4, seed=11)).run(CountingSuite())
    second = SuiteRunner(Bounds(sample=4, seed=11)).run(CountingSuite())

    assert first.cases_checked == second.cases_checked == 4


def test_runner_sampled_cases_keep_canonical_order(monkeypatch):
    from src.verification.runner import SEEDLESS_ENV, SuiteRunner

    monkeypatch.delenv(SEEDLESS_ENV, raising=False)
    seen = []

    class RecordingSuite(CountingSuite):
        def build_checks(self):
            return [FunctionCheck("record", lambda case, data: (seen.append(data["value"]) or True, ""))]

    SuiteRunner(Bounds(sample=5, seed=3)).run(RecordingSuite())

    assert len(seen) == 5
    assert seen == sorted(seen)


def test_runner_seedless_ignores_sample(monkeypatch):
    from src.verification.runner import SEEDLESS_ENV, SuiteRunner, seedless

    monkeypatch.setenv(SEEDLESS_ENV, "1")
    assert seedless()

    report = SuiteRunner(Bounds(sample=2)).run(CountingSuite())

    assert report.cases_checked == 10


def test_report_json():
    from src.verification.runner import SuiteRunner

    payload = SuiteRunner(Bounds(max_cells=3)).run(CountingSuite(fail_on=0)).to_json()

    assert payload["suite"] == "counting"
    assert payload["passed"] is False
    assert payload["bounds"]["max_cells"] == 3
    assert payload["counterexample"]["case"] == "v=0"
