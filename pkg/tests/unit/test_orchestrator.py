"""Tests for VerificationOrchestrator."""
import pytest
import tempfile


def create_config(path: str, suites=None):
    """Create a config for testing."""
    from src.core.config import (
        Config,
        DataStoreConfig,
        EnumerationConfig,
        LimitsConfig,
        RenderConfig,
        SpliceConfig,
        SuiteConfig,
    )

    if suites is None:
        suites = [
            SuiteConfig(
                name="worked-examples",
                class_path="src.verification.suites.worked_examples.WorkedExamplesSuite",
            ),
            SuiteConfig(
                name="branching",
                class_path="src.verification.suites.expansions.BranchingSuite",
                enabled=False,
            ),
        ]
    return Config(
        enumeration=EnumerationConfig(max_cells=3, max_n=2, cross_check_statistics=False),
        limits=LimitsConfig(qmax=1, kmax_cap=6, patience=2),
        splice=SpliceConfig(confluence_budget=5000),
        render=RenderConfig(),
        data_store=DataStoreConfig(path=path),
        suites=suites,
    )


def test_orchestrator_bounds_from_config():
    from src.core.orchestrator import VerificationOrchestrator

    with tempfile.TemporaryDirectory() as tmpdir:
        orchestrator = VerificationOrchestrator(create_config(tmpdir))

        assert orchestrator.bounds.max_cells == 3
        assert orchestrator.bounds.max_n == 2
        assert orchestrator.bounds.qmax == 1


def test_orchestrator_overrides_bounds():
    from src.core.orchestrator import VerificationOrchestrator

    with tempfile.TemporaryDirectory() as tmpdir:
        orchestrator = VerificationOrchestrator(create_config(tmpdir), max_cells=5, max_n=None)

        assert orchestrator.bounds.max_cells == 5
        assert orchestrator.bounds.max_n == 2


def test_orchestrator_select():
    from src.core.orchestrator import VerificationOrchestrator

    with tempfile.TemporaryDirectory() as tmpdir:
        orchestrator = VerificationOrchestrator(create_config(tmpdir))

        assert [s.name for s in orchestrator.select("all")] == ["worked-examples"]
        assert [s.name for s in orchestrator.select("branching")] == ["branching"]


def test_orchestrator_unknown_suite():
    from src.core.config import ConfigError
    from src.core.orchestrator import VerificationOrchestrator

    with tempfile.TemporaryDirectory() as tmpdir:
        orchestrator = VerificationOrchestrator(create_config(tmpdir))

        with pytest.raises(ConfigError, match="Unknown suite 'nope'"):
            orchestrator.select("nope")


def test_orchestrator_instantiates_suite_with_shared_params():
    from src.core.orchestrator import VerificationOrchestrator
    from src.verification.base import IdentitySuite

    with tempfile.TemporaryDirectory() as tmpdir:
        config = create_config(tmpdir)
        orchestrator = VerificationOrchestrator(config)

        suite = orchestrator.instantiate_suite(config.get_suite("branching"))

        assert isinstance(suite, IdentitySuite)
        assert suite.name == "branching"
        assert suite.param("confluence_budget", None) == 5000
        assert suite.param("patience", None) == 2


def test_orchestrator_bad_class_path():
    from src.core.config import ConfigError, SuiteConfig
    from src.core.orchestrator import VerificationOrchestrator

    with tempfile.TemporaryDirectory() as tmpdir:
        broken = SuiteConfig(name="broken", class_path="src.verification.suites.nowhere.Missing")
        orchestrator = VerificationOrchestrator(create_config(tmpdir, suites=[broken]))

        with pytest.raises(ConfigError, match="Cannot load suite broken"):
            orchestrator.run("broken")


def test_orchestrator_rejects_non_suite():
    from src.core.config import ConfigError, SuiteConfig
    from src.core.orchestrator import VerificationOrchestrator

    with tempfile.TemporaryDirectory() as tmpdir:
        not_a_suite = SuiteConfig(name="dict", class_path="builtins.dict")
        orchestrator = VerificationOrchestrator(create_config(tmpdir, suites=[not_a_suite]))

        with pytest.raises(ConfigError, match="does not implement IdentitySuite"):
            orchestrator.run("dict")


def test_orchestrator_runs_and_audits():
    from src.core.orchestrator import VerificationOrchestrator

    with tempfile.TemporaryDirectory() as tmpdir:
        orchestrator = VerificationOrchestrator(create_config(tmpdir))

        reports = orchestrator.run("all")

        assert [r.suite for r in reports] == ["worked-examples"]
        assert reports[0].passed, reports[0].counterexample
        records = orchestrator.data_store.read_suite_reports()
        assert len(records) == 1
        assert records[0]["suite"] == "worked-examples"


def test_orchestrator_uses_given_data_store():
    from src.core.orchestrator import VerificationOrchestrator

    class MemoryStore:
        def __init__(self):
            self.reports = []

        def log_suite_report(self, report):
            self.reports.append(report)

    with tempfile.TemporaryDirectory() as tmpdir:
        store = MemoryStore()
        orchestrator = VerificationOrchestrator(create_config(tmpdir), data_store=store)
        orchestrator.run("branching")

        assert len(store.reports) == 1
        assert store.reports[0].passed
