"""Wires configuration, suites, the runner and the data store together."""
import importlib
import logging
from dataclasses import replace
from typing import Any

from src.combinatorics.fillings import set_cross_check
from src.core.config import Config, ConfigError, SuiteConfig
from src.core.data_store import DataStore, FileDataStore
from src.models.verification import Bounds, SuiteReport
from src.verification.base import IdentitySuite
from src.verification.runner import SuiteRunner

logger = logging.getLogger(__name__)


class VerificationOrchestrator:
    """Loads the configured identity suites and runs them in order.

    Responsibilities:
    1. Derive enumeration bounds from configuration and CLI overrides
    2. Instantiate suites from their class paths
    3. Run each suite and append its report to the audit trail
    """

    def __init__(self, config: Config, data_store: DataStore | None = None, **overrides: Any):
        """Initialize the orchestrator.

        Args:
            config: Toolkit configuration
            data_store: Audit destination (FileDataStore at the configured path by default)
            **overrides: Non-None Bounds fields taken over the configured values
        """
        self.config = config
        self.data_store = data_store if data_store is not None else FileDataStore(config.data_store.path)
        bounds = Bounds(
            max_cells=config.enumeration.max_cells,
            max_n=config.enumeration.max_n,
            qmax=config.limits.qmax,
            sample=config.enumeration.sample,
            seed=config.enumeration.seed,
        )
        self.bounds = replace(bounds, **{k: v for k, v in overrides.items() if v is not None})
        set_cross_check(config.enumeration.cross_check_statistics)
        logger.info(f"Orchestrator initialized with bounds {self.bounds.to_json()}")

    def _shared_params(self) -> dict[str, Any]:
        """Suite params that default from the limits and splice sections."""
        return {
            "patience": self.config.limits.patience,
            "kmax_cap": self.config.limits.kmax_cap,
            "confluence_budget": self.config.splice.confluence_budget,
        }

    def instantiate_suite(self, suite_config: SuiteConfig) -> IdentitySuite:
        """Instantiate a suite from its class path.

        Args:
            suite_config: Suite configuration

        Returns:
            Instantiated suite object

        Raises:
            ConfigError: If the class path cannot be imported or is not a suite
        """
        try:
            module_path, class_name = suite_config.class_path.rsplit(".", 1)
            module = importlib.import_module(module_path)
            suite_class = getattr(module, class_name)
        except (ValueError, ImportError, AttributeError) as e:
            raise ConfigError(f"Cannot load suite {suite_config.name} from {suite_config.class_path}: {e}") from e

        suite = suite_class(**{**self._shared_params(), **suite_config.params})
        if not isinstance(suite, IdentitySuite):
            raise ConfigError(f"{suite_config.class_path} does not implement IdentitySuite")
        return suite

    def select(self, name: str) -> list[SuiteConfig]:
        """The enabled suites for 'all', or the one named suite."""
        if name == "all":
            return self.config.get_enabled_suites()
        suite_config = self.config.get_suite(name)
        if suite_config is None:
            known = ", ".join(s.name for s in self.config.suites)
            raise ConfigError(f"Unknown suite '{name}' (known: {known})")
        return [suite_config]

    def run(self, name: str) -> list[SuiteReport]:
        """Run the selected suites; stops after the first failing suite."""
        runner = SuiteRunner(self.bounds)
        reports = []
        for suite_config in self.select(name):
            suite = self.instantiate_suite(suite_config)
            report = runner.run(suite)
            self.data_store.log_suite_report(report)
            reports.append(report)
            if not report.passed:
                logger.error(f"Suite {suite_config.name} failed after {report.cases_checked} cases")
                break
        return reports
