"""Configuration loading and validation."""
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = "config/default.yaml"


class ConfigError(Exception):
    """Raised when configuration is invalid."""

    pass


@dataclass
class EnumerationConfig:
    """Enumeration bounds shared by the verification suites."""

    max_cells: int = 6
    max_n: int = 4
    cross_check_statistics: bool = False
    sample: int | None = None
    seed: int = 0


@dataclass
class LimitsConfig:
    """Truncation and stabilization settings for the character limit."""

    qmax: int = 4
    kmax_cap: int = 8
    patience: int = 2


@dataclass
class SpliceConfig:
    confluence_budget: int = 200_000


@dataclass
class RenderConfig:
    """Lattice diagram rendering."""

    tile_size: int = 40
    palette: list[str] = field(default_factory=list)
    stroke_width: float = 2.0


@dataclass
class DataStoreConfig:
    """Data store configuration."""

    path: str = "./data"


@dataclass
class SuiteConfig:
    """Verification suite configuration."""

    name: str
    class_path: str
    enabled: bool = True
    params: dict[str, Any] = field(default_factory=dict)


@dataclass
class Config:
    """Main configuration container."""

    enumeration: EnumerationConfig
    limits: LimitsConfig
    splice: SpliceConfig
    render: RenderConfig
    data_store: DataStoreConfig
    suites: list[SuiteConfig]

    def get_enabled_suites(self) -> list[SuiteConfig]:
        """Get list of enabled suites."""
        return [s for s in self.suites if s.enabled]

    def get_suite(self, name: str) -> SuiteConfig | None:
        for suite in self.suites:
            if suite.name == name:
                return suite
        return None


_SUITE_MODULES = {
    "whittaker-expansions": "expansions.WhittakerExpansionsSuite",
    "worked-examples": "worked_examples.WorkedExamplesSuite",
    "statistics": "statistics.StatisticsSuite",
    "bijection-roundtrip": "bijections.BijectionRoundtripSuite",
    "fiber-identities": "bijections.FiberIdentitiesSuite",
    "omega-involution": "bijections.OmegaInvolutionSuite",
    "dsplice-confluence": "splice.DspliceConfluenceSuite",
    "splice-relations": "splice.SpliceRelationsSuite",
    "cl-basis": "clbasis.CLBasisSuite",
    "modified-macdonald": "expansions.ModifiedMacdonaldSuite",
    "character-limit": "limits.CharacterLimitSuite",
    "branching": "expansions.BranchingSuite",
    "lattice-readout": "lattice.LatticeReadoutSuite",
    "direct-limit": "limits.DirectLimitSuite",
}

# Mirrors config/default.yaml.
DEFAULT_RAW: dict[str, Any] = {
    "enumeration": {"max_cells": 6, "max_n": 4, "cross_check_statistics": False, "sample": None, "seed": 0},
    "limits": {"qmax": 4, "kmax_cap": 8, "patience": 2},
    "splice": {"confluence_budget": 200_000},
    "render": {
        "tile_size": 40,
        "palette": ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"],
        "stroke_width": 2.0,
    },
    "data_store": {"path": "./data"},
    "suites": [
        {
            "name": name,
            "class_path": f"src.verification.suites.{target}",
            "enabled": True,
            "params": {"max_cells": 5, "max_n": 3} if name == "modified-macdonald" else {},
        }
        for name, target in _SUITE_MODULES.items()
    ],
}


def _section(raw: dict[str, Any], name: str) -> dict[str, Any]:
    value = raw[name] or {}
    if not isinstance(value, dict):
        raise ConfigError(f"Configuration section '{name}' must be a mapping")
    return value


def parse_config(raw: Any) -> Config:
    """Build a Config from an already-decoded mapping.

    Raises:
        ConfigError: If a required section or suite field is missing
    """
    if raw is None:
        raise ConfigError("Configuration file is empty")
    if not isinstance(raw, dict):
        raise ConfigError("Configuration root must be a mapping")

    required_sections = ["enumeration", "limits", "splice", "render", "data_store", "suites"]
    for section in required_sections:
        if section not in raw:
            raise ConfigError(f"Missing required configuration section: {section}")

    enum_raw = _section(raw, "enumeration")
    enumeration = EnumerationConfig(
        max_cells=int(enum_raw.get("max_cells", 6)),
        max_n=int(enum_raw.get("max_n", 4)),
        cross_check_statistics=bool(enum_raw.get("cross_check_statistics", False)),
        sample=enum_raw.get("sample"),
        seed=int(enum_raw.get("seed", 0)),
    )

    lim_raw = _section(raw, "limits")
    limits = LimitsConfig(
        qmax=int(lim_raw.get("qmax", 4)),
        kmax_cap=int(lim_raw.get("kmax_cap", 8)),
        patience=int(lim_raw.get("patience", 2)),
    )

    splice = SpliceConfig(
        confluence_budget=int(_section(raw, "splice").get("confluence_budget", 200_000)),
    )

    render_raw = _section(raw, "render")
    render = RenderConfig(
        tile_size=int(render_raw.get("tile_size", 40)),
        palette=list(render_raw.get("palette", [])),
        stroke_width=float(render_raw.get("stroke_width", 2.0)),
    )

    data_store = DataStoreConfig(path=str(_section(raw, "data_store").get("path", "./data")))

    suites = []
    for suite_raw in raw.get("suites") or []:
        try:
            suite = SuiteConfig(
                name=suite_raw["name"],
                class_path=suite_raw["class_path"],
                enabled=suite_raw.get("enabled", True),
                params=suite_raw.get("params") or {},
            )
        except (KeyError, TypeError) as e:
            raise ConfigError(f"Suite entry is missing a field: {e}") from e
        suites.append(suite)

    return Config(
        enumeration=enumeration,
        limits=limits,
        splice=splice,
        render=render,
        data_store=data_store,
        suites=suites,
    )


def load_config(path: str) -> Config:
    """Load configuration from YAML file.

    Args:
        path: Path to YAML configuration file

    Returns:
        Config object with validated configuration

    Raises:
        ConfigError: If file not found, invalid YAML, or missing required fields
    """
    config_path = Path(path)

    if not config_path.exists():
        raise ConfigError(f"Configuration file not found: {path}")

    try:
        with open(config_path) as f:
            raw = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ConfigError(f"Failed to parse YAML: {e}") from e

    config = parse_config(raw)

    logger.info(f"Loaded configuration from {path}")
    logger.debug(f"Enumeration: max_cells={config.enumeration.max_cells}, max_n={config.enumeration.max_n}")
    logger.debug(f"Suites: {[s.name for s in config.suites]}")

    return config


def default_config() -> Config:
    return parse_config(DEFAULT_RAW)


def resolve_config(path: str | None) -> Config:
    """Load `path`; with no path, fall back to built-in defaults when the default file is absent."""
    if path is not None:
        return load_config(path)
    if Path(DEFAULT_CONFIG_PATH).exists():
        return load_config(DEFAULT_CONFIG_PATH)
    logger.info(f"{DEFAULT_CONFIG_PATH} not found, using built-in defaults")
    return default_config()
