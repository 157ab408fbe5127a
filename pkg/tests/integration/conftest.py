"""Fixtures for integration tests."""
import sys
from pathlib import Path

import pytest
import yaml

REPO_ROOT = Path(__file__).resolve().parents[2]


@pytest.fixture
def make_config(tmp_path):
    """Build a Config from the defaults with a temporary data store and optional bound overrides."""
    from src.core.config import DEFAULT_RAW, parse_config

    def _make(**enumeration):
        raw = dict(DEFAULT_RAW)
        raw["enumeration"] = {**DEFAULT_RAW["enumeration"], **enumeration}
        raw["data_store"] = {"path": str(tmp_path / "data")}
        return parse_config(raw)

    return _make


@pytest.fixture
def config_path(tmp_path):
    """The default configuration written to disk, data store under tmp_path."""
    from src.core.config import DEFAULT_RAW

    raw = dict(DEFAULT_RAW)
    raw["data_store"] = {"path": str(tmp_path / "data")}
    path = tmp_path / "config.yaml"
    path.write_text(yaml.safe_dump(raw, allow_unicode=True))
    return str(path)


@pytest.fixture
def run_cli(config_path):
    """Run `python -m src` in a subprocess from the repository root."""
    import subprocess

    def _run(*args: str, stdin: str | None = None) -> subprocess.CompletedProcess:
        return subprocess.run(
            [sys.executable, "-m", "src", "-c", config_path, *args],
            cwd=REPO_ROOT,
            input=stdin,
            capture_output=True,
            text=True,
            timeout=600,
        )

    return _run
