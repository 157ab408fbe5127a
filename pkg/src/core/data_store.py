"""Data store protocol and implementations."""
import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Protocol, runtime_checkable

import pyarrow as pa
import pyarrow.parquet as pq

from src.algebra.qpoly import QXPoly
from src.core.errors import InputFormatError
from src.models.verification import SuiteReport

logger = logging.getLogger(__name__)

STATISTICS_SCHEMA = pa.schema(
    [
        ("rows", pa.string()),
        ("x_weight", pa.list_(pa.int64())),
        ("inv", pa.int64()),
        ("quinv", pa.int64()),
        ("maj", pa.int64()),
        ("area", pa.int64()),
        ("rowsort", pa.string()),
    ]
)


@runtime_checkable
class DataStore(Protocol):
    """Protocol for persistence of golden files, audit records and statistics tables."""

    # Golden polynomials
    def write_golden(self, name: str, poly: QXPoly) -> Path:
        """Write a polynomial as canonical JSON."""
        ...

    def read_golden(self, name: str) -> QXPoly | None:
        """Read a golden polynomial. Returns None if not found."""
        ...

    # Audit
    def log_suite_report(self, report: SuiteReport) -> None:
        """Append one suite run to the audit trail."""
        ...

    # Statistics tables
    def write_statistics_table(self, name: str, rows: list[dict[str, Any]], path: str | Path | None = None) -> Path:
        """Write per-filling statistics to storage."""
        ...

    def read_statistics_table(self, name: str) -> list[dict[str, Any]]:
        """Read per-filling statistics from storage."""
        ...


class FileDataStore:
    """File-based implementation of DataStore using Parquet and JSON."""

    def __init__(self, base_path: str | Path):
        self.base_path = Path(base_path)
        self._ensure_directories()

    def _ensure_directories(self) -> None:
        """Create directory structure if it doesn't exist."""
        dirs = [
            "golden",
            "audit/verify",
            "tables",
        ]
        for d in dirs:
            (self.base_path / d).mkdir(parents=True, exist_ok=True)

    # =========================================================================
    # Golden Polynomials (JSON)
    # =========================================================================

    def golden_path(self, name: str) -> Path:
        return self.base_path / "golden" / f"{name}.json"

    def write_golden(self, name: str, poly: QXPoly) -> Path:
        """Write a polynomial to golden/<name>.json in canonical term order."""
        file_path = self.golden_path(name)
        payload = {"n": poly.n, "terms": poly.to_json()}
        with open(file_path, "w") as f:
            json.dump(payload, f, indent=2)
            f.write("\n")
        logger.info(f"Wrote golden file {file_path}")
        return file_path

    def read_golden(self, name: str) -> QXPoly | None:
        """Read golden/<name>.json."""
        file_path = self.golden_path(name)
        if not file_path.exists():
            return None
        try:
            with open(file_path) as f:
                payload = json.load(f)
            return QXPoly.from_json(payload["terms"], n=int(payload["n"]))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise InputFormatError(f"Malformed golden file {file_path}: {e}") from e

    # =========================================================================
    # Audit Logging (JSONL)
    # =========================================================================

    def log_suite_report(self, report: SuiteReport) -> None:
        """Append a suite report to audit/verify/<date>.jsonl."""
        today = datetime.now().strftime("%Y-%m-%d")
        file_path = self.base_path / "audit" / "verify" / f"{today}.jsonl"

        log_entry = {"timestamp": datetime.now().isoformat(), **report.to_json()}

        with open(file_path, "a") as f:
            f.write(json.dumps(log_entry, ensure_ascii=False) + "\n")

        logger.debug(f"Logged suite report to {file_path}")

    def read_suite_reports(self, date: str | None = None) -> list[dict[str, Any]]:
        """Audit records of one day (today by default)."""
        day = date or datetime.now().strftime("%Y-%m-%d")
        file_path = self.base_path / "audit" / "verify" / f"{day}.jsonl"
        if not file_path.exists():
            return []
        with open(file_path) as f:
            return [json.loads(line) for line in f if line.strip()]

    # =========================================================================
    # Statistics Tables (Parquet)
    # =========================================================================

    def write_statistics_table(
        self, name: str, rows: list[dict[str, Any]], path: str | Path | None = None
    ) -> Path:
        """Write one row per filling to tables/<name>.parquet, or to `path` when given."""
        file_path = Path(path) if path else self.base_path / "tables" / f"{name}.parquet"
        table = pa.table(
            {column: [row[column] for row in rows] for column in STATISTICS_SCHEMA.names},
            schema=STATISTICS_SCHEMA,
        )
        pq.write_table(table, file_path)
        logger.info(f"Wrote {table.num_rows} rows to {file_path}")
        return file_path

    def read_statistics_table(self, name: str) -> list[dict[str, Any]]:
        file_path = self.base_path / "tables" / f"{name}.parquet"
        if not file_path.exists():
            return []
        return pq.read_table(file_path).to_pylist()
