"""Filling model: entries in [n] on a partition or column-composition diagram."""
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Iterator

from src.core.errors import (
    CellOutOfShapeError,
    ColumnStrictnessError,
    InputFormatError,
    QWhittakerError,
    ShapeError,
)
from src.models.shapes import Cell, ColumnComposition, Partition


@dataclass(frozen=True)
class Filling:
    """A filling stored column by column, each column read top to bottom.

    Column strict fillings (CSFs) are the fillings for which
    is_column_strict() holds; operations that need one check it on entry.
    """

    columns: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self) -> None:
        columns = tuple(tuple(col) for col in self.columns)
        object.__setattr__(self, "columns", columns)
        if self.n < 0:
            raise ShapeError(f"Entry bound n must be non-negative, got {self.n}")
        for col in columns:
            for value in col:
                if not isinstance(value, int) or isinstance(value, bool) or not 1 <= value <= self.n:
                    raise ShapeError(f"Filling entries must lie in [1, {self.n}], got {value!r}")

    # -------------------------------------------------------------------------
    # Construction
    # -------------------------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], n: int) -> "Filling":
        """Build a partition-shaped filling from its rows, top to bottom."""
        row_list = [list(r) for r in rows]
        while row_list and not row_list[-1]:
            row_list.pop()
        lengths = [len(r) for r in row_list]
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise ShapeError(f"Row lengths {lengths} are not weakly decreasing")
        width = lengths[0] if lengths else 0
        columns = tuple(
            tuple(row[c] for row in row_list if c < len(row)) for c in range(width)
        )
        return cls(columns, n)

    @classmethod
    def from_columns(cls, columns: Iterable[Iterable[int]], n: int) -> "Filling":
        return cls(tuple(tuple(col) for col in columns), n)

    @classmethod
    def empty(cls, n: int) -> "Filling":
        return cls((), n)

    @classmethod
    def from_json(cls, raw: Any) -> "Filling":
        """Decode {"n": .., "rows": [...]} or {"n": .., "columns": [...]}."""
        if not isinstance(raw, dict) or "n" not in raw:
            raise InputFormatError("Filling JSON must be an object with an 'n' field")
        try:
            n = int(raw["n"])
            if "rows" in raw:
                return cls.from_rows(raw["rows"], n)
            if "columns" in raw:
                return cls.from_columns(raw["columns"], n)
        except (TypeError, ValueError, QWhittakerError) as e:
            raise InputFormatError(f"Malformed filling JSON: {e}") from e
        raise InputFormatError("Filling JSON needs 'rows' or 'columns'")

    def to_json(self) -> dict[str, Any]:
        if self.shape.is_partition_shape():
            return {"n": self.n, "rows": [list(r) for r in self.rows()]}
        return {"n": self.n, "columns": [list(c) for c in self.columns]}

    # -------------------------------------------------------------------------
    # Shape and access
    # -------------------------------------------------------------------------

    @cached_property
    def shape(self) -> ColumnComposition:
        return ColumnComposition(tuple(len(c) for c in self.columns))

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.columns)

    def __contains__(self, cell: object) -> bool:
        return isinstance(cell, Cell) and self.shape.contains(cell)

    def __getitem__(self, cell: Cell) -> int:
        if not self.shape.contains(cell):
            raise CellOutOfShapeError(f"Cell ({cell.row}, {cell.col}) is not in the filling's diagram")
        return self.columns[cell.col - 1][cell.row - 1]

    def get(self, cell: Cell) -> int | None:
        if cell.row < 1 or cell.col < 1 or not self.shape.contains(cell):
            return None
        return self.columns[cell.col - 1][cell.row - 1]

    def cells(self) -> Iterator[Cell]:
        """Cells in row-major order."""
        return self.shape.cells()

    def row_cells(self, row: int) -> list[Cell]:
        """Cells of one row, left to right."""
        return [Cell(row, c) for c, col in enumerate(self.columns, start=1) if row <= len(col)]

    def rows(self) -> list[tuple[int, ...]]:
        """Entries of each row left to right (skipping columns too short to reach it)."""
        return [
            tuple(self.columns[c.col - 1][r - 1] for c in self.row_cells(r))
            for r in range(1, self.shape.num_rows + 1)
        ]

    def is_column_strict(self) -> bool:
        return all(a < b for col in self.columns for a, b in zip(col, col[1:]))

    def require_column_strict(self) -> None:
        if not self.is_column_strict():
            raise ColumnStrictnessError(f"Filling {self} is not column strict")

    def require_partition_shape(self) -> Partition:
        """The partition shape; ShapeError for other column compositions."""
        if not self.shape.is_partition_shape():
            raise ShapeError(f"Filling of column composition {self.shape.column_lengths} is not of partition shape")
        return self.shape.to_partition()

    def with_columns(self, columns: Iterable[Iterable[int]]) -> "Filling":
        return Filling(tuple(tuple(c) for c in columns), self.n)

    def __str__(self) -> str:
        if self.shape.is_partition_shape():
            return " / ".join(" ".join(str(v) for v in row) for row in self.rows())
        return " | ".join(",".join(str(v) for v in col) for col in self.columns)
