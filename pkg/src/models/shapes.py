"""Shape models: partitions, column compositions and diagram cells."""
from dataclasses import dataclass
from typing import Any, Iterable, Iterator

from src.core.errors import IndexRangeError, InputFormatError, ShapeError


@dataclass(frozen=True, order=True)
class Cell:
    """A diagram cell, 1-based (row from the top, column from the left)."""

    row: int
    col: int

    def __post_init__(self) -> None:
        if self.row < 1 or self.col < 1:
            raise IndexRangeError(f"Cell coordinates must be >= 1, got ({self.row}, {self.col})")

    def up(self) -> "Cell":
        """The cell directly above (row - 1)."""
        return Cell(self.row - 1, self.col)

    def down(self) -> "Cell":
        """The cell directly below (row + 1)."""
        return Cell(self.row + 1, self.col)

    def to_json(self) -> list[int]:
        return [self.row, self.col]


@dataclass(frozen=True)
class Partition:
    """An integer partition, stored without trailing zeros.

    The number of variables n is never part of the shape; callers pass it
    explicitly and use padded() when they need exactly n parts.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise ShapeError(f"Partition parts must be integers, got {parts!r}")
            if p < 0:
                raise ShapeError(f"Partition parts must be non-negative, got {parts!r}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ShapeError(f"Partition parts must be weakly decreasing, got {parts!r}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the command-line form "a,b,c" (an empty string is the empty partition)."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = tuple(int(p) for p in text.split(","))
        except ValueError as e:
            raise InputFormatError(f"Cannot parse partition from {text!r}") from e
        try:
            return cls(parts)
        except ShapeError as e:
            raise InputFormatError(str(e)) from e

    @classmethod
    def from_json(cls, raw: Any) -> "Partition":
        if not isinstance(raw, list):
            raise InputFormatError(f"Partition JSON must be a list of integers, got {raw!r}")
        try:
            return cls(tuple(raw))
        except ShapeError as e:
            raise InputFormatError(str(e)) from e

    def to_json(self) -> list[int]:
        return list(self.parts)

    @property
    def size(self) -> int:
        """Number of cells |λ|."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (1-based); missing parts read as 0."""
        if i < 1:
            raise IndexRangeError(f"Part index must be >= 1, got {i}")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        """The parts padded with zeros to length exactly n."""
        if len(self.parts) > n:
            raise ShapeError(f"Partition {self.parts} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))

    def contains(self, cell: Cell) -> bool:
        return cell.row <= len(self.parts) and cell.col <= self.parts[cell.row - 1]

    def cells(self) -> Iterator[Cell]:
        """Cells of the Young diagram in row-major order."""
        for r, length in enumerate(self.parts, start=1):
            for c in range(1, length + 1):
                yield Cell(r, c)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class ColumnComposition:
    """A diagram given by its column lengths, left to right; empty columns allowed."""

    column_lengths: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        lengths = tuple(self.column_lengths)
        for length in lengths:
            if not isinstance(length, int) or isinstance(length, bool) or length < 0:
                raise ShapeError(f"Column lengths must be non-negative integers, got {lengths!r}")
        object.__setattr__(self, "column_lengths", lengths)

    @classmethod
    def from_partition(cls, shape: Partition) -> "ColumnComposition":
        return cls(shape.conjugate().parts)

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> "ColumnComposition":
        return cls(tuple(lengths))

    def to_json(self) -> dict[str, list[int]]:
        return {"columns": list(self.column_lengths)}

    @property
    def num_columns(self) -> int:
        return len(self.column_lengths)

    @property
    def size(self) -> int:
        return sum(self.column_lengths)

    @property
    def num_rows(self) -> int:
        return max(self.column_lengths, default=0)

    def is_partition_shape(self) -> bool:
        """True iff the column lengths are weakly decreasing."""
        return all(a >= b for a, b in zip(self.column_lengths, self.column_lengths[1:]))

    def sorted_partition(self) -> Partition:
        """The partition λ with this composition in Comp(λ)."""
        return Partition(tuple(sorted(self.column_lengths, reverse=True))).conjugate()

    def to_partition(self) -> Partition:
        if not self.is_partition_shape():
            raise ShapeError(f"Column composition {self.column_lengths} is not a partition shape")
        return self.sorted_partition()

    def column_length(self, col: int) -> int:
        if col < 1:
            raise IndexRangeError(f"Column index must be >= 1, got {col}")
        return self.column_lengths[col - 1] if col <= len(self.column_lengths) else 0

    def contains(self, cell: Cell) -> bool:
        return cell.col <= len(self.column_lengths) and cell.row <= self.column_lengths[cell.col - 1]

    def cells(self) -> Iterator[Cell]:
        """Cells in row-major order (rows top to bottom, each left to right)."""
        for r in range(1, self.num_rows + 1):
            for c, length in enumerate(self.column_lengths, start=1):
                if r <= length:
                    yield Cell(r, c)
