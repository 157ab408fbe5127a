"""Operations on partitions and column compositions."""
import itertools
import logging
from math import comb
from typing import Iterator

from sympy.utilities.iterables import multiset_permutations, partitions

from src.core.errors import CellOutOfShapeError, ShapeError
from src.models.shapes import Cell, ColumnComposition, Partition

logger = logging.getLogger(__name__)


def conjugate(shape: Partition) -> Partition:
    """Transpose of a partition: result[j] = #{i : λ_i >= j}."""
    return shape.conjugate()


def interlaces(mu: Partition, shape: Partition) -> bool:
    """True iff λ_i >= μ_i >= λ_{i+1} for every i (missing parts read as 0)."""
    depth = max(mu.length, shape.length) + 1
    return all(shape.part(i) >= mu.part(i) >= shape.part(i + 1) for i in range(1, depth + 1))


def is_horizontal_strip(mu: Partition, shape: Partition) -> bool:
    """True iff dg(μ) ⊆ dg(λ) and dg(λ) \\ dg(μ) has at most one cell per column."""
    if any(not shape.contains(c) for c in mu.cells()):
        return False
    removed_per_column: dict[int, int] = {}
    for cell in shape.cells():
        if not mu.contains(cell):
            removed_per_column[cell.col] = removed_per_column.get(cell.col, 0) + 1
    return all(count <= 1 for count in removed_per_column.values())


def n_stat(shape: Partition) -> int:
    """n(λ) = Σ_j C(λ'_j, 2), the largest value maj takes on fillings of λ."""
    return sum(comb(h, 2) for h in shape.conjugate().parts)


def _require_cell(cell: Cell, shape: Partition) -> None:
    if not shape.contains(cell):
        raise CellOutOfShapeError(f"Cell ({cell.row}, {cell.col}) is not in the diagram of {shape}")


def arm(cell: Cell, shape: Partition) -> int:
    """Number of cells strictly to the right of the cell in its row."""
    _require_cell(cell, shape)
    return shape.part(cell.row) - cell.col


def coarm(cell: Cell, shape: Partition) -> int:
    """Number of cells strictly to the left of the cell in its row."""
    _require_cell(cell, shape)
    return cell.col - 1


def leg(cell: Cell, shape: Partition) -> int:
    """Number of cells strictly below the cell in its column."""
    _require_cell(cell, shape)
    return shape.conjugate().part(cell.col) - cell.row


def interlacing_partitions(shape: Partition, n: int) -> Iterator[Partition]:
    """Every μ ≺ λ with at most n-1 parts, λ read with n parts.

    Yields nothing when λ has more than n parts.
    """
    if shape.length > n:
        return
    padded = shape.padded(n) + (0,)
    ranges = [range(padded[i], padded[i + 1] - 1, -1) for i in range(n - 1)]
    for mu_parts in itertools.product(*ranges):
        yield Partition(tuple(mu_parts))


def partitions_up_to(max_cells: int, max_parts: int | None = None) -> list[Partition]:
    """All partitions with at most max_cells cells (and at most max_parts parts).

    Ordered by size, then reverse-lexicographically within a size.
    """
    found: list[Partition] = []
    for size in range(max_cells + 1):
        if size == 0:
            found.append(Partition(()))
            continue
        if max_parts is not None and max_parts < 1:
            continue
        for multiplicities in partitions(size, m=max_parts):
            parts: list[int] = []
            for part, mult in sorted(dict(multiplicities).items(), reverse=True):
                parts.extend([part] * mult)
            found.append(Partition(tuple(parts)))
    found.sort(key=lambda p: (p.size, tuple(-x for x in p.parts)))
    return found


def compositions_of(shape: Partition) -> Iterator[ColumnComposition]:
    """The set Comp(λ): distinct rearrangements of the columns of λ."""
    columns = list(shape.conjugate().parts)
    if not columns:
        yield ColumnComposition(())
        return
    for arrangement in multiset_permutations(columns):
        yield ColumnComposition(tuple(arrangement))


def theta(n: int) -> Partition:
    """θ = (2,1,...,1,0): n-1 nonzero parts, |θ| = n."""
    if n < 2:
        raise ShapeError(f"θ needs n >= 2, got n={n}")
    return Partition((2,) + (1,) * (n - 2))


def add_theta(shape: Partition, k: int, n: int) -> Partition:
    """The shape λ + kθ for λ with fewer than n parts."""
    if k < 0:
        raise ShapeError(f"k must be non-negative, got {k}")
    if shape.length >= n:
        raise ShapeError(f"λ + kθ needs λ of length < n; {shape} has {shape.length} parts, n={n}")
    th = theta(n).padded(n)
    lam = shape.padded(n)
    return Partition(tuple(a + k * b for a, b in zip(lam, th)))
