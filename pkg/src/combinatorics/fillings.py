"""Enumeration of fillings and the statistics maj, inv, quinv."""
import itertools
import logging
from typing import Iterator

from src.algebra.qpoly import QXPoly
from src.combinatorics.triples import quinv_triple_count, refinv
from src.core.errors import StatisticMismatchError
from src.models.filling import Filling
from src.models.shapes import Cell, ColumnComposition, Partition

logger = logging.getLogger(__name__)

_cross_check = False


def set_cross_check(enabled: bool) -> None:
    """Compute inv/quinv of CSFs a second time through triple counts and compare."""
    global _cross_check
    _cross_check = enabled
    logger.debug(f"Statistic cross-check {'enabled' if enabled else 'disabled'}")


def cross_check_enabled() -> bool:
    return _cross_check


# =============================================================================
# Enumeration
# =============================================================================


def enumerate_csf(shape: Partition, n: int) -> Iterator[Filling]:
    """All column strict fillings of λ with entries in [n], row-major lexicographic."""
    heights = shape.conjugate().parts
    if heights and heights[0] > n:
        return
    cells = list(shape.cells())
    columns: list[list[int]] = [[] for _ in heights]

    def extend(index: int) -> Iterator[Filling]:
        if index == len(cells):
            yield Filling(tuple(tuple(c) for c in columns), n)
            return
        cell = cells[index]
        column = columns[cell.col - 1]
        low = column[-1] + 1 if column else 1
        high = n - (heights[cell.col - 1] - cell.row)
        for value in range(low, high + 1):
            column.append(value)
            yield from extend(index + 1)
            column.pop()

    yield from extend(0)


def enumerate_fillings(shape: Partition, n: int) -> Iterator[Filling]:
    """All n^|λ| fillings of λ in row-major lexicographic order."""
    cells = list(shape.cells())
    width = shape.part(1)
    for values in itertools.product(range(1, n + 1), repeat=len(cells)):
        columns: list[list[int]] = [[] for _ in range(width)]
        for cell, value in zip(cells, values):
            columns[cell.col - 1].append(value)
        yield Filling(tuple(tuple(c) for c in columns), n)


def enumerate_composition_csf(composition: ColumnComposition, n: int) -> Iterator[Filling]:
    """All column strict fillings of a column composition with entries in [n]."""
    per_column = [list(itertools.combinations(range(1, n + 1), h)) for h in composition.column_lengths]
    for columns in itertools.product(*per_column):
        yield Filling(tuple(columns), n)


# =============================================================================
# Weights and statistics
# =============================================================================


def x_weight(F: Filling) -> QXPoly:
    """The monomial Π_c x_{F(c)}."""
    exponents = [0] * F.n
    for column in F.columns:
        for value in column:
            exponents[value - 1] += 1
    return QXPoly.monomial(F.n, 0, exponents)


def x_exponents(F: Filling) -> tuple[int, ...]:
    exponents = [0] * F.n
    for column in F.columns:
        for value in column:
            exponents[value - 1] += 1
    return tuple(exponents)


def descents(F: Filling) -> set[Cell]:
    """Cells u outside the first row with F(u) > F(up(u))."""
    F.require_partition_shape()
    found = set()
    for c, column in enumerate(F.columns, start=1):
        for r in range(2, len(column) + 1):
            if column[r - 1] > column[r - 2]:
                found.add(Cell(r, c))
    return found


def maj(F: Filling) -> int:
    """Σ_{u ∈ Des(F)} (leg(u) + 1)."""
    F.require_partition_shape()
    return sum(len(F.columns[u.col - 1]) - u.row + 1 for u in descents(F))


def _row_lengths(F: Filling) -> list[int]:
    return [len(F.row_cells(r)) for r in range(1, F.shape.num_rows + 1)]


def _attack_pairs(F: Filling, same_row_left_attacks: bool) -> int:
    """Count pairs (u, v) with u attacking v and F(u) > F(v).

    For inv, u attacks v when u is left of v in the same row, or u is in the
    row below v and strictly right of it; quinv mirrors both conditions.
    """
    rows = F.rows()
    count = 0
    for r, row in enumerate(rows):
        width = len(row)
        for a in range(width):
            for b in range(a + 1, width):
                left, right = row[a], row[b]
                if same_row_left_attacks and left > right:
                    count += 1
                elif not same_row_left_attacks and right > left:
                    count += 1
        if r + 1 < len(rows):
            below = rows[r + 1]
            for cu, fu in enumerate(below):
                for cv, fv in enumerate(row):
                    if fu <= fv:
                        continue
                    if same_row_left_attacks and cu > cv:
                        count += 1
                    elif not same_row_left_attacks and cu < cv:
                        count += 1
    return count


def inv(F: Filling) -> int:
    """|Inv(F)| - Σ_{u ∈ Des(F)} arm(u)."""
    F.require_partition_shape()
    lengths = _row_lengths(F)
    value = _attack_pairs(F, True) - sum(lengths[u.row - 1] - u.col for u in descents(F))
    if _cross_check and F.is_column_strict():
        other = refinv(F)
        if other != value:
            raise StatisticMismatchError(f"inv({F}) = {value} but refinv = {other}")
    return value


def quinv(F: Filling) -> int:
    """|Quinv(F)| - Σ_{u ∈ Des(F)} arm(up(u))."""
    F.require_partition_shape()
    lengths = _row_lengths(F)
    value = _attack_pairs(F, False) - sum(lengths[u.row - 2] - u.col for u in descents(F))
    if _cross_check and F.is_column_strict():
        other = quinv_triple_count(F)
        if other != value:
            raise StatisticMismatchError(f"quinv({F}) = {value} but the triple count is {other}")
    return value


def rowsort(F: Filling) -> Filling:
    """Sort every row ascending; a CSF becomes a semistandard tableau."""
    F.require_partition_shape()
    return Filling.from_rows([sorted(row) for row in F.rows()], F.n)


def is_semistandard(F: Filling) -> bool:
    if not F.shape.is_partition_shape() or not F.is_column_strict():
        return False
    return all(all(a <= b for a, b in zip(row, row[1:])) for row in F.rows())
