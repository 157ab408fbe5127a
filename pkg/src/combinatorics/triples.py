"""quinv-triples, reflected inv-triples and the cellwise counts zcount / zcb.

All functions accept column strict fillings of any column composition. A
triple (x, y, z) has y directly below x and z in the row of x, with
F(x) < F(z) < F(y); y may be the augmented cell just below the bottom of a
column, whose value is the sentinel n + 1.
"""
from typing import Iterator, Literal

from src.core.errors import CellOutOfShapeError, IndexRangeError
from src.models.filling import Filling
from src.models.shapes import Cell

Triple = tuple[Cell, Cell, Cell]
Side = Literal["right", "left"]


def _below_value(F: Filling, row: int, col: int) -> int:
    column = F.columns[col - 1]
    return column[row] if len(column) > row else F.n + 1


def _iter_triples(F: Filling, side: Side, anchor: Cell | None = None) -> Iterator[Triple]:
    F.require_column_strict()
    rows = range(1, F.shape.num_rows + 1) if anchor is None else (anchor.row,)
    for r in rows:
        row = [c.col for c in F.row_cells(r)]
        for a in row:
            fx = F.columns[a - 1][r - 1]
            fy = _below_value(F, r, a)
            if fy - fx < 2:
                continue
            for b in row:
                if (side == "right" and b <= a) or (side == "left" and b >= a):
                    continue
                if anchor is not None and b != anchor.col:
                    continue
                fz = F.columns[b - 1][r - 1]
                if fx < fz < fy:
                    yield Cell(r, a), Cell(r + 1, a), Cell(r, b)


def quinv_triples(F: Filling) -> set[Triple]:
    """Triples (x, down(x), z) with z strictly right of x and F(x) < F(z) < F(down(x))."""
    return set(_iter_triples(F, "right"))


def refinv_triples(F: Filling) -> set[Triple]:
    """Reflected inv-triples: as quinv-triples but with z strictly left of x."""
    return set(_iter_triples(F, "left"))


def quinv_triple_count(F: Filling) -> int:
    return sum(1 for _ in _iter_triples(F, "right"))


def refinv(F: Filling) -> int:
    """Number of reflected inv-triples; equals inv(F) on partition shapes."""
    return sum(1 for _ in _iter_triples(F, "left"))


def _require_cell(c: Cell, F: Filling) -> None:
    if c not in F:
        raise CellOutOfShapeError(f"Cell ({c.row}, {c.col}) is not in the filling's diagram")


def zcount(c: Cell, F: Filling) -> int:
    """Number of quinv-triples whose third cell is c."""
    _require_cell(c, F)
    return sum(1 for _ in _iter_triples(F, "right", anchor=c))


def zcb(c: Cell, F: Filling) -> int:
    """Number of reflected inv-triples whose third cell is c."""
    _require_cell(c, F)
    return sum(1 for _ in _iter_triples(F, "left", anchor=c))


def zcount_table(F: Filling) -> dict[Cell, int]:
    """zcount for every cell of F (zero entries included)."""
    table = {c: 0 for c in F.cells()}
    for _, _, z in _iter_triples(F, "right"):
        table[z] += 1
    return table


def zcb_table(F: Filling) -> dict[Cell, int]:
    """zcb for every cell of F (zero entries included)."""
    table = {c: 0 for c in F.cells()}
    for _, _, z in _iter_triples(F, "left"):
        table[z] += 1
    return table


def cells_with_entry(i: int, j: int, F: Filling) -> list[Cell]:
    """cells(i, j, F): cells of row i holding the entry j + 1, left to right."""
    if not 1 <= i <= j + 1 <= F.n:
        raise IndexRangeError(f"cells_with_entry needs 1 <= i <= j+1 <= n, got i={i}, j={j}, n={F.n}")
    return [c for c in F.row_cells(i) if F.columns[c.col - 1][i - 1] == j + 1]
