"""The bijections ψ_quinv, ψ_inv : CSF(λ, n) -> POP(λ, n), their inverses and Ω."""
import logging
from typing import Literal

from src.algebra.gaussian import strict_tuple_from_partition
from src.combinatorics.fillings import rowsort
from src.combinatorics.patterns import bcomp, gt_from_ssyt
from src.combinatorics.triples import cells_with_entry, zcb_table, zcount_table
from src.core.errors import OverlayError
from src.models.filling import Filling
from src.models.patterns import POP, overlay_keys
from src.models.shapes import Cell

logger = logging.getLogger(__name__)

Statistic = Literal["inv", "quinv"]
STATISTICS: tuple[Statistic, ...] = ("inv", "quinv")


def _forward(F: Filling, stat: Statistic) -> POP:
    F.require_partition_shape()
    F.require_column_strict()
    T = gt_from_ssyt(rowsort(F))
    if stat == "quinv":
        counts = zcount_table(F)
    else:
        counts = zcb_table(F)
    overlay = {}
    for i, j in overlay_keys(F.n):
        cells = cells_with_entry(i, j, F)
        if stat == "quinv":
            cells = cells[::-1]
        overlay[(i, j)] = tuple(counts[c] for c in cells)
    return POP(T, overlay)


def psi_quinv(F: Filling) -> POP:
    """Λ_ij lists zcount over the (j+1)-cells of row i, read right to left."""
    return _forward(F, "quinv")


def psi_inv(F: Filling) -> POP:
    """Λ̄_ij lists zcb over the (j+1)-cells of row i, read left to right."""
    return _forward(F, "inv")


def psi(F: Filling, stat: Statistic) -> POP:
    return psi_quinv(F) if stat == "quinv" else psi_inv(F)


# =============================================================================
# Inverse: row-by-row candidate construction
# =============================================================================


def _candidates(partial: list[list[int | None]], row: int, j: int) -> list[int]:
    """Empty columns of `row` whose cell below is absent or holds an entry > j + 1."""
    current = partial[row - 1]
    below = partial[row] if row < len(partial) else []
    found = []
    for c, value in enumerate(current, start=1):
        if value is not None:
            continue
        under = below[c - 1] if c <= len(below) else None
        if under is None or under > j + 1:
            found.append(c)
    return found


def _inverse(P: POP, stat: Statistic) -> Filling:
    shape = P.shape
    n = P.n
    partial: list[list[int | None]] = [[None] * shape.part(r) for r in range(1, shape.length + 1)]
    if shape.length == n and n > 0:
        partial[n - 1] = [n] * shape.part(n)
    for i in range(min(shape.length, n - 1), 0, -1):
        for j in range(n - 1, i - 1, -1):
            k, l = P.gt.ne(i, j), P.gt.se(i, j)
            cand = _candidates(partial, i, j)
            if len(cand) != k + l:
                raise OverlayError(
                    f"cand({i},{j}) has {len(cand)} cells but NE + SE = {k + l} for {P.to_json()}"
                )
            labelled = cand[::-1] if stat == "inv" else cand
            positions = strict_tuple_from_partition(P.lam(i, j), k, l)
            for a in positions:
                partial[i - 1][labelled[a] - 1] = j + 1
            logger.debug(
                f"Placed {k} copies of {j + 1} in row {i}",
                extra={"extra_data": {"action": "psi_inverse", "stat": stat, "i": i, "j": j, "cand": cand, "labels": list(positions)}},
            )
        partial[i - 1] = [i if v is None else v for v in partial[i - 1]]
    rows = [[v for v in row if v is not None] for row in partial]
    return Filling.from_rows(rows, n)


def psi_quinv_inverse(P: POP) -> Filling:
    """Rebuild F from (T, Λ); candidates are labelled left to right."""
    return _inverse(P, "quinv")


def psi_inv_inverse(P: POP) -> Filling:
    """Rebuild F from (T, Λ̄); candidates are labelled right to left."""
    return _inverse(P, "inv")


def psi_inverse(P: POP, stat: Statistic) -> Filling:
    return psi_quinv_inverse(P) if stat == "quinv" else psi_inv_inverse(P)


def omega(F: Filling) -> Filling:
    """Ω = ψ_inv⁻¹ ∘ bcomp ∘ ψ_inv, an involution exchanging inv and quinv."""
    return psi_inv_inverse(bcomp(psi_inv(F)))


def cell_overlay_position(F: Filling, c: Cell) -> tuple[int, int, int] | None:
    """(i, j, m) when c is the m-th (j+1)-cell of row i read left to right; None when F(c) = i."""
    value = F[c]
    if value == c.row:
        return None
    cells = cells_with_entry(c.row, value - 1, F)
    return c.row, value - 1, cells.index(c) + 1
