"""GT patterns and POPs: SSYT correspondence, q-weights, box complementation, branching."""
import itertools
import logging
from typing import Iterator

from src.algebra.gaussian import box_complement, padded_box_partitions, qbinom
from src.algebra.qpoly import QXPoly
from src.combinatorics.fillings import is_semistandard
from src.core.errors import PatternError
from src.models.filling import Filling
from src.models.patterns import GTPattern, OverlayKey, POP, overlay_keys
from src.models.shapes import Partition

logger = logging.getLogger(__name__)


def gt_from_ssyt(tableau: Filling) -> GTPattern:
    """T^j_i = number of cells in row i of the tableau with entries <= j."""
    if not is_semistandard(tableau):
        raise PatternError(f"Filling {tableau} is not a semistandard tableau")
    rows = tableau.rows()
    n = tableau.n
    return GTPattern(
        tuple(
            tuple(sum(1 for v in rows[i - 1] if v <= j) if i <= len(rows) else 0 for i in range(1, j + 1))
            for j in range(1, n + 1)
        )
    )


def ssyt_from_gt(T: GTPattern) -> Filling:
    """The semistandard tableau whose row i has T^{j}_i - T^{j-1}_i copies of j."""
    rows = []
    for i in range(1, T.n + 1):
        row: list[int] = []
        for j in range(i, T.n + 1):
            row.extend([j] * (T.value(i, j) - T.value(i, j - 1)))
        rows.append(row)
    return Filling.from_rows(rows, T.n)


def ne(T: GTPattern, i: int, j: int) -> int:
    return T.ne(i, j)


def se(T: GTPattern, i: int, j: int) -> int:
    return T.se(i, j)


def gt_x_weight(T: GTPattern) -> tuple[int, ...]:
    """x-exponents of the tableau of T: x_j appears |T^j| - |T^{j-1}| times."""
    sums = [0] + [sum(row) for row in T.rows]
    return tuple(sums[j] - sums[j - 1] for j in range(1, T.n + 1))


def wt_q(T: GTPattern) -> QXPoly:
    """Π_{1<=i<=j<n} qbinom(NE_ij, SE_ij), a polynomial in q alone."""
    result = QXPoly.constant(1)
    for i, j in overlay_keys(T.n):
        result = result * qbinom(T.ne(i, j), T.se(i, j))
    return result


def area(T: GTPattern) -> int:
    """Σ NE_ij · SE_ij."""
    return sum(T.ne(i, j) * T.se(i, j) for i, j in overlay_keys(T.n))


# =============================================================================
# Enumeration
# =============================================================================


def enumerate_gt(shape: Partition, n: int) -> Iterator[GTPattern]:
    """All GT patterns with top row λ (padded to n parts)."""
    if shape.length > n:
        return
    top = shape.padded(n)

    def descend(upper: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
        if len(upper) == 1:
            yield [upper]
            return
        ranges = [range(upper[i + 1], upper[i] + 1) for i in range(len(upper) - 1)]
        for lower in itertools.product(*ranges):
            for chain in descend(tuple(lower)):
                yield chain + [upper]

    if n == 0:
        yield GTPattern(())
        return
    for chain in descend(top):
        yield GTPattern(tuple(chain))


def enumerate_overlays(T: GTPattern) -> Iterator[dict[OverlayKey, tuple[int, ...]]]:
    """Every overlay compatible with T; Σ q^{|Λ|} over them equals wt_q(T)."""
    keys = list(overlay_keys(T.n))
    choices = [list(padded_box_partitions(T.ne(i, j), T.se(i, j))) for i, j in keys]
    for combination in itertools.product(*choices):
        yield dict(zip(keys, combination))


def enumerate_pop(shape: Partition, n: int) -> Iterator[POP]:
    for T in enumerate_gt(shape, n):
        for overlay in enumerate_overlays(T):
            yield POP(T, overlay)


# =============================================================================
# Maps on POPs
# =============================================================================


def bcomp(P: POP) -> POP:
    """Complement every overlay in its NE x SE box."""
    return POP(P.gt, {(i, j): box_complement(parts, P.gt.se(i, j)) for (i, j), parts in P.overlay.items()})


def pr(P: POP) -> GTPattern:
    """Projection to the underlying GT pattern."""
    return P.gt


def br(P: POP) -> POP:
    """Delete the bottom row of the pattern and the overlays with j = n-1."""
    if P.n < 2:
        raise PatternError(f"br needs a POP with n >= 2, got n={P.n}")
    return POP(P.gt.truncate(), {(i, j): parts for (i, j), parts in P.overlay.items() if j < P.n - 1})
