"""CSF-native Chari-Loktev bases b_inv and b_quinv."""
from src.combinatorics.bijections import Statistic, cell_overlay_position
from src.combinatorics.triples import zcb_table, zcount_table
from src.models.clword import CLAtom, CLWord
from src.models.filling import Filling
from src.models.patterns import POP


def cl_monomial(P: POP) -> CLWord:
    """Π_j Π_i Π_m (E_{j+1,i} ⊗ t^{Λ_ij(m)}), zero parts included."""
    return CLWord.of(CLAtom(j + 1, i, part) for (i, j), parts in P.overlay.items() for part in parts)


def b_stat(F: Filling, stat: Statistic) -> CLWord:
    """E_{F(c), row(c)} ⊗ t^{zcount(c)} (quinv) or t^{zcb(c)} (inv) over cells with F(c) > row(c)."""
    F.require_partition_shape()
    counts = zcount_table(F) if stat == "quinv" else zcb_table(F)
    return CLWord.of(CLAtom(F[c], c.row, counts[c]) for c in F.cells() if F[c] != c.row)


def b_inv(F: Filling) -> CLWord:
    return b_stat(F, "inv")


def b_quinv(F: Filling) -> CLWord:
    return b_stat(F, "quinv")


def fiber_profile(F: Filling) -> dict[tuple[int, int, int], int]:
    """zcount + zcb per cell, keyed by (i, j, m): the m-th (j+1)-cell of row i.

    Constant on rowsort fibres, where it equals SE_ij of the common pattern.
    """
    F.require_partition_shape()
    zc, zb = zcount_table(F), zcb_table(F)
    profile = {}
    for c in F.cells():
        position = cell_overlay_position(F, c)
        if position is not None:
            profile[position] = zc[c] + zb[c]
    return profile
