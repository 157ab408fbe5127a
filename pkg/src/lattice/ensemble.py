"""Build, declutter and read out the lattice-path ensemble of a CSF.

Tile X_ij sits in grid column i, row j + 1. Its type-II strands are the
filling columns with j + 1 in row i, its type-I strands those whose row-i
entry is below j + 1 and whose next entry is above it. Both overlays are
read off the (type-I, type-II) pairs of each tile.
"""
import logging

from src.core.errors import PatternError
from src.models.ensemble import CircleMarking, LatticeEnsemble, Occupancy, Strand, TileType
from src.models.filling import Filling
from src.models.patterns import GTPattern, POP, overlay_keys

logger = logging.getLogger(__name__)


def _strand(c: int, entries: tuple[int, ...], n: int) -> Strand:
    occupancies: list[Occupancy] = []
    k = len(entries)
    for t, value in enumerate(entries, start=1):
        occupancies.append(Occupancy(t, value, TileType.II))
        stop = entries[t] if t < k else n + 1
        for r in range(value + 1, stop):
            occupancies.append(Occupancy(t, r, TileType.I))
        if t < k:
            occupancies.append(Occupancy(t, stop, TileType.III))
    return Strand(c, entries, tuple(occupancies))


def build_ensemble(F: Filling) -> LatticeEnsemble:
    """One strand per filling column, on an n x n grid."""
    F.require_partition_shape()
    F.require_column_strict()
    strands = tuple(_strand(c, column, F.n) for c, column in enumerate(F.columns, start=1))
    return LatticeEnsemble(F.n, strands)


def declutter(E: LatticeEnsemble) -> LatticeEnsemble:
    """Remove every type-III segment."""
    strands = tuple(
        Strand(s.filling_column, s.entries, tuple(o for o in s.occupancies if o.tile_type is not TileType.III))
        for s in E.strands
    )
    return E.with_strands(strands, decluttered=True)


def mark_circles(E: LatticeEnsemble) -> CircleMarking:
    if not E.decluttered:
        raise PatternError("mark_circles needs a decluttered ensemble")
    solid: dict = {}
    open_: dict = {}
    for key, profile in E.tile_profile().items():
        pairs = [(x, z) for x in profile.type_i for z in profile.type_ii]
        solid[key] = frozenset(p for p in pairs if p[0] < p[1])
        open_[key] = frozenset(p for p in pairs if p[0] > p[1])
    marking = CircleMarking(solid, open_)
    logger.debug(
        f"Marked {marking.solid_total} solid and {marking.open_total} open circles",
        extra={"extra_data": {"action": "mark_circles", "solid": marking.solid_total, "open": marking.open_total}},
    )
    return marking


def gt_from_ensemble(E: LatticeEnsemble) -> GTPattern:
    """T^j_i = number of type-II strands in grid column i at rows <= j."""
    profile = E.tile_profile()
    counts = {key: len(p.type_ii) for key, p in profile.items()}
    return GTPattern(
        tuple(
            tuple(sum(counts.get((i, r), 0) for r in range(1, j + 1)) for i in range(1, j + 1))
            for j in range(1, E.n + 1)
        )
    )


def extract_overlays(E: LatticeEnsemble, marking: CircleMarking | None = None) -> tuple[POP, POP]:
    """(ψ_quinv(F), ψ_inv(F)) read from circle data alone.

    Λ_ij lists solid circles per type-II strand, rightmost strand first;
    Λ̄_ij lists open circles per type-II strand, leftmost first.
    """
    marking = marking if marking is not None else mark_circles(E)
    T = gt_from_ensemble(E)
    profile = E.tile_profile()
    quinv_overlay = {}
    inv_overlay = {}
    for i, j in overlay_keys(E.n):
        key = (i, j + 1)
        carriers = profile[key].type_ii if key in profile else ()
        solid = marking.solid.get(key, frozenset())
        open_ = marking.open.get(key, frozenset())
        quinv_overlay[(i, j)] = tuple(sum(1 for _, z in solid if z == c) for c in reversed(carriers))
        inv_overlay[(i, j)] = tuple(sum(1 for _, z in open_ if z == c) for c in carriers)
    return POP(T, quinv_overlay), POP(T, inv_overlay)


def readout(F: Filling) -> tuple[POP, POP]:
    """build -> declutter -> mark -> extract."""
    E = declutter(build_ensemble(F))
    return extract_overlays(E, mark_circles(E))
