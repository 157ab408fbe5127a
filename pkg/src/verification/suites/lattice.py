"""Lattice-path readout of both bijections."""
from typing import Iterator

from src.combinatorics.bijections import psi_inv, psi_quinv
from src.combinatorics.fillings import inv, quinv, rowsort
from src.combinatorics.patterns import gt_from_ssyt
from src.lattice.ensemble import build_ensemble, declutter, extract_overlays, mark_circles
from src.models.patterns import overlay_keys
from src.models.verification import Bounds, Case
from src.verification.base import BaseSuite, FunctionCheck, IdentityCheck
from src.verification.cases import csf_cases


def _tile_counts(case: Case, data: dict) -> tuple[bool, str]:
    F = data["filling"]
    E = declutter(build_ensemble(F))
    data["ensemble"] = E
    T = gt_from_ssyt(rowsort(F))
    profile = E.tile_profile()
    for i, j in overlay_keys(F.n):
        tile = profile.get((i, j + 1))
        ii = len(tile.type_ii) if tile else 0
        one = len(tile.type_i) if tile else 0
        if (ii, one) != (T.ne(i, j), T.se(i, j)):
            return False, f"tile X_{i}{j}: #II={ii}, #I={one}; NE={T.ne(i, j)}, SE={T.se(i, j)}"
    return True, "tile counts are NE / SE"


def _readout(case: Case, data: dict) -> tuple[bool, str]:
    F, E = data["filling"], data["ensemble"]
    marking = mark_circles(E)
    if (marking.solid_total, marking.open_total) != (quinv(F), inv(F)):
        return False, f"circles {marking.solid_total}/{marking.open_total} vs quinv/inv {quinv(F)}/{inv(F)}"
    Pq, Pi = extract_overlays(E, marking)
    if Pq != psi_quinv(F) or Pi != psi_inv(F):
        return False, "extracted overlays differ from the bijections"
    return True, f"{marking.solid_total} solid, {marking.open_total} open"


class LatticeReadoutSuite(BaseSuite):
    name = "lattice-readout"

    def build_checks(self) -> list[IdentityCheck]:
        return [FunctionCheck("tile-counts", _tile_counts), FunctionCheck("readout", _readout)]

    def cases(self, bounds: Bounds) -> Iterator[Case]:
        return csf_cases(bounds)
