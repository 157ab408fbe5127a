"""Tests for the lattice-path ensemble and circle readout."""
import pytest
from hypothesis import given, settings

from tests.generators import csfs


def _small():
    from src.models.filling import Filling

    return Filling.from_rows([[1, 2, 1, 2], [3, 4]], n=4)


def test_build_ensemble_strands():
    from src.lattice.ensemble import build_ensemble
    from src.models.ensemble import Occupancy, TileType

    E = build_ensemble(_small())
    assert E.n == 4
    assert E.num_strands == 4
    first = E.strands[0]
    assert first.entries == (1, 3)
    assert first.occupancies == (
        Occupancy(1, 1, TileType.II),
        Occupancy(1, 2, TileType.I),
        Occupancy(1, 3, TileType.III),
        Occupancy(2, 3, TileType.II),
        Occupancy(2, 4, TileType.I),
    )


def test_declutter_removes_type_iii():
    from src.lattice.ensemble import build_ensemble, declutter
    from src.models.ensemble import TileType

    E = declutter(build_ensemble(_small()))
    assert E.decluttered
    assert all(o.tile_type is not TileType.III for s in E.strands for o in s.occupancies)


def test_tile_profile():
    from src.lattice.ensemble import build_ensemble, declutter

    profile = declutter(build_ensemble(_small())).tile_profile()
    assert profile[(1, 2)].type_ii == (2, 4)
    assert profile[(1, 2)].type_i == (1, 3)
    assert profile[(2, 4)].type_ii == (2,)
    assert profile[(2, 4)].type_i == (1,)


def test_circles_small_example():
    from src.lattice.ensemble import build_ensemble, declutter, mark_circles

    marking = mark_circles(declutter(build_ensemble(_small())))
    assert marking.solid[(1, 2)] == frozenset({(1, 2), (1, 4), (3, 4)})
    assert marking.open[(1, 2)] == frozenset({(3, 2)})
    assert (marking.solid_total, marking.open_total) == (4, 1)


def test_circles_running_example():
    from src.lattice.ensemble import build_ensemble, declutter, mark_circles
    from src.verification.suites.worked_examples import RUNNING_FILLING

    marking = mark_circles(declutter(build_ensemble(RUNNING_FILLING)))
    assert (marking.solid_total, marking.open_total) == (12, 5)


def test_mark_circles_needs_decluttered_ensemble():
    from src.core.errors import PatternError
    from src.lattice.ensemble import build_ensemble, mark_circles

    with pytest.raises(PatternError, match="decluttered"):
        mark_circles(build_ensemble(_small()))


def test_build_ensemble_needs_csf():
    from src.core.errors import ColumnStrictnessError
    from src.lattice.ensemble import build_ensemble
    from src.models.filling import Filling

    with pytest.raises(ColumnStrictnessError):
        build_ensemble(Filling.from_rows([[2], [1]], n=2))


def test_readout_running_example():
    from src.combinatorics.bijections import psi_inv
    from src.lattice.ensemble import readout
    from src.verification.suites.worked_examples import RUNNING_FILLING, RUNNING_POP

    quinv_pop, inv_pop = readout(RUNNING_FILLING)
    assert quinv_pop == RUNNING_POP
    assert inv_pop == psi_inv(RUNNING_FILLING)


def test_single_column_strand():
    from src.combinatorics.bijections import psi_inv, psi_quinv
    from src.lattice.ensemble import build_ensemble, declutter, mark_circles, readout
    from src.models.ensemble import Occupancy, TileType
    from src.models.filling import Filling

    F = Filling.from_columns([(1, 3, 4)], n=4)

    (strand,) = build_ensemble(F).strands
    assert strand.occupancies == (
        Occupancy(1, 1, TileType.II),
        Occupancy(1, 2, TileType.I),
        Occupancy(1, 3, TileType.III),
        Occupancy(2, 3, TileType.II),
        Occupancy(2, 4, TileType.III),
        Occupancy(3, 4, TileType.II),
    )
    assert sum(o.tile_type is TileType.II for o in strand.occupancies) == 3

    E = declutter(build_ensemble(F))
    marking = mark_circles(E)
    assert marking.solid_total == marking.open_total == 0

    quinv_pop, inv_pop = readout(F)
    assert quinv_pop.gt.rows == ((1,), (1, 0), (1, 1, 0), (1, 1, 1, 0))
    assert quinv_pop == inv_pop
    assert all(part == 0 for parts in quinv_pop.overlay.values() for part in parts)
    assert (quinv_pop, inv_pop) == (psi_quinv(F), psi_inv(F))


@settings(max_examples=50, deadline=None)
@given(csfs(max_cells=6, max_n=4))
def test_readout_matches_bijections(F):
    from src.combinatorics.bijections import psi_inv, psi_quinv
    from src.combinatorics.fillings import inv, quinv, rowsort
    from src.combinatorics.patterns import gt_from_ssyt
    from src.lattice.ensemble import build_ensemble, declutter, gt_from_ensemble, mark_circles, readout

    E = declutter(build_ensemble(F))
    assert gt_from_ensemble(E) == gt_from_ssyt(rowsort(F))
    marking = mark_circles(E)
    assert (marking.solid_total, marking.open_total) == (quinv(F), inv(F))
    assert readout(F) == (psi_quinv(F), psi_inv(F))


def test_ensemble_json():
    from src.lattice.ensemble import build_ensemble

    payload = build_ensemble(_small()).to_json()
    assert payload["n"] == 4
    assert payload["decluttered"] is False
    assert payload["strands"][2] == {"column": 3, "entries": [1], "tiles": [[1, 1, "II"], [1, 2, "I"], [1, 3, "I"], [1, 4, "I"]]}
