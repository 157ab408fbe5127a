"""Tests for quinv-triples, reflected inv-triples, zcount and zcb."""
import pytest


def _small():
    from src.models.filling import Filling

    return Filling.from_rows([[1, 2, 1, 2], [3, 4]], n=4)


def _grid(table, F):
    return [[table[c] for c in F.row_cells(r)] for r in range(1, F.shape.num_rows + 1)]


def test_zcount_table_small_example():
    from src.combinatorics.triples import zcount_table

    F = _small()
    assert _grid(zcount_table(F), F) == [[0, 1, 0, 2], [0, 1]]


def test_zcb_table_small_example():
    from src.combinatorics.triples import zcb_table

    F = _small()
    assert _grid(zcb_table(F), F) == [[0, 1, 0, 0], [0, 0]]


def test_triple_counts_match_statistics():
    from src.combinatorics.fillings import inv, quinv
    from src.combinatorics.triples import quinv_triple_count, refinv

    F = _small()
    assert quinv_triple_count(F) == quinv(F) == 4
    assert refinv(F) == inv(F) == 1


def test_quinv_triples_use_sentinel_below_column():
    from src.combinatorics.triples import quinv_triples
    from src.models.shapes import Cell

    # x = (1,3) has no cell below, so n + 1 = 5 bounds the triple
    triples = quinv_triples(_small())
    assert (Cell(1, 3), Cell(2, 3), Cell(1, 4)) in triples
    assert len(triples) == 4


def test_zcount_single_cell():
    from src.combinatorics.triples import zcb, zcount
    from src.models.shapes import Cell

    F = _small()
    assert zcount(Cell(1, 4), F) == 2
    assert zcb(Cell(1, 2), F) == 1


def test_zcount_cell_outside_shape():
    from src.combinatorics.triples import zcount
    from src.core.errors import CellOutOfShapeError
    from src.models.shapes import Cell

    with pytest.raises(CellOutOfShapeError):
        zcount(Cell(3, 1), _small())


def test_triples_need_column_strict_filling():
    from src.combinatorics.triples import quinv_triples
    from src.core.errors import ColumnStrictnessError
    from src.models.filling import Filling

    with pytest.raises(ColumnStrictnessError):
        quinv_triples(Filling.from_rows([[2], [1]], n=2))


def test_cells_with_entry():
    from src.combinatorics.triples import cells_with_entry
    from src.models.shapes import Cell

    F = _small()
    assert cells_with_entry(1, 1, F) == [Cell(1, 2), Cell(1, 4)]
    assert cells_with_entry(2, 3, F) == [Cell(2, 2)]
    assert cells_with_entry(1, 2, F) == []


def test_cells_with_entry_index_range():
    from src.combinatorics.triples import cells_with_entry
    from src.core.errors import IndexRangeError

    with pytest.raises(IndexRangeError):
        cells_with_entry(3, 1, _small())
    with pytest.raises(IndexRangeError):
        cells_with_entry(1, 4, _small())


def test_triples_on_column_composition():
    from src.combinatorics.triples import quinv_triple_count
    from src.models.filling import Filling

    # columns of lengths 1, 2: only x = (1,1) can open a triple
    F = Filling.from_columns([(1,), (2, 3)], n=3)
    assert quinv_triple_count(F) == 1
