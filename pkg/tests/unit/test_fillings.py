"""Tests for fillings, their enumeration and the inv / quinv / maj statistics."""
import pytest
from hypothesis import given

from tests.generators import csfs

RUNNING_ROWS = [[1, 1, 2, 1, 2, 1, 2, 4, 4, 3], [2, 2, 3, 3, 3, 4], [3, 3, 4, 4]]


def test_filling_from_rows_and_columns_agree():
    from src.models.filling import Filling

    by_rows = Filling.from_rows([[1, 2, 1], [3, 4]], n=4)
    by_columns = Filling.from_columns([(1, 3), (2, 4), (1,)], n=4)
    assert by_rows == by_columns
    assert by_rows.rows() == [(1, 2, 1), (3, 4)]
    assert by_rows.size == 5


def test_filling_rejects_out_of_range_entries():
    from src.core.errors import ShapeError
    from src.models.filling import Filling

    with pytest.raises(ShapeError, match=r"\[1, 2\]"):
        Filling.from_rows([[1, 3]], n=2)


def test_from_rows_rejects_non_partition_rows():
    from src.core.errors import ShapeError
    from src.models.filling import Filling

    with pytest.raises(ShapeError, match="weakly decreasing"):
        Filling.from_rows([[1], [2, 3]], n=3)


def test_filling_json():
    from src.core.errors import InputFormatError
    from src.models.filling import Filling

    F = Filling.from_rows([[1, 2], [3]], n=3)
    assert F.to_json() == {"n": 3, "rows": [[1, 2], [3]]}
    assert Filling.from_json(F.to_json()) == F
    G = Filling.from_columns([(1,), (1, 2)], n=2)
    assert G.to_json() == {"n": 2, "columns": [[1], [1, 2]]}
    with pytest.raises(InputFormatError):
        Filling.from_json({"rows": [[1]]})
    with pytest.raises(InputFormatError):
        Filling.from_json({"n": 2, "rows": [[5]]})


def test_column_strictness():
    from src.core.errors import ColumnStrictnessError
    from src.models.filling import Filling

    assert Filling.from_rows([[1, 1], [2]], n=2).is_column_strict()
    bad = Filling.from_rows([[2], [1]], n=2)
    assert not bad.is_column_strict()
    with pytest.raises(ColumnStrictnessError):
        bad.require_column_strict()


def test_enumerate_csf_counts():
    from math import comb

    from src.combinatorics.fillings import enumerate_csf
    from src.models.shapes import Partition

    for parts, n in [((2, 1), 3), ((1, 1), 3), ((3, 2), 4), ((2, 2, 1), 3)]:
        shape = Partition(parts)
        expected = 1
        for h in shape.conjugate().parts:
            expected *= comb(n, h)
        found = list(enumerate_csf(shape, n))
        assert len(found) == expected
        assert len(set(found)) == expected
        assert all(F.is_column_strict() for F in found)


def test_enumerate_csf_too_tall_is_empty():
    from src.combinatorics.fillings import enumerate_csf
    from src.models.shapes import Partition

    assert list(enumerate_csf(Partition((1, 1, 1)), 2)) == []
    assert len(list(enumerate_csf(Partition(()), 3))) == 1


def test_enumerate_fillings_count():
    from src.combinatorics.fillings import enumerate_fillings
    from src.models.shapes import Partition

    assert len(list(enumerate_fillings(Partition((2, 1)), 2))) == 8


def test_enumerate_composition_csf():
    from src.combinatorics.fillings import enumerate_composition_csf
    from src.models.shapes import ColumnComposition

    found = list(enumerate_composition_csf(ColumnComposition((1, 2)), 3))
    assert len(found) == 9
    assert all(F.shape.column_lengths == (1, 2) for F in found)


def test_x_weight():
    from src.algebra.qpoly import QXPoly
    from src.combinatorics.fillings import x_exponents, x_weight
    from src.models.filling import Filling

    F = Filling.from_rows([[1, 2, 1], [3]], n=3)
    assert x_exponents(F) == (2, 1, 1)
    assert x_weight(F) == QXPoly.monomial(3, x=(2, 1, 1))


def test_row_statistics():
    from src.combinatorics.fillings import inv, quinv
    from src.models.filling import Filling

    F = Filling.from_rows([[2, 1]], n=2)
    assert inv(F) == 1
    assert quinv(F) == 0
    G = Filling.from_rows([[1, 2]], n=2)
    assert inv(G) == 0
    assert quinv(G) == 1


def test_small_filling_statistics():
    from src.combinatorics.fillings import inv, quinv
    from src.combinatorics.triples import zcb_table, zcount_table
    from src.models.filling import Filling
    from src.models.shapes import Cell

    F = Filling.from_rows([[1, 2, 1, 2], [3, 4]], n=4)
    assert quinv(F) == 4
    assert inv(F) == 1
    zc = zcount_table(F)
    assert [zc[Cell(1, c)] for c in range(1, 5)] == [0, 1, 0, 2]
    assert [zc[Cell(2, c)] for c in range(1, 3)] == [0, 1]
    zb = zcb_table(F)
    assert [zb[Cell(1, c)] for c in range(1, 5)] == [0, 1, 0, 0]
    assert sum(zb.values()) == 1


def test_running_example_statistics():
    from src.combinatorics.fillings import inv, quinv, rowsort
    from src.models.filling import Filling

    F = Filling.from_rows(RUNNING_ROWS, n=4)
    assert quinv(F) == 12
    assert inv(F) == 5
    assert rowsort(F).rows() == [
        (1, 1, 1, 1, 2, 2, 2, 3, 4, 4),
        (2, 2, 3, 3, 3, 4),
        (3, 3, 4, 4),
    ]


def test_cross_check_agrees_on_running_example():
    from src.combinatorics.fillings import cross_check_enabled, inv, quinv, set_cross_check
    from src.models.filling import Filling

    F = Filling.from_rows(RUNNING_ROWS, n=4)
    set_cross_check(True)
    try:
        assert cross_check_enabled()
        assert (inv(F), quinv(F)) == (5, 12)
    finally:
        set_cross_check(False)


def test_maj_on_columns():
    from src.combinatorics.fillings import descents, maj
    from src.models.filling import Filling
    from src.models.shapes import Cell

    F = Filling.from_rows([[1], [2]], n=2)
    assert descents(F) == {Cell(2, 1)}
    assert maj(F) == 1
    assert maj(Filling.from_rows([[1, 1], [2, 2], [3]], n=3)) == 3 + 1


def test_statistics_need_partition_shape():
    from src.combinatorics.fillings import inv
    from src.core.errors import ShapeError
    from src.models.filling import Filling

    with pytest.raises(ShapeError, match="partition shape"):
        inv(Filling.from_columns([(1,), (1, 2)], n=2))


def test_rowsort_gives_semistandard():
    from src.combinatorics.fillings import enumerate_csf, is_semistandard, rowsort
    from src.models.shapes import Partition

    for F in enumerate_csf(Partition((3, 2)), 3):
        assert is_semistandard(rowsort(F))


@given(csfs())
def test_triple_counts_match_statistics(F):
    from src.combinatorics.fillings import inv, quinv
    from src.combinatorics.triples import quinv_triple_count, refinv

    assert refinv(F) == inv(F)
    assert quinv_triple_count(F) == quinv(F)
