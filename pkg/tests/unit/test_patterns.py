"""Tests for GT patterns, POPs and the maps between them."""
import pytest

RUNNING_GT = ((4,), (7, 2), (8, 5, 2), (10, 6, 4, 0))
RUNNING_OVERLAY = {
    (1, 1): (2, 1, 0),
    (1, 2): (2,),
    (1, 3): (1, 1),
    (2, 2): (0, 0, 0),
    (2, 3): (1,),
    (3, 3): (2, 2),
}


def _running_ssyt():
    from src.models.filling import Filling

    return Filling.from_rows(
        [[1, 1, 1, 1, 2, 2, 2, 3, 4, 4], [2, 2, 3, 3, 3, 4], [3, 3, 4, 4]], n=4
    )


def test_gt_from_ssyt_running_example():
    from src.combinatorics.patterns import gt_from_ssyt, gt_x_weight

    T = gt_from_ssyt(_running_ssyt())
    assert T.rows == RUNNING_GT
    assert T.shape.parts == (10, 6, 4)
    assert gt_x_weight(T) == (4, 5, 6, 5)


def test_ssyt_gt_round_trip():
    from src.combinatorics.patterns import enumerate_gt, gt_from_ssyt, ssyt_from_gt
    from src.models.shapes import Partition

    S = _running_ssyt()
    assert ssyt_from_gt(gt_from_ssyt(S)) == S
    for T in enumerate_gt(Partition((2, 1)), 3):
        assert gt_from_ssyt(ssyt_from_gt(T)) == T


def test_gt_from_ssyt_rejects_non_semistandard():
    from src.combinatorics.patterns import gt_from_ssyt
    from src.core.errors import PatternError
    from src.models.filling import Filling

    with pytest.raises(PatternError, match="semistandard"):
        gt_from_ssyt(Filling.from_rows([[2, 1]], n=2))


def test_ne_se_and_area():
    from src.combinatorics.patterns import area, ne, se
    from src.models.patterns import GTPattern

    T = GTPattern(RUNNING_GT)
    assert (ne(T, 1, 1), se(T, 1, 1)) == (3, 2)
    assert (ne(T, 2, 2), se(T, 2, 2)) == (3, 0)
    assert (ne(T, 3, 3), se(T, 3, 3)) == (2, 2)
    assert area(T) == 17


def test_ne_index_range():
    from src.core.errors import IndexRangeError
    from src.models.patterns import GTPattern

    T = GTPattern(((1,), (1, 0)))
    with pytest.raises(IndexRangeError):
        T.ne(1, 2)


def test_gt_pattern_validation():
    from src.core.errors import PatternError
    from src.models.patterns import GTPattern

    with pytest.raises(PatternError, match="interlace"):
        GTPattern(((3,), (2, 1)))
    with pytest.raises(PatternError, match="entries"):
        GTPattern(((1, 0),))


def test_wt_q():
    from src.algebra.gaussian import qbinom
    from src.combinatorics.patterns import wt_q
    from src.models.patterns import GTPattern

    T = GTPattern(((1,), (2, 0)))
    assert wt_q(T) == qbinom(1, 1)
    assert wt_q(GTPattern(((2,), (2, 0)))) == 1


def test_enumerate_gt_counts_ssyt():
    from src.combinatorics.patterns import enumerate_gt
    from src.models.shapes import Partition

    assert len(list(enumerate_gt(Partition((2, 1)), 3))) == 8
    assert len(list(enumerate_gt(Partition((1, 1, 1)), 2))) == 0


def test_enumerate_pop_matches_csf_count():
    from src.combinatorics.fillings import enumerate_csf
    from src.combinatorics.patterns import enumerate_pop
    from src.models.shapes import Partition

    for parts, n in [((2,), 2), ((2, 1), 3), ((2, 2), 3)]:
        shape = Partition(parts)
        assert len(list(enumerate_pop(shape, n))) == len(list(enumerate_csf(shape, n)))


def test_pop_validation():
    from src.core.errors import OverlayError
    from src.models.patterns import GTPattern, POP

    T = GTPattern(RUNNING_GT)
    missing = dict(RUNNING_OVERLAY)
    del missing[(2, 3)]
    with pytest.raises(OverlayError, match="missing"):
        POP(T, missing)
    wrong_length = {**RUNNING_OVERLAY, (1, 1): (2, 1)}
    with pytest.raises(OverlayError, match="exactly NE=3"):
        POP(T, wrong_length)
    too_wide = {**RUNNING_OVERLAY, (1, 2): (3,)}
    with pytest.raises(OverlayError, match="box"):
        POP(T, too_wide)


def test_pop_json_and_weight():
    from src.models.patterns import GTPattern, POP

    P = POP(GTPattern(RUNNING_GT), RUNNING_OVERLAY)
    assert P.weight == 12
    assert POP.from_json(P.to_json()) == P
    assert P.to_json()["overlay"]["1,1"] == [2, 1, 0]


def test_bcomp_and_br():
    from src.combinatorics.patterns import bcomp, br, pr
    from src.models.patterns import GTPattern, POP

    P = POP(GTPattern(RUNNING_GT), RUNNING_OVERLAY)
    Q = bcomp(P)
    assert Q.weight == 5
    assert Q.lam(3, 3) == (0, 0)
    assert bcomp(Q) == P
    assert pr(Q) == P.gt
    B = br(P)
    assert B.n == 3
    assert set(B.overlay) == {(1, 1), (1, 2), (2, 2)}
    assert B.gt.rows == RUNNING_GT[:3]
