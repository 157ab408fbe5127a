"""Tests for q-Whittaker, Schur and modified Macdonald expansions."""
import pytest

SHAPES = [((2,), 2), ((2, 1), 3), ((2, 2), 3), ((3, 1), 3), ((2, 1, 1), 4)]


def test_two_row_example():
    from src.characters.whittaker import METHODS, whittaker
    from src.models.shapes import Partition

    for method in METHODS:
        W = whittaker(Partition((2,)), 2, method)
        assert W.format_text() == "x1^2 + (1+q) x1 x2 + x2^2"


@pytest.mark.parametrize("parts,n", SHAPES)
def test_expansions_agree(parts, n):
    from src.characters.whittaker import whittaker
    from src.models.shapes import Partition

    shape = Partition(parts)
    fermionic = whittaker(shape, n, "fermionic")
    assert whittaker(shape, n, "inv") == fermionic
    assert whittaker(shape, n, "quinv") == fermionic


@pytest.mark.parametrize("parts,n", SHAPES)
def test_specializations(parts, n):
    from src.characters.whittaker import e_lambda_prime, is_symmetric, schur, specialize_q_one, whittaker
    from src.models.shapes import Partition

    shape = Partition(parts)
    W = whittaker(shape, n)
    assert specialize_q_one(W) == e_lambda_prime(shape, n)
    assert W.substitute_q_zero() == schur(shape, n)
    assert is_symmetric(W)


@pytest.mark.parametrize("parts,n", SHAPES)
def test_branching(parts, n):
    from src.characters.whittaker import branching_check
    from src.models.shapes import Partition

    assert branching_check(Partition(parts), n)


def test_too_many_rows_gives_zero():
    from src.characters.whittaker import whittaker
    from src.models.shapes import Partition

    assert whittaker(Partition((1, 1, 1)), 2).is_zero()
    assert whittaker(Partition((1, 1, 1)), 2, "inv").is_zero()


def test_unknown_method():
    from src.characters.whittaker import whittaker
    from src.core.errors import QWhittakerError
    from src.models.shapes import Partition

    with pytest.raises(QWhittakerError, match="Unknown expansion method"):
        whittaker(Partition((1,)), 1, "hall")


def test_schur_and_elementary():
    from src.algebra.qpoly import QXPoly
    from src.characters.whittaker import elementary_symmetric, schur
    from src.models.shapes import Partition

    assert schur(Partition((1,)), 2) == QXPoly.monomial(2, x=(1, 0)) + QXPoly.monomial(2, x=(0, 1))
    assert elementary_symmetric(2, 3) == schur(Partition((1, 1)), 3)
    assert elementary_symmetric(0, 3) == 1


def test_modified_macdonald_variants_and_top_coefficient():
    from src.characters.whittaker import modified_macdonald, whittaker
    from src.combinatorics.shapes import n_stat
    from src.models.shapes import Partition

    shape, n = Partition((2, 1)), 3
    H = modified_macdonald(shape, n, "quinv")
    assert H == modified_macdonald(shape, n, "inv")
    top = n_stat(shape)
    assert H.t_degree() == top
    assert H.coefficient_of_t(top) == whittaker(shape, n)
