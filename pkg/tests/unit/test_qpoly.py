"""Tests for exact Laurent polynomial arithmetic."""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st


def _polys(n: int = 2):
    from src.algebra.qpoly import QXPoly

    key = st.tuples(*[st.integers(min_value=-2, max_value=3) for _ in range(n + 1)])
    return st.dictionaries(key, st.integers(min_value=-5, max_value=5), max_size=5).map(
        lambda terms: QXPoly(terms, n)
    )


def test_zero_terms_are_dropped():
    from src.algebra.qpoly import QXPoly

    p = QXPoly({(0, 1, 0): 3, (1, 0, 1): 0}, 2)
    assert len(p) == 1
    assert (p - p).is_zero()
    assert not QXPoly.zero(2)


def test_key_width_is_checked():
    from src.algebra.qpoly import QXPoly
    from src.core.errors import VariableCountError

    with pytest.raises(VariableCountError, match="expected 3"):
        QXPoly({(0, 1): 1}, 2)


def test_scalars_combine_with_any_variable_count():
    from src.algebra.qpoly import QXPoly

    x1 = QXPoly.monomial(2, x=(1, 0))
    one_plus_q = QXPoly.from_q_coefficients([1, 1])
    product = one_plus_q * x1
    assert product.n == 2
    assert product.coeff_of(1, (1, 0)) == 1
    assert product.coeff_of(0, (1, 0)) == 1
    assert x1 + 1 == QXPoly({(0, 1, 0): 1, (0, 0, 0): 1}, 2)


def test_different_variable_counts_do_not_mix():
    from src.algebra.qpoly import QXPoly
    from src.core.errors import VariableCountError

    with pytest.raises(VariableCountError):
        QXPoly.monomial(2, x=(1, 0)) + QXPoly.monomial(3, x=(1, 0, 0))
    assert QXPoly.monomial(2, x=(1, 0)) != QXPoly.monomial(3, x=(1, 0, 0))


def test_power():
    from src.algebra.qpoly import QXPoly

    one_plus_q = QXPoly.from_q_coefficients([1, 1])
    assert (one_plus_q ** 3).q_coefficients() == [1, 3, 3, 1]
    assert (one_plus_q ** 0) == 1


def test_substitutions():
    from src.algebra.qpoly import QXPoly

    p = QXPoly({(2, 1, 0): 1, (0, 0, 1): 4}, 2)
    assert p.invert_q().coeff_of(-2, (1, 0)) == 1
    assert p.shift_q(3).coeff_of(5, (1, 0)) == 1
    assert p.truncate_q(1) == QXPoly({(0, 0, 1): 4}, 2)
    assert p.substitute_q_zero() == QXPoly({(0, 0, 1): 4}, 2)
    assert p.times_x_power(-1).coeff_of(2, (0, -1)) == 1
    assert p.swap_variables(1, 2).coeff_of(2, (0, 1)) == 1
    assert p.extend_variables(3).coeff_of(0, (0, 1, 0)) == 4


def test_negative_powers_raise_negative_power_error():
    from src.algebra.qpoly import QXPoly
    from src.core.errors import NegativePowerError

    with pytest.raises(NegativePowerError, match="q -> 0"):
        QXPoly({(-1, 0): 1}, 1).substitute_q_zero()
    with pytest.raises(NegativePowerError, match="Negative powers"):
        QXPoly.q_power(1) ** -1
    with pytest.raises(NegativePowerError, match="non-negative q-powers"):
        QXPoly.q_power(-2).q_coefficients()


def test_evaluate_is_exact():
    from src.algebra.qpoly import QXPoly

    p = QXPoly({(1, 1, -1): 1, (0, 0, 0): 1}, 2)
    assert p.evaluate(q=2, x=[1, 3]) == Fraction(5, 3)


def test_format_text_groups_q_series():
    from src.algebra.qpoly import QXPoly

    p = (
        QXPoly.monomial(2, x=(2, 0))
        + QXPoly.monomial(2, x=(1, 1))
        + QXPoly.monomial(2, q=1, x=(1, 1))
        + QXPoly.monomial(2, x=(0, 2))
    )
    assert p.format_text() == "x1^2 + (1+q) x1 x2 + x2^2"
    assert QXPoly.zero().format_text() == "0"


def test_json_is_canonical_and_decodes():
    from src.algebra.qpoly import QXPoly

    p = QXPoly({(1, 0, 2): 2, (0, 1, 1): -1}, 2)
    raw = p.to_json()
    assert QXPoly.from_json(raw) == p
    assert raw == QXPoly({(0, 1, 1): -1, (1, 0, 2): 2}, 2).to_json()


def test_from_json_rejects_garbage():
    from src.algebra.qpoly import QXPoly
    from src.core.errors import InputFormatError

    with pytest.raises(InputFormatError):
        QXPoly.from_json({"x": [1]})
    with pytest.raises(InputFormatError):
        QXPoly.from_json([{"q": 0, "x": [1], "c": "1"}, {"q": 0, "x": [1, 2], "c": "1"}])


def test_to_expr():
    import sympy
    from src.algebra.qpoly import QXPoly

    q, x1 = sympy.symbols("q x1")
    p = QXPoly({(1, 2): 3}, 1)
    assert sympy.simplify(p.to_expr() - 3 * q * x1**2) == 0


def test_tpoly_coefficients():
    from src.algebra.qpoly import QXPoly, TPoly

    p = TPoly.monomial(1, q=1, t=2, x=(1,)) + TPoly.monomial(1, t=0, x=(1,))
    assert p.t_degree() == 2
    assert p.coefficient_of_t(2) == QXPoly.monomial(1, q=1, x=(1,))
    assert p.coeff_of(0, 0, (1,)) == 1


@given(_polys(), _polys(), _polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()
