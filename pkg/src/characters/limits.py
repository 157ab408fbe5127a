"""Renormalized q-Whittaker polynomials and the level-one vacuum character limit.

Everything is truncated at a q-degree D, so the series computed here are
exact finite polynomials. The CSF side sums over the sets C_k of fillings
of λ + kθ that are not images of the column-attaching map s.
"""
import itertools
import logging
import math
from fractions import Fraction
from typing import Sequence

from src.algebra.gaussian import partition_series
from src.algebra.qpoly import QXPoly
from src.characters.whittaker import whittaker
from src.combinatorics.bijections import psi_inv, psi_inv_inverse
from src.combinatorics.fillings import enumerate_csf, inv, x_exponents
from src.combinatorics.shapes import add_theta
from src.core.errors import ShapeError, StabilizationError, StatisticMismatchError
from src.models.filling import Filling
from src.models.patterns import POP
from src.models.shapes import Partition

logger = logging.getLogger(__name__)


def norm_sq(gamma: Sequence[int]) -> Fraction:
    """‖γ‖² = Σ γ_i² - |γ|²/n, the squared norm of the projection to Σ = 0."""
    n = len(gamma)
    if n == 0:
        return Fraction(0)
    total = sum(gamma)
    return Fraction(sum(g * g for g in gamma)) - Fraction(total * total, n)


def _half_norm(shape: Partition, n: int) -> Fraction:
    return norm_sq(shape.padded(n)) / 2


def _require_divisible(shape: Partition, n: int) -> None:
    if n < 1 or shape.size % n:
        raise ShapeError(f"|λ| = {shape.size} must be divisible by n = {n}")


def normalize_whittaker(shape: Partition, n: int) -> QXPoly:
    """Ŵ_λ = q^{‖λ‖²/2} (x_1 ... x_n)^{-|λ|/n} W_λ(X_n; q^{-1})."""
    _require_divisible(shape, n)
    half = _half_norm(shape, n)
    if half.denominator != 1:
        raise ShapeError(f"‖{shape}‖²/2 = {half} is not an integer")
    W = whittaker(shape, n, "fermionic")
    return W.invert_q().shift_q(int(half)).times_x_power(-shape.size // n)


def normalized_limit_truncated(shape: Partition, n: int, K: int, degree: int) -> QXPoly:
    """Ŵ_{λ+Kθ}(X_n; q) truncated to q-degree <= D."""
    return normalize_whittaker(add_theta(shape, K, n), n).truncate_q(degree)


# =============================================================================
# Theta / eta side
# =============================================================================


def theta_truncated(n: int, degree: int) -> QXPoly:
    """Σ q^{‖γ‖²/2} x^γ over γ in the root lattice (Σ γ = 0) with ‖γ‖²/2 <= D."""
    if n < 1:
        raise ShapeError(f"theta_truncated needs n >= 1, got {n}")
    bound = math.isqrt(2 * degree)
    terms: dict[tuple[int, ...], int] = {}
    for head in itertools.product(range(-bound, bound + 1), repeat=n - 1):
        gamma = head + (-sum(head),)
        square = sum(g * g for g in gamma)
        if square <= 2 * degree:
            terms[(square // 2,) + gamma] = 1
    return QXPoly(terms, n)


def chi_lambda0_truncated(n: int, degree: int) -> QXPoly:
    """Θ(X_n; q) / Π_k (1 - q^k)^{n-1}, truncated to q-degree <= D."""
    return (theta_truncated(n, degree) * partition_series(degree, n - 1)).truncate_q(degree)


# =============================================================================
# CSF side
# =============================================================================


def s_map(F: Filling) -> Filling:
    """Attach the column (2, 3, ..., n) on the left and the column (1) on the right."""
    F.require_partition_shape()
    if F.n < 2:
        raise ShapeError(f"s_map needs n >= 2, got n={F.n}")
    return F.with_columns((tuple(range(2, F.n + 1)),) + F.columns + ((1,),))


def in_C_k(F: Filling, k: int, shape: Partition, n: int) -> bool:
    """F has shape λ + kθ and is not in the image of s_map.

    For k >= 1 that means 1 sits in the first column or is absent from the last one.
    """
    if F.require_partition_shape() != add_theta(shape, k, n):
        return False
    if k == 0:
        return True
    first, last = F.columns[0], F.columns[-1]
    return first[0] == 1 or 1 not in last


def _level_contribution(shape: Partition, n: int, k: int, degree: int) -> QXPoly:
    """Σ_{F ∈ C_k} x̄^F q^{‖λ+kθ‖²/2 - inv(F)}, truncated."""
    big = add_theta(shape, k, n)
    half = _half_norm(big, n)
    shift = big.size // n
    terms: dict[tuple[int, ...], int] = {}
    for F in enumerate_csf(big, n):
        if not in_C_k(F, k, shape, n):
            continue
        exponent = half - inv(F)
        if exponent < 0:
            raise StatisticMismatchError(f"Negative exponent {exponent} for {F}")
        if exponent > degree:
            continue
        key = (int(exponent),) + tuple(e - shift for e in x_exponents(F))
        terms[key] = terms.get(key, 0) + 1
    return QXPoly(terms, n)


def chi_via_csf(shape: Partition, n: int, K: int, degree: int) -> QXPoly:
    """Σ_{k <= K} Σ_{F ∈ C_k} x̄^F q^{‖λ+kθ‖²/2 - inv(F)}, truncated to q-degree <= D."""
    _require_divisible(shape, n)
    result = QXPoly.zero(n)
    for k in range(K + 1):
        result = result + _level_contribution(shape, n, k, degree)
    return result


def chi_via_csf_stable(
    shape: Partition, n: int, degree: int, patience: int = 2, kmax_cap: int = 8
) -> tuple[QXPoly, int]:
    """Increase K until `patience` successive levels add nothing; returns (χ, K)."""
    _require_divisible(shape, n)
    result = QXPoly.zero(n)
    quiet = 0
    for k in range(kmax_cap + 1):
        level = _level_contribution(shape, n, k, degree)
        result = result + level
        quiet = quiet + 1 if level.is_zero() else 0
        logger.debug(
            f"χ level k={k}: {len(level)} terms",
            extra={"extra_data": {"action": "chi_via_csf", "k": k, "terms": len(level), "quiet": quiet}},
        )
        if quiet >= patience:
            return result, k
    raise StabilizationError(
        f"χ for λ={shape}, n={n}, D={degree} did not stabilize within K <= {kmax_cap}"
    )


# =============================================================================
# d-statistic and the POP-side injection
# =============================================================================


def d_statistic(P: POP, shape: Partition, k: int) -> Fraction:
    """‖λ+kθ‖²/2 - |Λ| for a POP of shape λ + kθ."""
    big = add_theta(shape, k, P.n)
    if P.shape != big:
        raise ShapeError(f"POP shape {P.shape} is not λ + {k}θ = {big}")
    return _half_norm(big, P.n) - P.weight


def pop_s_map(P: POP) -> POP:
    """ψ_inv ∘ s_map ∘ ψ_inv⁻¹ : POP(λ+kθ) -> POP(λ+(k+1)θ)."""
    return psi_inv(s_map(psi_inv_inverse(P)))


def renormalized_x_weight(F: Filling) -> tuple[Fraction, ...]:
    """Exponents of x̄^F = x^F (x_1 ... x_n)^{-|F|/n}."""
    shift = Fraction(F.size, F.n)
    return tuple(e - shift for e in x_exponents(F))
