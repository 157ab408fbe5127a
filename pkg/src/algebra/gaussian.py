"""Gaussian binomials, box partitions and strict tuples."""
from functools import lru_cache
from typing import Iterator

from src.algebra.qpoly import QXPoly
from src.core.errors import IndexRangeError, ShapeError, StrictTupleError
from src.models.shapes import Partition


@lru_cache(maxsize=None)
def _gaussian_coefficients(total: int, k: int) -> tuple[int, ...]:
    # [total choose k]_q = [total-1 choose k-1]_q + q^k [total-1 choose k]_q
    if k < 0 or k > total:
        return ()
    if k == 0 or k == total:
        return (1,)
    left = _gaussian_coefficients(total - 1, k - 1)
    right = _gaussian_coefficients(total - 1, k)
    out = [0] * (k * (total - k) + 1)
    for i, c in enumerate(left):
        out[i] += c
    for i, c in enumerate(right):
        out[i + k] += c
    return tuple(out)


def qbinom(k: int, l: int) -> QXPoly:
    """Σ q^{|γ|} over partitions γ in the k x l box, i.e. [k+l choose k]_q."""
    if k < 0 or l < 0:
        raise IndexRangeError(f"qbinom needs non-negative arguments, got ({k}, {l})")
    return QXPoly.from_q_coefficients(_gaussian_coefficients(k + l, k))


def box_partitions(k: int, l: int) -> Iterator[Partition]:
    """Partitions with at most k parts, each at most l.

    Order is lexicographic on the zero-padded k-tuples read in increasing
    order, e.g. (2,1) gives ∅, (1), (1,1).
    """
    if k < 0 or l < 0:
        raise IndexRangeError(f"box_partitions needs non-negative arguments, got ({k}, {l})")
    for padded in _padded_box(k, l):
        yield Partition(padded)


def padded_box_partitions(k: int, l: int) -> Iterator[tuple[int, ...]]:
    """Same as box_partitions but as zero-padded k-tuples."""
    if k < 0 or l < 0:
        raise IndexRangeError(f"padded_box_partitions needs non-negative arguments, got ({k}, {l})")
    yield from _padded_box(k, l)


def _padded_box(k: int, l: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for first in range(l + 1):
        for rest in _padded_box(k - 1, first):
            yield (first,) + rest


def fits_in_box(parts: tuple[int, ...], k: int, l: int) -> bool:
    nonzero = [p for p in parts if p]
    return len(nonzero) <= k and all(0 <= p <= l for p in parts)


def box_complement(parts: tuple[int, ...], l: int) -> tuple[int, ...]:
    """π^c = (l - π_k, ..., l - π_1) for a k-tuple π inside the k x l box."""
    return tuple(l - p for p in reversed(parts))


def strict_tuple_from_partition(gamma: Partition | tuple[int, ...], k: int, l: int) -> tuple[int, ...]:
    """a_p = γ_p + (k - p) for p = 1..k."""
    parts = gamma.parts if isinstance(gamma, Partition) else tuple(gamma)
    if not fits_in_box(parts, k, l) or len(parts) > k:
        raise ShapeError(f"Partition {parts} does not fit in the {k} x {l} box")
    padded = parts + (0,) * (k - len(parts))
    return tuple(padded[p - 1] + (k - p) for p in range(1, k + 1))


def partition_from_strict_tuple(a: tuple[int, ...], k: int, l: int) -> Partition:
    """Inverse of strict_tuple_from_partition: γ_p = a_p - (k - p)."""
    a = tuple(a)
    if len(a) != k:
        raise StrictTupleError(f"Strict tuple {a} must have exactly {k} entries")
    if any(x <= y for x, y in zip(a, a[1:])):
        raise StrictTupleError(f"Tuple {a} is not strictly decreasing")
    if a and (a[0] > k + l - 1 or a[-1] < 0):
        raise StrictTupleError(f"Tuple {a} leaves the range [0, {k + l - 1}]")
    return Partition(tuple(a[p - 1] - (k - p) for p in range(1, k + 1)))


@lru_cache(maxsize=None)
def _partition_counts(degree: int) -> tuple[int, ...]:
    counts = [0] * (degree + 1)
    counts[0] = 1
    for part in range(1, degree + 1):
        for m in range(part, degree + 1):
            counts[m] += counts[m - part]
    return tuple(counts)


def partition_series(degree: int, power: int = 1) -> QXPoly:
    """Π_{k>=1} (1 - q^k)^{-power}, expanded up to q^degree."""
    if degree < 0:
        return QXPoly.zero()
    base = QXPoly.from_q_coefficients(_partition_counts(degree))
    result = QXPoly.constant(1)
    for _ in range(power):
        result = (result * base).truncate_q(degree)
    return result
