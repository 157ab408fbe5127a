"""Exact sparse Laurent polynomials in q (and t) and x_1..x_n.

Coefficients are Python ints, so nothing overflows. A polynomial with n = 0
is a scalar in Z[q^±] (or Z[q^±, t^±]) and combines with any variable count;
two polynomials with different nonzero n cannot be combined.
"""
import logging
from fractions import Fraction
from typing import Any, ClassVar, Iterable, Iterator, Mapping, TypeVar

import sympy

from src.core.errors import InputFormatError, NegativePowerError, VariableCountError

logger = logging.getLogger(__name__)

P = TypeVar("P", bound="LaurentPolynomial")

Key = tuple[int, ...]


class LaurentPolynomial:
    """Shared machinery; keys are (distinguished exponents..., x_1, ..., x_n)."""

    _lead: ClassVar[int] = 1
    _lead_names: ClassVar[tuple[str, ...]] = ("q",)

    __slots__ = ("_terms", "_n")

    def __init__(self, terms: Mapping[Key, int] | None = None, n: int = 0):
        if n < 0:
            raise VariableCountError(f"Variable count must be non-negative, got {n}")
        width = self._lead + n
        clean: dict[Key, int] = {}
        for key, coeff in (terms or {}).items():
            key = tuple(key)
            if len(key) != width:
                raise VariableCountError(
                    f"Exponent vector {key} has length {len(key)}, expected {width} for n={n}"
                )
            if coeff:
                clean[key] = clean.get(key, 0) + int(coeff)
                if clean[key] == 0:
                    del clean[key]
        self._terms = clean
        self._n = n

    @classmethod
    def _raw(cls: type[P], terms: dict[Key, int], n: int) -> P:
        """Build from a dict already free of zeros and of the right key width."""
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._n = n
        return obj

    # =========================================================================
    # Construction
    # =========================================================================

    @classmethod
    def zero(cls: type[P], n: int = 0) -> P:
        return cls._raw({}, n)

    @classmethod
    def constant(cls: type[P], c: int, n: int = 0) -> P:
        if c == 0:
            return cls.zero(n)
        return cls._raw({(0,) * (cls._lead + n): int(c)}, n)

    @classmethod
    def x_variable(cls: type[P], i: int, n: int) -> P:
        """The variable x_i in n variables."""
        if not 1 <= i <= n:
            raise VariableCountError(f"x_{i} does not exist among {n} variables")
        x = [0] * n
        x[i - 1] = 1
        return cls._raw({(0,) * cls._lead + tuple(x): 1}, n)

    # =========================================================================
    # Basic accessors
    # =========================================================================

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> dict[Key, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Key, int]]:
        """Terms in canonical (graded-lex) order."""
        for key in sorted(self._terms, key=self._canonical_key):
            yield key, self._terms[key]

    def _canonical_key(self, key: Key) -> tuple:
        lead, x = key[: self._lead], key[self._lead :]
        return (lead, sum(x), x)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def min_q_degree(self) -> int:
        return min((k[0] for k in self._terms), default=0)

    def max_q_degree(self) -> int:
        return max((k[0] for k in self._terms), default=0)

    # =========================================================================
    # Arithmetic
    # =========================================================================

    def _promote(self: P, n: int) -> P:
        if self._n == n:
            return self
        if self._n != 0:
            raise VariableCountError(f"Cannot combine polynomials in {self._n} and {n} variables")
        pad = (0,) * n
        return self._raw({k + pad: c for k, c in self._terms.items()}, n)

    def _coerce(self: P, other: Any) -> tuple[P, P]:
        if isinstance(other, int):
            other = type(self).constant(other, self._n)
        elif not isinstance(other, type(self)):
            return NotImplemented  # type: ignore[return-value]
        if self._n == other._n:
            return self, other
        if self._n == 0:
            return self._promote(other._n), other
        if other._n == 0:
            return self, other._promote(self._n)
        raise VariableCountError(f"Cannot combine polynomials in {self._n} and {other._n} variables")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = type(self).constant(other, self._n)
        if not isinstance(other, type(self)):
            return NotImplemented
        try:
            a, b = self._coerce(other)
        except VariableCountError:
            return False
        return a._terms == b._terms

    def __hash__(self) -> int:
        stripped = []
        for key, c in self._terms.items():
            x = list(key[self._lead :])
            while x and x[-1] == 0:
                x.pop()
            stripped.append((key[: self._lead], tuple(x), c))
        return hash(frozenset(stripped))

    def __add__(self: P, other: Any) -> P:
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        out = dict(a._terms)
        for key, c in b._terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return self._raw(out, a._n)

    __radd__ = __add__

    def __neg__(self: P) -> P:
        return self._raw({k: -c for k, c in self._terms.items()}, self._n)

    def __sub__(self: P, other: Any) -> P:
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self: P, other: Any) -> P:
        return (-self) + other

    def __mul__(self: P, other: Any) -> P:
        if isinstance(other, int):
            return self.scale(other)
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        out: dict[Key, int] = {}
        for ka, ca in a._terms.items():
            for kb, cb in b._terms.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    del out[key]
        return self._raw(out, a._n)

    __rmul__ = __mul__

    def __pow__(self: P, exponent: int) -> P:
        if exponent < 0:
            raise NegativePowerError("Negative powers are not polynomials")
        result = type(self).constant(1, self._n)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self: P, c: int) -> P:
        if c == 0:
            return self.zero(self._n)
        return self._raw({k: c * v for k, v in self._terms.items()}, self._n)

    # =========================================================================
    # Substitutions
    # =========================================================================

    def substitute_q_zero(self: P) -> P:
        """q -> 0; only defined when no negative q-powers are present."""
        if any(k[0] < 0 for k in self._terms):
            raise NegativePowerError("q -> 0 is undefined for negative powers of q")
        return self._raw({k: c for k, c in self._terms.items() if k[0] == 0}, self._n)

    def invert_q(self: P) -> P:
        """q -> q^-1."""
        return self._raw({(-k[0],) + k[1:]: c for k, c in self._terms.items()}, self._n)

    def shift_q(self: P, k: int) -> P:
        """Multiply by q^k."""
        return self._raw({(key[0] + k,) + key[1:]: c for key, c in self._terms.items()}, self._n)

    def times_x_power(self: P, k: int) -> P:
        """Multiply by (x_1 ... x_n)^k."""
        lead = self._lead
        return self._raw(
            {key[:lead] + tuple(e + k for e in key[lead:]): c for key, c in self._terms.items()},
            self._n,
        )

    def truncate_q(self: P, degree: int) -> P:
        """Drop every term of q-degree above the bound."""
        return self._raw({k: c for k, c in self._terms.items() if k[0] <= degree}, self._n)

    def swap_variables(self: P, i: int, j: int) -> P:
        """Exchange x_i and x_j (1-based)."""
        if not (1 <= i <= self._n and 1 <= j <= self._n):
            raise VariableCountError(f"Cannot swap x_{i}, x_{j} among {self._n} variables")
        a, b = self._lead + i - 1, self._lead + j - 1
        out: dict[Key, int] = {}
        for key, c in self._terms.items():
            lst = list(key)
            lst[a], lst[b] = lst[b], lst[a]
            out[tuple(lst)] = c
        return self._raw(out, self._n)

    def extend_variables(self: P, m: int) -> P:
        """Embed a polynomial in x_1..x_n into x_1..x_m (m >= n)."""
        if m < self._n:
            raise VariableCountError(f"Cannot embed {self._n} variables into {m}")
        pad = (0,) * (m - self._n)
        return self._raw({k + pad: c for k, c in self._terms.items()}, m)

    def evaluate(self, q: int | Fraction = 1, x: Iterable[int | Fraction] | None = None) -> Fraction:
        """Exact evaluation; leading distinguished variables other than q are set to 1."""
        xs = list(x) if x is not None else [1] * self._n
        if len(xs) != self._n:
            raise VariableCountError(f"Expected {self._n} values, got {len(xs)}")
        total = Fraction(0)
        for key, c in self._terms.items():
            term = Fraction(c) * Fraction(q) ** key[0]
            for value, e in zip(xs, key[self._lead :]):
                term *= Fraction(value) ** e
            total += term
        return total

    # =========================================================================
    # Conversion
    # =========================================================================

    def to_json(self) -> list[dict[str, Any]]:
        out = []
        for key, c in self.items():
            entry: dict[str, Any] = {name: key[idx] for idx, name in enumerate(self._lead_names)}
            entry["x"] = list(key[self._lead :])
            entry["c"] = str(c)
            out.append(entry)
        return out

    @classmethod
    def from_json(cls: type[P], raw: Any, n: int | None = None) -> P:
        if not isinstance(raw, list):
            raise InputFormatError(f"Polynomial JSON must be a list of terms, got {type(raw).__name__}")
        terms: dict[Key, int] = {}
        width: int | None = n
        try:
            for entry in raw:
                x = tuple(int(e) for e in entry["x"])
                if width is None:
                    width = len(x)
                if len(x) != width:
                    raise InputFormatError(f"Inconsistent x-exponent lengths in polynomial JSON: {entry!r}")
                lead = tuple(int(entry.get(name, 0)) for name in cls._lead_names)
                key = lead + x
                terms[key] = terms.get(key, 0) + int(entry["c"])
        except (KeyError, TypeError, ValueError) as e:
            raise InputFormatError(f"Malformed polynomial term: {e}") from e
        return cls(terms, width or 0)

    def to_expr(self) -> sympy.Expr:
        """The polynomial as a sympy expression in q (t) and x1..xn."""
        lead_syms = [sympy.Symbol(name) for name in self._lead_names]
        xs = [sympy.Symbol(f"x{i}") for i in range(1, self._n + 1)]
        expr = sympy.Integer(0)
        for key, c in self.items():
            term = sympy.Integer(c)
            for sym, e in zip(lead_syms, key[: self._lead]):
                term *= sym**e
            for sym, e in zip(xs, key[self._lead :]):
                term *= sym**e
            expr += term
        return expr

    def format_text(self) -> str:
        """Human-readable rendering grouped by monomial, e.g. x1^2 + (1+q) x1 x2 + x2^2."""
        if not self._terms:
            return "0"
        groups: dict[Key, dict[int, int]] = {}
        for key, c in self._terms.items():
            groups.setdefault(key[1:], {})[key[0]] = c
        pieces = []
        for rest in sorted(groups, key=self._group_order):
            label = self._monomial_label(rest)
            qcoeffs = groups[rest]
            coeff = _format_q_series(qcoeffs)
            if not label:
                pieces.append(coeff)
            elif len(qcoeffs) > 1:
                pieces.append(f"({coeff}) {label}")
            elif coeff == "1":
                pieces.append(label)
            elif coeff == "-1":
                pieces.append("-" + label)
            else:
                pieces.append(f"{coeff} {label}")
        text = pieces[0]
        for piece in pieces[1:]:
            text += " - " + piece[1:] if piece.startswith("-") else " + " + piece
        return text

    def _group_order(self, rest: Key) -> tuple:
        lead = rest[: self._lead - 1]
        x = rest[self._lead - 1 :]
        return (lead, tuple(-e for e in x))

    def _monomial_label(self, rest: Key) -> str:
        names = [f"x{i}" for i in range(1, self._n + 1)]
        lead_names = self._lead_names[1:]
        parts = []
        for name, e in zip(list(lead_names) + names, rest):
            if e == 1:
                parts.append(name)
            elif e != 0:
                parts.append(f"{name}^{e}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.format_text()!r}, n={self._n})"

    def __str__(self) -> str:
        return self.format_text()


def _format_q_series(coeffs: Mapping[int, int]) -> str:
    out = ""
    for k in sorted(coeffs):
        c = coeffs[k]
        base = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
        if not base:
            term = str(c)
        elif c == 1:
            term = base
        elif c == -1:
            term = "-" + base
        else:
            term = f"{c}{base}"
        if out and not term.startswith("-"):
            out += "+"
        out += term
    return out


class QXPoly(LaurentPolynomial):
    """Laurent polynomial in q and x_1..x_n with integer coefficients."""

    _lead = 1
    _lead_names = ("q",)
    __slots__ = ()

    @classmethod
    def q_power(cls, k: int, n: int = 0) -> "QXPoly":
        return cls._raw({(k,) + (0,) * n: 1}, n)

    @classmethod
    def monomial(cls, n: int, q: int = 0, x: Iterable[int] | None = None, coeff: int = 1) -> "QXPoly":
        xs = tuple(x) if x is not None else (0,) * n
        if len(xs) != n:
            raise VariableCountError(f"Monomial needs {n} x-exponents, got {len(xs)}")
        return cls({(q,) + xs: coeff}, n)

    @classmethod
    def from_q_coefficients(cls, coeffs: Iterable[int], n: int = 0) -> "QXPoly":
        """Σ coeffs[k] q^k."""
        return cls({(k,) + (0,) * n: c for k, c in enumerate(coeffs) if c}, n)

    def coeff_of(self, q: int, x: Iterable[int] | None = None) -> int:
        xs = tuple(x) if x is not None else (0,) * self._n
        return self._terms.get((q,) + xs, 0)

    def q_coefficients(self) -> list[int]:
        """Coefficient list of a polynomial in q alone (n == 0, no negative powers)."""
        if self._n != 0:
            raise VariableCountError("q_coefficients() needs a polynomial in q alone")
        if not self._terms:
            return []
        if self.min_q_degree() < 0:
            raise NegativePowerError("q_coefficients() needs non-negative q-powers")
        out = [0] * (self.max_q_degree() + 1)
        for (k,), c in self._terms.items():
            out[k] = c
        return out

    def x_coefficient(self, x: Iterable[int]) -> "QXPoly":
        """The q-series multiplying the monomial x^x, as a polynomial in q alone."""
        xs = tuple(x)
        return QXPoly._raw({(k[0],): c for k, c in self._terms.items() if k[1:] == xs}, 0)


class TPoly(LaurentPolynomial):
    """Laurent polynomial in q, t and x_1..x_n with integer coefficients."""

    _lead = 2
    _lead_names = ("q", "t")
    __slots__ = ()

    @classmethod
    def monomial(
        cls, n: int, q: int = 0, t: int = 0, x: Iterable[int] | None = None, coeff: int = 1
    ) -> "TPoly":
        xs = tuple(x) if x is not None else (0,) * n
        if len(xs) != n:
            raise VariableCountError(f"Monomial needs {n} x-exponents, got {len(xs)}")
        return cls({(q, t) + xs: coeff}, n)

    def coeff_of(self, q: int, t: int, x: Iterable[int] | None = None) -> int:
        xs = tuple(x) if x is not None else (0,) * self._n
        return self._terms.get((q, t) + xs, 0)

    def t_degree(self) -> int:
        return max((k[1] for k in self._terms), default=0)

    def coefficient_of_t(self, k: int) -> QXPoly:
        """The coefficient of t^k as a QXPoly."""
        return QXPoly._raw({(key[0],) + key[2:]: c for key, c in self._terms.items() if key[1] == k}, self._n)
