"""Exact univariate polynomials over the rationals.

Mixed Hodge polynomials of abelian character varieties are round, so every
``h^{k,p,q}`` with ``p != k`` or ``q != k`` vanishes and the whole polynomial is
a function of the single product ``x = t*u*v``.  Everything in this package is
therefore stored as a dense polynomial in ``x`` with :class:`fractions.Fraction`
coefficients, and only expanded back to ``(t, u, v)`` at output time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import NotRoundError

Rational = Union[int, Fraction]


def _to_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"coefficient {c!r} is not an exact rational")


class Polynomial:
    """Immutable dense polynomial in one variable with rational coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``.  Trailing zeros are stripped,
    so the zero polynomial has ``coeffs == ()`` and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = [_to_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def __reduce__(self):
        return (Polynomial, (self.coeffs,))

    # constructors

    @classmethod
    def constant(cls, c: Rational) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Rational = 1) -> Polynomial:
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def from_dict(cls, terms: dict[int, Rational]) -> Polynomial:
        if not terms:
            return cls()
        cs = [0] * (max(terms) + 1)
        for k, c in terms.items():
            cs[k] += c
        return cls(cs)

    # basic queries

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_nonnegative_integral(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"{self} has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    # arithmetic

    def __add__(self, other) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: Rational) -> Polynomial:
        c = _to_fraction(c)
        return Polynomial(c * a for a in self.coeffs)

    def __truediv__(self, c: Rational) -> Polynomial:
        if isinstance(c, Polynomial):
            return NotImplemented
        return self.scale(1 / _to_fraction(c))

    def divmod(self, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Euclidean division over the rationals."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = divisor.coeffs
        lead = d[-1]
        q = [Fraction(0)] * max(len(rem) - len(d) + 1, 0)
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + len(d) - 1] / lead
            q[k] = c
            if c:
                for i, dc in enumerate(d):
                    rem[k + i] -= c * dc
        return Polynomial(q), Polynomial(rem[: len(d) - 1])

    def substitute_sign(self) -> Polynomial:
        """Return ``p(-x)``."""
        return Polynomial(-c if k % 2 else c for k, c in enumerate(self.coeffs))

    def __call__(self, c: Rational) -> Fraction:
        c = _to_fraction(c)
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * c + a
        return acc

    evaluate = __call__

    # comparison / hashing

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # formatting

    def format(self, var: str = "x", mul: str = "*") -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}{mul}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"


def _coerce(other):
    if isinstance(other, Polynomial):
        return other
    if isinstance(other, (int, Fraction)):
        return Polynomial((other,))
    return NotImplemented


ZERO = Polynomial()
ONE = Polynomial((1,))
X = Polynomial((0, 1))


@dataclass(frozen=True)
class TuvTerm:
    k: int
    p: int
    q: int
    coefficient: int


@dataclass(frozen=True)
class TuvExpansion:
    """Mixed Hodge numbers ``h^{k,p,q}`` of a round polynomial, as a term list."""

    terms: tuple[TuvTerm, ...]

    def to_polynomial(self) -> Polynomial:
        acc: dict[int, int] = {}
        for term in self.terms:
            if not term.p == term.q == term.k:
                raise NotRoundError(f"term {term} is not of the form t^k u^k v^k")
            acc[term.k] = acc.get(term.k, 0) + term.coefficient
        return Polynomial.from_dict(acc)

    def format(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for term in self.terms:
            mono = "" if term.k == 0 else "".join(
                v if term.k == 1 else f"{v}^{term.k}" for v in "tuv"
            )
            if not mono:
                out.append(str(term.coefficient))
            elif term.coefficient == 1:
                out.append(mono)
            else:
                out.append(f"{term.coefficient}*{mono}")
        return " + ".join(out)


# Functional surface, mirroring the methods above.


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def power(p: Polynomial, e: int) -> Polynomial:
    return p**e


def scale(p: Polynomial, c: Rational) -> Polynomial:
    return p.scale(c)


def substitute_sign(p: Polynomial) -> Polynomial:
    return p.substitute_sign()


def evaluate(p: Polynomial, c: Rational) -> Fraction:
    return p(c)


def expand_tuv(p: Polynomial) -> TuvExpansion:
    """Expand a polynomial in ``x = tuv`` into its ``h^{k,k,k}`` terms.

    Raises :class:`NotRoundError` unless every coefficient is a nonnegative
    integer; anything else cannot be a table of mixed Hodge numbers.
    """
    bad = [(k, c) for k, c in enumerate(p.coeffs) if c.denominator != 1 or c < 0]
    if bad:
        shown = ", ".join(f"x^{k}: {c}" for k, c in bad)
        raise NotRoundError(f"not a mixed Hodge polynomial (coefficients {shown})")
    return TuvExpansion(
        tuple(TuvTerm(k, k, k, int(c)) for k, c in enumerate(p.coeffs) if c != 0)
    )
