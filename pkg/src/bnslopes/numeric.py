"""Exact arithmetic primitives shared by every other module.

Python integers are already arbitrary precision and
:class:`fractions.Fraction` keeps values in lowest terms with a positive
denominator, so both are used directly.  Nothing in this package ever
touches floating point: every coefficient, intersection number and slope
is an exact integer or rational.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from math import factorial as _math_factorial

__all__ = [
    "Rational",
    "binomial",
    "factorial",
    "format_rational",
    "parse_rational",
    "superfactorial",
]

Rational = Fraction


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError(f"factorial is undefined for negative n (got {n})")
    return _math_factorial(n)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), equal to 0 whenever k < 0 or k > n.

    The zero convention is load bearing: the divisor-class coefficient
    formulas downstream are written uniformly in an index i and rely on
    terms like C(r-2, i-2) silently vanishing at small i instead of
    raising.
    """
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def superfactorial(r: int) -> int:
    """Product 1! * 2! * ... * r!  (empty product 1 for r = 0)."""
    if r < 0:
        raise ValueError(f"superfactorial is undefined for negative r (got {r})")
    out = 1
    fact = 1
    for j in range(1, r + 1):
        fact *= j
        out *= fact
    return out


def format_rational(x: Fraction | int) -> str:
    """Canonical "p/q" rendering; integers render as a bare "p"."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`."""
    return Fraction(text)
