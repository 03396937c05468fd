"""Exact rational arithmetic: Bernoulli numbers, Bernoulli polynomials, and
the rational constants zeta(2m)/pi^(2m).

All scalars are ``fractions.Fraction`` values, so they are always in lowest
terms with a positive denominator and zero is 0/1.  Serialization is the
base-10 string "p/q" (integers may omit "/1"), which is exactly what
``str(Fraction)`` produces.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

Rational = Fraction

__all__ = [
    "Rational",
    "bernoulli_number",
    "bernoulli_poly_eval",
    "zeta_even_over_pi_power",
    "rational_to_str",
    "rational_from_str",
]


# Immutable snapshot of B_0..B_n.  Extending rebinds the module global to a
# longer tuple, so concurrent fills are idempotent: two racing threads compute
# equal prefixes and the last rebind wins harmlessly.
_bernoulli: tuple[Fraction, ...] = (Fraction(1),)


def bernoulli_number(n: int) -> Fraction:
    """Bernoulli number B_n under the convention B_1 = -1/2.

    Computed by the exact integer recurrence
    B_m = -(1/(m+1)) * sum_{j<m} C(m+1, j) B_j and cached.
    """
    global _bernoulli
    if n < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    table = _bernoulli
    if n < len(table):
        return table[n]
    work = list(table)
    while len(work) <= n:
        m = len(work)
        if m > 2 and m % 2 == 1:
            work.append(Fraction(0))
            continue
        s = Fraction(0)
        for j in range(m):
            if work[j]:
                s += comb(m + 1, j) * work[j]
        work.append(-s / (m + 1))
    _bernoulli = tuple(work)
    return work[n]


def bernoulli_poly_eval(k: int, x: Fraction | int) -> Fraction:
    """Bernoulli polynomial value B_k(x) = sum_j C(k,j) B_j x^(k-j), exact."""
    if k < 1:
        raise ValueError("polynomial degree must be >= 1")
    x = Fraction(x)
    bernoulli_number(k)  # fill the cache once
    acc = Fraction(0)
    xpow = Fraction(1)
    # iterate j = k down to 0 so xpow tracks x^(k-j)
    for j in range(k, -1, -1):
        b = _bernoulli[j]
        if b:
            acc += comb(k, j) * b * xpow
        xpow *= x
    return acc


def zeta_even_over_pi_power(m: int) -> Fraction:
    """The rational number zeta(2m) / pi^(2m) = (-1)^(m+1) B_2m 2^(2m-1) / (2m)!."""
    if m < 1:
        raise ValueError("m must be >= 1")
    sign = 1 if m % 2 == 1 else -1
    return sign * bernoulli_number(2 * m) * Fraction(2 ** (2 * m - 1), factorial(2 * m))


def rational_to_str(r: Fraction) -> str:
    """Canonical "p/q" form (bare integer when q == 1)."""
    return str(Fraction(r))


def rational_from_str(s: str) -> Fraction:
    """Parse the "p/q" form; Fraction normalizes sign and gcd."""
    return Fraction(s)
