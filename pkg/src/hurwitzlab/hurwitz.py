"""Certified high-precision numerics: Hurwitz zeta at rational points, pi,
Euler's constant, digamma at rationals, and L-values of periodic functions
and Dirichlet characters.

Every operation takes a PrecisionContext and returns a value whose absolute
error is provably at most 10^(-digits).  Hurwitz zeta uses Euler-Maclaurin
summation with an explicit remainder bound (twice the first omitted
Bernoulli correction term, which is conservative for the completely
monotone integrand 1/(n+x)^k); rounding is covered by counting operations
at the working precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import mpmath as mp

from .errors import ComputationError
from .exact import bernoulli_number
from .precision import PrecisionComplex, PrecisionContext, PrecisionReal
from .cyclotomic import DirichletCharacter, embed_complex

__all__ = [
    "PeriodicFunction",
    "hurwitz_zeta",
    "pi_const",
    "euler_gamma_const",
    "digamma_rational",
    "periodic_l_value",
    "l_one_chi",
]


# B_{2j}/(2j)! and B_{2j}/(2j) as mpf, keyed by (j, binary precision)
_bern_fact_cache: dict[tuple[int, int], mp.mpf] = {}
_gamma_cache: dict[int, tuple[mp.mpf, mp.mpf]] = {}


def _bern_over_factorial(j: int) -> mp.mpf:
    key = (j, mp.mp.prec)
    v = _bern_fact_cache.get(key)
    if v is None:
        b = bernoulli_number(2 * j)
        v = mp.mpf(b.numerator) / (mp.mpf(b.denominator) * mp.factorial(2 * j))
        _bern_fact_cache[key] = v
    return v


def _validate_point(k: int, a: int, q: int) -> None:
    if not (isinstance(k, int) and isinstance(a, int) and isinstance(q, int)):
        raise ValueError("k, a, q must be integers")
    if k < 2:
        raise ValueError("k >= 2 required (the pole region at s=1 is out of scope)")
    if q < 1 or a < 1 or a > q:
        raise ValueError("need 1 <= a <= q")


def hurwitz_zeta(k: int, a: int, q: int, ctx: PrecisionContext) -> PrecisionReal:
    """zeta(k, a/q) = sum_{n>=0} (n + a/q)^(-k) with certified absolute error.

    Euler-Maclaurin with N = max(digits, 2k) leading terms and
    J = digits/2 + 5 Bernoulli corrections; remainder bounded by twice the
    first omitted correction term.
    """
    _validate_point(k, a, q)
    digits = ctx.digits
    # the leading term (a/q)^(-k) can be large; scale the working precision
    magnitude_digits = len(str(q ** k // a ** k)) + 1
    with mp.workdps(ctx.working_digits + magnitude_digits + 8):
        nterms = max(digits, 2 * k)
        ncorr = digits // 2 + 5
        x = mp.mpf(a) / q
        lead = mp.fsum((n + x) ** (-k) for n in range(nterms))
        y = nterms + x
        integral = y ** (1 - k) / (k - 1)
        half = y ** (-k) / 2
        y2 = y ** (-2)
        ypow = y ** (-k - 1)  # y^-(k + 2j - 1) at j = 1
        rising = k  # k (k+1) ... (k + 2j - 2) at j = 1
        corr = mp.mpf(0)
        abs_corr = mp.mpf(0)
        for j in range(1, ncorr + 1):
            term = _bern_over_factorial(j) * rising * ypow
            corr += term
            abs_corr += abs(term)
            rising *= (k + 2 * j - 1) * (k + 2 * j)
            ypow *= y2
        remainder = 2 * abs(_bern_over_factorial(ncorr + 1) * rising * ypow)
        value = lead + integral + half + corr
        magnitudes = lead + abs(integral) + abs(half) + abs_corr
        rounding = (nterms + 3 * ncorr + k + 32) * 8 * mp.eps * (magnitudes + abs(value))
        bound = remainder + rounding
        if not bound <= ctx.target_bound():
            raise ComputationError(
                "internal error bound exceeded the requested precision"
            )
        return PrecisionReal(value, bound)


def pi_const(ctx: PrecisionContext) -> PrecisionReal:
    """pi to the requested precision (deterministic for fixed digits)."""
    with ctx.workdps(5):
        v = +mp.pi
        return PrecisionReal(v, 8 * mp.eps * v)


def euler_gamma_const(ctx: PrecisionContext) -> PrecisionReal:
    """Euler's constant via the harmonic-number Euler-Maclaurin expansion
    gamma = H_N - ln N - 1/(2N) + sum_j B_2j/(2j N^2j) + R, with |R| bounded
    by twice the first omitted term."""
    wd = ctx.working_digits + 8
    cached = _gamma_cache.get(wd)
    if cached is None:
        with mp.workdps(wd):
            nterms = wd + 10
            ncorr = wd // 2 + 5
            harmonic = mp.fsum(mp.mpf(1) / n for n in range(1, nterms + 1))
            value = harmonic - mp.ln(nterms) - mp.mpf(1) / (2 * nterms)
            n2 = mp.mpf(nterms) ** (-2)
            npow = n2
            for j in range(1, ncorr + 1):
                b = bernoulli_number(2 * j)
                value += mp.mpf(b.numerator) / (b.denominator * 2 * j) * npow
                npow *= n2
            b = bernoulli_number(2 * ncorr + 2)
            remainder = 2 * abs(mp.mpf(b.numerator) / (b.denominator * (2 * ncorr + 2)) * npow)
            rounding = (nterms + 2 * ncorr + 32) * 8 * mp.eps * (harmonic + abs(value) + nterms)
            cached = (value, remainder + rounding)
            _gamma_cache[wd] = cached
    value, bound = cached
    with mp.workdps(wd):
        if not bound <= ctx.target_bound():
            raise ComputationError("internal error bound exceeded the requested precision")
    return PrecisionReal(value, bound)


def digamma_rational(a: int, q: int, ctx: PrecisionContext) -> PrecisionReal:
    """psi(a/q) for 1 <= a <= q by the finite Gauss closed form
    psi(p/q) = -gamma - ln(2q) - (pi/2) cot(pi p/q)
               + 2 sum_{n < q/2} cos(2 pi n p / q) ln sin(pi n / q).
    """
    if not (1 <= a <= q):
        raise ValueError("need 1 <= a <= q")
    gamma = euler_gamma_const(ctx)
    if a == q:
        return -gamma
    with ctx.workdps(12):
        x = mp.mpf(a) / q
        total = -mp.ln(2 * q) - mp.pi / 2 * mp.cot(mp.pi * x)
        absacc = abs(total)
        for n in range(1, (q - 1) // 2 + 1):
            term = 2 * mp.cos(2 * mp.pi * n * x) * mp.ln(mp.sin(mp.pi * mp.mpf(n) / q))
            total += term
            absacc += abs(term)
        # cot has derivative 1 + cot^2 <= 1 + (q/pi)^2, so argument rounding
        # is covered by the q*q factor
        rounding = (16 * q + 64) * mp.eps * (absacc + abs(total) + q * q + 10)
        result = PrecisionReal(total, rounding) - gamma
        if not result.error_bound <= ctx.target_bound():
            raise ComputationError("internal error bound exceeded the requested precision")
        return result


@dataclass(frozen=True)
class PeriodicFunction:
    """A q-periodic arithmetic function given by its rational values f(1..q)."""

    period: int
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.period < 1:
            raise ValueError("period must be positive")
        if len(self.values) != self.period:
            raise ValueError("need exactly one value per residue 1..q")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    def __call__(self, n: int) -> Fraction:
        return self.values[(n - 1) % self.period]


def periodic_l_value(k: int, f: PeriodicFunction, ctx: PrecisionContext) -> PrecisionReal:
    """L(k, f) = q^(-k) sum_{a=1..q} f(a) zeta(k, a/q) for integer k >= 2."""
    if k < 2:
        raise ValueError("k >= 2 required")
    q = f.period
    scale = Fraction(1, q ** k)
    with ctx.workdps(8):
        total = PrecisionReal(0, 0)
        for a in range(1, q + 1):
            c = f(a)
            if c:
                total = total + hurwitz_zeta(k, a, q, ctx) * (c * scale)
        return total


def l_one_chi(chi: DirichletCharacter, ctx: PrecisionContext) -> PrecisionComplex:
    """L(1, chi) = -(1/q) sum_a chi(a) psi(a/q) for non-principal chi."""
    if chi.is_principal:
        raise ValueError("L(1, chi) diverges for the principal character")
    q = chi.modulus
    with ctx.workdps(12):
        total = PrecisionComplex(0, 0)
        for a in range(1, q + 1):
            value = chi(a)
            if not value:
                continue
            total = total + embed_complex(value, ctx) * digamma_rational(a, q, ctx)
        return total * Fraction(-1, q)
