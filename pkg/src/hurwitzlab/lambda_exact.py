"""Exact evaluation of the normalized Hurwitz zeta pair combinations.

The real number zeta(k, a/q) + (-1)^k zeta(k, 1 - a/q), divided by (pi i)^k,
is an explicit element of Q(zeta_q): writing w = e^(2 pi i z), the function
pi cot(pi z) becomes i pi + 2 pi i/(w - 1), so its (k-1)-st z-derivative is
(2 pi i)^k R_k(w) with R_k = (w d/dw)^(k-1) applied to 1/(w - 1).  Combining
with the cotangent identity for the pair sum gives

    lambda(k, a, q) = ((-1)^(k-1) / (k-1)!) * 2^k * R_k(zeta_q^a).

This module computes R_k symbolically over the integers, evaluates it
exactly in the cyclotomic field, cross-validates against the matching
Bernoulli-polynomial sum, and checks the defining identity numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd

from .cyclotomic import CyclotomicElement, embed_complex
from .errors import DegenerateSumError, InconsistentAError
from .exact import bernoulli_poly_eval
from .hurwitz import hurwitz_zeta, pi_const
from .precision import PrecisionContext, PrecisionReal

__all__ = [
    "CotDerivRep",
    "LambdaValue",
    "cot_derivative_rep",
    "lambda_exact",
    "bernoulli_sum_lambda",
    "infer_A",
    "verify_strong_identity",
]


@dataclass(frozen=True)
class CotDerivRep:
    """R_k(w) = numerator(w) / (w - 1)^k where R_k = (w d/dw)^(k-1) [1/(w-1)]."""

    k: int
    numerator: tuple[int, ...]

    @property
    def denominator_power(self) -> int:
        return self.k


_rep_cache: dict[int, tuple[int, ...]] = {1: (1,)}


def _apply_operator(poly: list[int], m: int) -> list[int]:
    """One w d/dw step on P(w)/(w-1)^m: P_{m+1} = w (P'(w)(w-1) - m P(w))."""
    deriv = [i * c for i, c in enumerate(poly)][1:] or [0]
    inner = [0] * max(len(deriv) + 1, len(poly))
    for i, c in enumerate(deriv):
        inner[i + 1] += c  # w P'
        inner[i] -= c  # -P'
    for i, c in enumerate(poly):
        inner[i] -= m * c
    new = [0] + inner
    while len(new) > 1 and new[-1] == 0:
        new.pop()
    return new


def _numerator(k: int) -> tuple[int, ...]:
    cached = _rep_cache.get(k)
    if cached is not None:
        return cached
    top = max(_rep_cache)
    poly = list(_rep_cache[top])
    for m in range(top, k):
        poly = _apply_operator(poly, m)
        _rep_cache[m + 1] = tuple(poly)
    return _rep_cache[k]


def cot_derivative_rep(k: int) -> CotDerivRep:
    """Symbolic representation of (w d/dw)^(k-1) [1/(w-1)] for k >= 2."""
    if k < 2:
        raise ValueError("k >= 2 required")
    num = _numerator(k)
    assert len(num) - 1 <= k - 1, "numerator degree bound violated"
    return CotDerivRep(k, num)


@dataclass(frozen=True)
class LambdaValue:
    """The exact cyclotomic value of (zeta(k,a/q) + (-1)^k zeta(k,1-a/q)) / (pi i)^k."""

    k: int
    a: int
    q: int
    value: CyclotomicElement

    def to_json(self) -> dict:
        return {"k": self.k, "a": self.a, "q": self.q, "value": self.value.to_json()}


def lambda_exact(k: int, a: int, q: int) -> LambdaValue:
    """Exact normalized pair combination as an element of Q(zeta_q).

    Defined for every coprime residue 1 <= a <= q-1; the reflection law
    lambda(q-a) = (-1)^k lambda(a) recovers the half-range convention.
    """
    if q < 3:
        raise ValueError("q >= 3 required")
    if k < 2:
        raise ValueError("k >= 2 required")
    if not (1 <= a <= q - 1):
        raise ValueError("need 1 <= a <= q-1")
    if gcd(a, q) != 1:
        raise ValueError(f"a = {a} is not coprime to q = {q}")
    # evaluating an integer polynomial at zeta_q^a is exponent bookkeeping:
    # x^j -> x^(aj mod q), followed by one reduction
    raw_num = [0] * q
    for j, c in enumerate(_numerator(k)):
        raw_num[(a * j) % q] += c
    num = CyclotomicElement.from_poly(q, raw_num)
    raw_den = [0] * q
    for i in range(k + 1):
        raw_den[(a * i) % q] += comb(k, i) * (-1) ** (k - i)
    den = CyclotomicElement.from_poly(q, raw_den)
    prefactor = Fraction((-1) ** (k - 1) * 2 ** k, factorial(k - 1))
    return LambdaValue(k, a, q, (num / den) * prefactor)


def bernoulli_sum_lambda(k: int, a: int, q: int, scale: Fraction) -> CyclotomicElement:
    """scale * sum_{b=1..q} (zeta_q^(ab) + (-1)^k zeta_q^(-ab)) B_k(b/q), exact."""
    if gcd(a, q) != 1:
        raise ValueError(f"a = {a} is not coprime to q = {q}")
    sign = (-1) ** k
    raw = [Fraction(0)] * q
    for b in range(1, q + 1):
        bval = bernoulli_poly_eval(k, Fraction(b, q))
        if bval:
            raw[(a * b) % q] += bval
            raw[(-a * b) % q] += sign * bval
    return CyclotomicElement.from_poly(q, raw) * Fraction(scale)


def infer_A(k: int, q: int) -> Fraction:
    """The unique rational scale matching the Bernoulli sum to the exact
    pair value, determined at the smallest usable residue and then verified
    for every coprime residue 1 <= a < q."""
    if q < 3 or k < 2:
        raise ValueError("need q >= 3 and k >= 2")
    residues = [a for a in range(1, q) if gcd(a, q) == 1]
    scale = None
    for a in residues:
        probe = bernoulli_sum_lambda(k, a, q, Fraction(1))
        if not probe:
            continue
        ratio = lambda_exact(k, a, q).value / probe
        if not ratio.is_rational():
            raise InconsistentAError(
                f"ratio at a={a} is not rational for (k={k}, q={q})"
            )
        scale = ratio.rational_value()
        break
    if scale is None:
        raise DegenerateSumError(f"Bernoulli sum vanishes for every residue mod {q}")
    for a in residues:
        if bernoulli_sum_lambda(k, a, q, scale) != lambda_exact(k, a, q).value:
            raise InconsistentAError(
                f"scale {scale} fails at a={a} for (k={k}, q={q})"
            )
    return scale


def verify_strong_identity(k: int, a: int, q: int, ctx: PrecisionContext) -> PrecisionReal:
    """Certified bound on | [zeta(k,a/q) + (-1)^k zeta(k,1-a/q)] - (pi i)^k lambda |.

    The left side comes from Euler-Maclaurin evaluation, the right side from
    the exact cyclotomic value embedded numerically; both routes are
    independent, so the residual is a real consistency certificate.
    """
    if not (1 <= a < q) or gcd(a, q) != 1:
        raise ValueError("need a coprime to q with 1 <= a < q")
    lam = lambda_exact(k, a, q)
    with ctx.workdps(10):
        left = hurwitz_zeta(k, a, q, ctx) + hurwitz_zeta(k, q - a, q, ctx) * ((-1) ** k)
        pi_k = pi_const(ctx).pow_int(k)
        right = (embed_complex(lam.value, ctx) * pi_k).mul_i_power(k)
        diff_re = left - right.real_part()
        diff_im = right.imag_part()
        residual = abs(diff_re.value) + abs(diff_im.value)
        bound = diff_re.error_bound + diff_im.error_bound
        return PrecisionReal(residual, bound)
