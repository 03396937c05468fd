"""Independent reference computations used only by the tests.

Everything here deliberately avoids the code paths of the package under
test: Bernoulli numbers come from the Akiyama-Tanigawa triangle and an
even-index binomial recurrence, pi from a Machin arctangent series, zeta
values from direct summation with an integral bracket (or from mpmath's own
implementation where a bracket cannot reach the needed precision), and
L(1, chi) from conductor reduction plus the Gauss-sum logarithm formula.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd

import mpmath as mp


# ---------------------------------------------------------------------------
# Bernoulli oracles
# ---------------------------------------------------------------------------

def bernoulli_akiyama_tanigawa(n: int) -> list[Fraction]:
    """B_0..B_n by the Akiyama-Tanigawa triangle ("second" convention,
    B_1 = +1/2; even indices agree with every convention)."""
    row = [Fraction(0)] * (n + 1)
    out: list[Fraction] = []
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    return out


def bernoulli_even_binomial(j: int) -> Fraction:
    """B_{2j} via the binomial recurrence restricted to even indices."""
    if j == 0:
        return Fraction(1)
    evens = [Fraction(1)]
    for m in range(1, j + 1):
        n = 2 * m
        s = Fraction(0)
        for i in range(m):
            s += comb(n + 1, 2 * i) * evens[i]
        s += Fraction(n + 1) * Fraction(-1, 2)  # the B_1 = -1/2 term
        evens.append(-s / (n + 1))
    return evens[j]


# ---------------------------------------------------------------------------
# pi via Machin's formula (own arctangent series, no mp.pi involved)
# ---------------------------------------------------------------------------

def machin_pi(dps: int) -> mp.mpf:
    with mp.workdps(dps + 15):
        def acot(m: int) -> mp.mpf:
            total = mp.mpf(0)
            term = mp.mpf(1) / m
            m2 = m * m
            j = 0
            while abs(term) > mp.mpf(10) ** (-(dps + 10)):
                total += term / (2 * j + 1) * (-1) ** j
                term /= m2
                j += 1
            return total

        return +(16 * acot(5) - 4 * acot(239))


# ---------------------------------------------------------------------------
# zeta brackets
# ---------------------------------------------------------------------------

def zeta_direct_bracket(k: int, a: int, q: int, nterms: int, dps: int):
    """(lo, hi) bracketing zeta(k, a/q): partial sum plus integral bounds
    for the tail sum_{n >= N} (n + x)^(-k)."""
    with mp.workdps(dps):
        x = mp.mpf(a) / q
        partial = mp.fsum((n + x) ** (-k) for n in range(nterms))
        tail_lo = (nterms + x) ** (1 - k) / (k - 1)
        tail_hi = (nterms - 1 + x) ** (1 - k) / (k - 1)
        slack = mp.mpf(10) ** (-(dps - 10))
        return partial + tail_lo - slack, partial + tail_hi + slack


def alternating_bracket(terms) -> tuple[mp.mpf, mp.mpf]:
    """Bracket the limit of an alternating series with decreasing |terms|:
    consecutive partial sums enclose it."""
    s_prev = None
    s = mp.mpf(0)
    for t in terms:
        s_prev = s
        s = s + t
    lo, hi = (s, s_prev) if s < s_prev else (s_prev, s)
    return lo, hi


def eta2_bracket(nterms: int, dps: int):
    """sum (-1)^(n+1)/n^2 = pi^2/12."""
    with mp.workdps(dps):
        return alternating_bracket(
            mp.mpf((-1) ** (n + 1)) / (n * n) for n in range(1, nterms + 1)
        )


def beta3_bracket(nterms: int, dps: int):
    """sum (-1)^n/(2n+1)^3 = pi^3/32."""
    with mp.workdps(dps):
        return alternating_bracket(
            mp.mpf((-1) ** n) / (2 * n + 1) ** 3 for n in range(nterms)
        )


def zeta_ref(k: int, a: int, q: int, dps: int) -> mp.mpf:
    """mpmath's own Hurwitz zeta (an implementation independent of the
    package) at high precision."""
    with mp.workdps(dps):
        return +mp.zeta(k, mp.mpf(a) / q)


# ---------------------------------------------------------------------------
# L(1, chi) via conductor reduction + Gauss-sum logarithm formula
# ---------------------------------------------------------------------------

def embed_element(elem, dps: int) -> mp.mpc:
    """Numeric value of a cyclotomic element, written directly against mpmath."""
    with mp.workdps(dps):
        q = elem.modulus
        total = mp.mpc(0)
        for i, c in enumerate(elem.coeffs):
            if c:
                cv = mp.mpf(c.numerator) / c.denominator
                total += cv * mp.exp(2j * mp.pi * i / q)
        return total


def character_conductor(chi) -> int:
    """Smallest f | q such that chi factors through residues mod f."""
    q = chi.modulus
    for f in sorted(d for d in range(1, q + 1) if q % d == 0):
        classes: dict[int, object] = {}
        ok = True
        for a in range(1, q + 1):
            if gcd(a, q) != 1:
                continue
            key = a % f
            if key in classes and classes[key] != chi(a):
                ok = False
                break
            classes[key] = chi(a)
        if ok:
            return f
    raise AssertionError("unreachable: q itself always works")


def primitive_values(chi, f: int) -> dict[int, object]:
    """Values of the primitive character mod f that induces chi."""
    q = chi.modulus
    values = {}
    for b in range(1, f + 1):
        if gcd(b, f) != 1:
            continue
        y = b
        while gcd(y, q) != 1:
            y += f
        values[b % f] = chi(y)
    return values


def l_one_chi_oracle(chi, dps: int) -> mp.mpc:
    """L(1, chi) for non-principal chi: reduce to the primitive character
    chi* mod f, apply
        L(1, chi*) = -(1/tau(conj chi*)) sum_b conj(chi*(b)) Log(1 - zeta_f^b),
    then multiply the Euler factors (1 - chi*(p)/p) over primes p | q, p
    not dividing f."""
    assert not chi.is_principal
    q = chi.modulus
    f = character_conductor(chi)
    values = primitive_values(chi, f)
    with mp.workdps(dps + 20):
        embedded = {b: embed_element(v, dps + 20) for b, v in values.items()}
        tau_bar = mp.fsum(
            (mp.conj(embedded[b]) * mp.exp(2j * mp.pi * b / f) for b in embedded),
            absolute=False,
        )
        total = mp.mpc(0)
        for b in embedded:
            total += mp.conj(embedded[b]) * mp.log(1 - mp.exp(2j * mp.pi * b / f))
        lval = -total / tau_bar
        p = 2
        m = q
        while p <= m:
            if m % p == 0:
                if f % p != 0:
                    lval *= 1 - embedded.get(p % f, _chi_star_at(values, embedded, p, f)) / p
                while m % p == 0:
                    m //= p
            p += 1
        return +lval


def _chi_star_at(values, embedded, p: int, f: int) -> mp.mpc:
    key = p % f
    if key in embedded:
        return embedded[key]
    return mp.mpc(0)
