"""Integer-relation detection (PSLQ) with certified residuals and exclusion
bounds, plus the named probe sets built from Hurwitz zeta and L(1, chi)
values.

The PSLQ run keeps the usual gamma = 2/sqrt(3) exchange rule and does exact
fixed-point arithmetic internally (deterministic for fixed inputs).  A
relation is reported only after it re-verifies on the original bounded
inputs: the certified residual, which includes the propagated input error
bounds, must fall below the detection threshold 10^(-digits + count + 10).
When no relation surfaces, the run maintains the standard lower-bound
certificate (the reciprocal of the largest diagonal entry of the H matrix
bounds the Euclidean norm of every integer relation from below) and reports
exclusion once that bound covers the requested norm.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

import mpmath as mp

from .errors import ComputationError, PrecisionInsufficientError
from .precision import PrecisionContext, PrecisionReal
from .cyclotomic import dirichlet_characters
from .hurwitz import hurwitz_zeta, l_one_chi, pi_const

__all__ = ["RelationReport", "pslq", "verify_relation", "probe_set", "PROBE_SET_NAMES"]

PROBE_SET_NAMES = ("milnor_hat", "s_space", "s_hat_space", "l_one_even", "v_tr_normalized")


@dataclass
class RelationReport:
    """Outcome of an integer-relation search."""

    status: str  # "found" | "none_up_to_bound"
    coefficients: list[int] | None
    residual: str  # certified upper bound on |sum c_j x_j| (decimal string)
    norm_bound: int | None
    precision_used: int
    iterations: int
    set_members: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "coefficients": self.coefficients,
            "residual": self.residual,
            "norm_bound": self.norm_bound,
            "precision": self.precision_used,
            "iterations": self.iterations,
            "set": self.set_members,
        }


def _mpf_to_fraction(x: mp.mpf) -> Fraction:
    if not mp.isfinite(x):
        raise ValueError("cannot convert a non-finite value exactly")
    sign, man, exp, _ = x._mpf_
    if man == 0:
        return Fraction(0)
    value = Fraction(man) * Fraction(2) ** exp
    return -value if sign else value


def verify_relation(values: list[PrecisionReal], coefficients: list[int]) -> PrecisionReal:
    """Certified bound on |sum c_j x_j|.

    The stored values are dyadic rationals, so the combination is accumulated
    exactly; only the propagated input error bounds remain.
    """
    if len(values) != len(coefficients):
        raise ValueError("values and coefficients must have equal length")
    total = Fraction(0)
    for c, v in zip(coefficients, values):
        if c:
            total += c * _mpf_to_fraction(v.value)
    with mp.extraprec(40):
        err = mp.fsum(abs(c) * v.error_bound for c, v in zip(coefficients, values))
        err = err * (1 + mp.mpf(2) ** -20)
        residual = abs(mp.mpf(total.numerator) / mp.mpf(total.denominator))
        pad = mp.mpf(2) ** (-mp.mp.prec + 4) * residual
        return PrecisionReal(residual, err + pad)


def _normalize_coeffs(vec: list[int]) -> list[int]:
    g = 0
    for c in vec:
        g = gcd(g, c)
    if g > 1:
        vec = [c // g for c in vec]
    for c in vec:
        if c:
            return vec if c > 0 else [-x for x in vec]
    return vec


def _round_fixed(x: int, prec: int) -> int:
    return ((x + (1 << (prec - 1))) >> prec) << prec


def _sqrt_fixed(x: int, prec: int) -> int:
    return isqrt(x << prec)


def pslq(values: list[PrecisionReal], max_norm: int, ctx: PrecisionContext) -> RelationReport:
    """Search for integers c with |sum c_j x_j| below the detection threshold.

    Returns a found relation (gcd-reduced, first nonzero coefficient
    positive) with its certified residual, or a none_up_to_bound report whose
    norm_bound certifies that no integer relation of Euclidean norm up to
    norm_bound exists at the working precision.  Raises
    PrecisionInsufficientError when the input error bounds, or the iteration
    cap 50 * count * digits, prevent a decision.
    """
    n = len(values)
    if n < 2:
        raise ValueError("need at least two values")
    if max_norm < 1:
        raise ValueError("max_norm must be positive")
    digits = ctx.digits
    if digits < 20 + 10 * n:
        raise ValueError(f"digits must be at least 20 + 10*count = {20 + 10 * n}")

    with ctx.workdps(10):
        target = ctx.target_bound()
        detect_tol = mp.mpf(10) ** (-(digits - n - 10))
        for v in values:
            if not v.error_bound <= target:
                raise PrecisionInsufficientError(
                    "input error bounds exceed 10^-digits; re-evaluate inputs at higher precision"
                )
        # a value indistinguishable from zero is already a unit relation
        for j, v in enumerate(values):
            if v.upper() < detect_tol:
                coeffs = [0] * n
                coeffs[j] = 1
                residual = verify_relation(values, coeffs)
                return RelationReport(
                    "found", coeffs, mp.nstr(residual.upper(), 8), None, digits, 0
                )

        prec = mp.mp.prec + 64
        xs = [int(mp.ldexp(v.value, prec)) for v in values]
        scale = mp.fsum(v.value ** 2 for v in values) ** 0.5
        internal_tol = int(mp.ldexp(10 * detect_tol / scale, prec))
        if internal_tol <= 0:
            internal_tol = 1

        # --- initialization (Bailey's pseudocode, 0-indexed) ---
        ssq = [0] * n
        acc = 0
        for k in range(n - 1, -1, -1):
            acc += (xs[k] * xs[k]) >> prec
            ssq[k] = acc
        s = [_sqrt_fixed(v, prec) for v in ssq]
        t = s[0]
        if t == 0:
            raise PrecisionInsufficientError("input vector is numerically zero")
        y = [(xk << prec) // t for xk in xs]
        s = [(sk << prec) // t for sk in s]
        B = [[(1 << prec) if i == j else 0 for j in range(n)] for i in range(n)]
        H = [[0] * (n - 1) for _ in range(n)]
        for i in range(n):
            if i <= n - 2 and s[i]:
                H[i][i] = (s[i + 1] << prec) // s[i]
            for j in range(i):
                sjj1 = s[j] * s[j + 1]
                if sjj1:
                    H[i][j] = ((-y[i] * y[j]) << prec) // sjj1
        for i in range(1, n):
            for j in range(i - 1, -1, -1):
                if not H[j][j]:
                    continue
                tq = _round_fixed((H[i][j] << prec) // H[j][j], prec)
                if not tq:
                    continue
                y[j] += (tq * y[i]) >> prec
                for k in range(j + 1):
                    H[i][k] -= (tq * H[j][k]) >> prec
                for k in range(n):
                    B[k][j] += (tq * B[k][i]) >> prec

        g_fixed = _sqrt_fixed((4 << prec) // 3, prec)
        max_iterations = 50 * n * digits
        best_bound = 0
        iteration = 0

        while iteration < max_iterations:
            iteration += 1
            # exchange step: maximize gamma^i |H_ii|
            m = 0
            szmax = -1
            gpow = 1 << prec
            for i in range(n - 1):
                gpow = (gpow * g_fixed) >> prec
                sz = (gpow * abs(H[i][i])) >> prec
                if sz > szmax:
                    szmax = sz
                    m = i
            y[m], y[m + 1] = y[m + 1], y[m]
            H[m], H[m + 1] = H[m + 1], H[m]
            for row in B:
                row[m], row[m + 1] = row[m + 1], row[m]
            if m <= n - 3:
                t0 = _sqrt_fixed((H[m][m] ** 2 + H[m][m + 1] ** 2) >> prec, prec)
                if not t0:
                    raise PrecisionInsufficientError("working precision exhausted")
                t1 = (H[m][m] << prec) // t0
                t2 = (H[m][m + 1] << prec) // t0
                for i in range(m, n):
                    h1, h2 = H[i][m], H[i][m + 1]
                    H[i][m] = (t1 * h1 + t2 * h2) >> prec
                    H[i][m + 1] = (t1 * h2 - t2 * h1) >> prec
            for i in range(m + 1, n):
                for j in range(min(i - 1, m + 1), -1, -1):
                    if not H[j][j]:
                        continue
                    tq = _round_fixed((H[i][j] << prec) // H[j][j], prec)
                    if not tq:
                        continue
                    y[j] += (tq * y[i]) >> prec
                    for k in range(j + 1):
                        H[i][k] -= (tq * H[j][k]) >> prec
                    for k in range(n):
                        B[k][j] += (tq * B[k][i]) >> prec

            # detection: a tiny y entry names a candidate column of B
            for i in range(n):
                if abs(y[i]) < internal_tol:
                    vec = [_round_fixed(B[j][i], prec) >> prec for j in range(n)]
                    if not any(vec):
                        continue
                    vec = _normalize_coeffs(vec)
                    residual = verify_relation(values, vec)
                    input_err = mp.fsum(
                        abs(c) * v.error_bound for c, v in zip(vec, values)
                    )
                    if residual.upper() < detect_tol:
                        if 10 * input_err >= detect_tol:
                            raise PrecisionInsufficientError(
                                "input error bounds dominate the detection threshold"
                            )
                        if max(abs(c) for c in vec) <= max_norm:
                            return RelationReport(
                                "found",
                                vec,
                                mp.nstr(residual.upper(), 8),
                                None,
                                digits,
                                iteration,
                            )
                        # a relation exists beyond the requested bound; the
                        # exclusion certificate below is still valid
                        return RelationReport(
                            "none_up_to_bound",
                            None,
                            mp.nstr(residual.upper(), 8),
                            best_bound,
                            digits,
                            iteration,
                        )

            # exclusion certificate from the H diagonal
            diag = max(abs(H[j][j]) for j in range(n - 1))
            if diag:
                bound_fixed = ((1 << (2 * prec)) // diag) >> prec
                norm_bound = max(0, bound_fixed * 99 // 100 - 1)
                best_bound = max(best_bound, norm_bound)
            if best_bound >= max_norm:
                return RelationReport(
                    "none_up_to_bound",
                    None,
                    mp.nstr(detect_tol, 8),
                    best_bound,
                    digits,
                    iteration,
                )

        raise PrecisionInsufficientError(
            f"no decision within {max_iterations} iterations at {digits} digits"
        )


# ---------------------------------------------------------------------------
# named probe sets
# ---------------------------------------------------------------------------

def _coprime_residues(q: int) -> list[int]:
    return [a for a in range(1, q) if gcd(a, q) == 1]


def _zeta_over_pik(k: int, q: int, ctx: PrecisionContext):
    pik = pi_const(ctx).pow_int(k)
    values, names = [], []
    for a in _coprime_residues(q):
        values.append(hurwitz_zeta(k, a, q, ctx) / pik)
        names.append(f"zeta({k},{a}/{q})/pi^{k}")
    return values, names


def _build_milnor_hat(k: int, q: int, ctx: PrecisionContext):
    values, names = [], []
    for a in _coprime_residues(q):
        values.append(hurwitz_zeta(k, a, q, ctx))
        names.append(f"zeta({k},{a}/{q})")
    values.append(PrecisionReal.from_exact(1))
    names.append("1")
    return values, names


def _build_s_space(k: int, q: int, ctx: PrecisionContext):
    return _zeta_over_pik(k, q, ctx)


def _build_s_hat_space(k: int, q: int, ctx: PrecisionContext):
    values, names = _zeta_over_pik(k, q, ctx)
    values.append(PrecisionReal.from_exact(1))
    names.append("1")
    return values, names


def _build_v_tr_normalized(k: int, q: int, ctx: PrecisionContext):
    """Opposite-parity pair combinations (zeta(k,a/q) + (-1)^(k+1) zeta(k,1-a/q)) / pi^k."""
    pik = pi_const(ctx).pow_int(k)
    sign = (-1) ** (k + 1)
    values, names = [], []
    for a in _coprime_residues(q):
        if 2 * a > q:
            break
        pair = hurwitz_zeta(k, a, q, ctx) + hurwitz_zeta(k, q - a, q, ctx) * sign
        values.append(pair / pik)
        op = "+" if sign > 0 else "-"
        names.append(f"(zeta({k},{a}/{q}) {op} zeta({k},{q - a}/{q}))/pi^{k}")
    values.append(PrecisionReal.from_exact(1))
    names.append("1")
    return values, names


def _build_l_one_even(_k, q: int, ctx: PrecisionContext):
    values, names = [], []
    for chi in dirichlet_characters(q):
        if chi.is_principal or not chi.is_even:
            continue
        lval = l_one_chi(chi, ctx)
        if lval.is_real_within_bound():
            values.append(lval.real_part())
            names.append(f"L(1,chi_{q}.{chi.index})")
        else:
            values.append(lval.real_part())
            names.append(f"Re L(1,chi_{q}.{chi.index})")
            values.append(lval.imag_part())
            names.append(f"Im L(1,chi_{q}.{chi.index})")
    values.append(PrecisionReal.from_exact(1))
    names.append("1")
    return values, names


_BUILDERS = {
    "milnor_hat": _build_milnor_hat,
    "s_space": _build_s_space,
    "s_hat_space": _build_s_hat_space,
    "l_one_even": _build_l_one_even,
    "v_tr_normalized": _build_v_tr_normalized,
}


def probe_set(
    name: str,
    k: int | None,
    q: int,
    max_norm: int,
    ctx: PrecisionContext,
) -> RelationReport:
    """Evaluate one of the named generating sets and run the relation search.

    Real values only: complex L-values split into separate real and
    imaginary entries, so one PSLQ code path covers everything.
    """
    if name not in _BUILDERS:
        raise ValueError(f"unknown probe set {name!r}; expected one of {PROBE_SET_NAMES}")
    if name != "l_one_even":
        if k is None or k < 2:
            raise ValueError("k >= 2 required for this probe set")
        if q < 3:
            raise ValueError("q >= 3 required")
    elif q < 3:
        raise ValueError("q >= 3 required")
    with ctx.workdps(10):
        values, names = _BUILDERS[name](k, q, ctx)
    if len(values) < 2:
        raise ComputationError(f"probe set {name!r} has fewer than two members at q={q}")
    report = pslq(values, max_norm, ctx)
    report.set_members = names
    return report
