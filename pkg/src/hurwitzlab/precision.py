"""Multiprecision values carrying explicit absolute error bounds.

A PrecisionReal/PrecisionComplex is an mpmath value plus a machine upper
bound on its absolute error.  Arithmetic propagates the bounds outward
(interval style) and pads every operation with a handful of ulps at the
*active* mpmath precision, so compute with these inside the context's
``workdps`` scope.  Bounds are deliberately conservative: downstream
relation searches must be able to trust them as hard thresholds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

__all__ = ["PrecisionContext", "PrecisionReal", "PrecisionComplex"]

_MIN_DIGITS = 15
_MIN_GUARD = 10


@dataclass(frozen=True)
class PrecisionContext:
    """Requested decimal precision plus guard digits for internal work.

    Every operation taking a context returns values with absolute error
    at most 10^(-digits).
    """

    digits: int = 50
    working_guard: int = 10

    def __post_init__(self) -> None:
        if self.digits < _MIN_DIGITS:
            raise ValueError(f"precision must be at least {_MIN_DIGITS} digits")
        if self.working_guard < _MIN_GUARD:
            raise ValueError(f"guard must be at least {_MIN_GUARD} digits")

    @property
    def working_digits(self) -> int:
        return self.digits + self.working_guard

    def workdps(self, extra: int = 0):
        """mpmath precision scope for computations under this context."""
        return mp.workdps(self.working_digits + extra)

    def target_bound(self) -> mp.mpf:
        with mp.workdps(self.working_digits):
            return mp.mpf(10) ** (-self.digits)


def _pad(magnitude) -> mp.mpf:
    # a few ulps of outward rounding at the active precision
    return 8 * mp.eps * (abs(magnitude) + mp.eps)


def _make_mpc(re_val, im_val) -> mp.mpc:
    """Assemble an mpc without rounding the components to the ambient precision."""
    re_val = re_val if isinstance(re_val, mp.mpf) else mp.mpf(re_val)
    im_val = im_val if isinstance(im_val, mp.mpf) else mp.mpf(im_val)
    bits = max(re_val._mpf_[3], im_val._mpf_[3], mp.mp.prec) + 8
    with mp.workprec(bits):
        return mp.mpc(re_val, im_val)


def _to_mpf_exact(r) -> tuple[mp.mpf, mp.mpf]:
    """Convert int/Fraction to (mpf, conversion error bound)."""
    if isinstance(r, int):
        v = mp.mpf(r)
        err = mp.mpf(0) if int(v) == r else _pad(v)
        return v, err
    f = Fraction(r)
    v = mp.mpf(f.numerator) / mp.mpf(f.denominator)
    return v, _pad(v)


class PrecisionReal:
    """A real number known to lie within [value - error_bound, value + error_bound]."""

    __slots__ = ("value", "error_bound")

    def __init__(self, value, error_bound=0) -> None:
        # keep mpf inputs verbatim: mp.mpf(mpf) would re-round at the ambient
        # precision and silently discard digits
        self.value = value if isinstance(value, mp.mpf) else mp.mpf(value)
        self.error_bound = (
            error_bound if isinstance(error_bound, mp.mpf) else mp.mpf(error_bound)
        )
        if not (self.error_bound >= 0 and mp.isfinite(self.error_bound)):
            raise ValueError("error bound must be finite and nonnegative")

    @classmethod
    def from_exact(cls, r) -> "PrecisionReal":
        v, err = _to_mpf_exact(r)
        return cls(v, err)

    @staticmethod
    def _coerce(other) -> "PrecisionReal":
        if isinstance(other, PrecisionReal):
            return other
        if isinstance(other, (int, Fraction)):
            return PrecisionReal.from_exact(other)
        raise TypeError(f"cannot mix PrecisionReal with {type(other).__name__}")

    def upper(self) -> mp.mpf:
        """Upper bound on |true value|."""
        return abs(self.value) + self.error_bound

    def lower_abs(self) -> mp.mpf:
        """Lower bound on |true value| (0 when the interval straddles zero)."""
        lo = abs(self.value) - self.error_bound
        return lo if lo > 0 else mp.mpf(0)

    def __neg__(self) -> "PrecisionReal":
        return PrecisionReal(-self.value, self.error_bound)

    def __abs__(self) -> "PrecisionReal":
        return PrecisionReal(abs(self.value), self.error_bound)

    def __add__(self, other) -> "PrecisionReal":
        other = self._coerce(other)
        v = self.value + other.value
        e = self.error_bound + other.error_bound + _pad(v)
        return PrecisionReal(v, e)

    __radd__ = __add__

    def __sub__(self, other) -> "PrecisionReal":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PrecisionReal":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "PrecisionReal":
        other = self._coerce(other)
        v = self.value * other.value
        e = (
            abs(self.value) * other.error_bound
            + abs(other.value) * self.error_bound
            + self.error_bound * other.error_bound
            + _pad(v)
        )
        return PrecisionReal(v, e)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "PrecisionReal":
        other = self._coerce(other)
        denom_lo = other.lower_abs()
        if denom_lo == 0:
            raise ZeroDivisionError("divisor is not resolvably nonzero")
        v = self.value / other.value
        e = (abs(v) * other.error_bound + self.error_bound) / denom_lo + _pad(v)
        return PrecisionReal(v, e)

    def pow_int(self, k: int) -> "PrecisionReal":
        if k < 0:
            return PrecisionReal.from_exact(1) / self.pow_int(-k)
        out = PrecisionReal.from_exact(1)
        base = self
        n = k
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def contains(self, x) -> bool:
        return abs(self.value - mp.mpf(x)) <= self.error_bound

    def __repr__(self) -> str:
        return f"PrecisionReal({mp.nstr(self.value, 20)}, err<={mp.nstr(self.error_bound, 3)})"

    def to_json(self, digits: int) -> dict:
        return {
            "value": mp.nstr(self.value, digits, strip_zeros=False),
            "error_bound": mp.nstr(self.error_bound, 3),
            "digits": digits,
        }


def sum_reals(items) -> PrecisionReal:
    """Sum with a single outward pad per term (tighter than folding __add__)."""
    items = list(items)
    if not items:
        return PrecisionReal(0, 0)
    v = mp.fsum(x.value for x in items)
    e = mp.fsum(x.error_bound for x in items) + len(items) * _pad(
        mp.fsum(abs(x.value) for x in items)
    )
    return PrecisionReal(v, e)


class PrecisionComplex:
    """A complex number within distance error_bound of value."""

    __slots__ = ("value", "error_bound")

    def __init__(self, value, error_bound=0) -> None:
        self.value = value if isinstance(value, mp.mpc) else mp.mpc(value)
        self.error_bound = (
            error_bound if isinstance(error_bound, mp.mpf) else mp.mpf(error_bound)
        )
        if not (self.error_bound >= 0 and mp.isfinite(self.error_bound)):
            raise ValueError("error bound must be finite and nonnegative")

    @classmethod
    def from_parts(cls, re: PrecisionReal, im: PrecisionReal) -> "PrecisionComplex":
        return cls(_make_mpc(re.value, im.value), re.error_bound + im.error_bound)

    @classmethod
    def from_real(cls, re: PrecisionReal) -> "PrecisionComplex":
        return cls(_make_mpc(re.value, 0), re.error_bound)

    def real_part(self) -> PrecisionReal:
        return PrecisionReal(self.value.real, self.error_bound)

    def imag_part(self) -> PrecisionReal:
        return PrecisionReal(self.value.imag, self.error_bound)

    def upper(self) -> mp.mpf:
        return abs(self.value) + self.error_bound

    def is_real_within_bound(self) -> bool:
        return abs(self.value.imag) <= self.error_bound

    def __neg__(self) -> "PrecisionComplex":
        return PrecisionComplex(-self.value, self.error_bound)

    def __add__(self, other) -> "PrecisionComplex":
        other = self._coerce(other)
        v = self.value + other.value
        return PrecisionComplex(v, self.error_bound + other.error_bound + _pad(abs(v)))

    __radd__ = __add__

    def __sub__(self, other) -> "PrecisionComplex":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "PrecisionComplex":
        other = self._coerce(other)
        v = self.value * other.value
        e = (
            abs(self.value) * other.error_bound
            + abs(other.value) * self.error_bound
            + self.error_bound * other.error_bound
            + _pad(abs(v))
        )
        return PrecisionComplex(v, e)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "PrecisionComplex":
        other = self._coerce(other)
        denom_lo = abs(other.value) - other.error_bound
        if denom_lo <= 0:
            raise ZeroDivisionError("divisor is not resolvably nonzero")
        v = self.value / other.value
        e = (abs(v) * other.error_bound + self.error_bound) / denom_lo + _pad(abs(v))
        return PrecisionComplex(v, e)

    @staticmethod
    def _coerce(other) -> "PrecisionComplex":
        if isinstance(other, PrecisionComplex):
            return other
        if isinstance(other, PrecisionReal):
            return PrecisionComplex.from_real(other)
        if isinstance(other, (int, Fraction)):
            return PrecisionComplex.from_real(PrecisionReal.from_exact(other))
        raise TypeError(f"cannot mix PrecisionComplex with {type(other).__name__}")

    def mul_i_power(self, k: int) -> "PrecisionComplex":
        """Multiply by i^k exactly (component swap/negation, no rounding)."""
        k %= 4
        re, im = self.value.real, self.value.imag
        if k == 0:
            v = self.value
        elif k == 1:
            v = _make_mpc(-im, re)
        elif k == 2:
            v = _make_mpc(-re, -im)
        else:
            v = _make_mpc(im, -re)
        return PrecisionComplex(v, self.error_bound)

    def __repr__(self) -> str:
        return f"PrecisionComplex({mp.nstr(self.value, 20)}, err<={mp.nstr(self.error_bound, 3)})"

    def to_json(self, digits: int) -> dict:
        return {
            "value": {
                "re": mp.nstr(self.value.real, digits, strip_zeros=False),
                "im": mp.nstr(self.value.imag, digits, strip_zeros=False),
            },
            "error_bound": mp.nstr(self.error_bound, 3),
            "digits": digits,
        }
