"""Exact arithmetic in cyclotomic fields Q(zeta_q) and their abelian subfields.

Elements are stored canonically in the power basis {1, zeta, ..., zeta^(phi(q)-1)}
after reduction modulo the q-th cyclotomic polynomial, with Fraction
coefficients, so two elements are equal iff their coefficient tuples are.
Abelian subfields are described through the Galois correspondence by the
subgroup of (Z/mZ)* that fixes them; Kronecker-Weber makes this fully general
for the fields that arise here (Q, Q(i), quadratic fields, Q(zeta_q), ...).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

import mpmath as mp

from .precision import PrecisionComplex, PrecisionContext, _pad

__all__ = [
    "CyclotomicElement",
    "UnitGroupStruct",
    "AbelianFieldDesc",
    "DirichletCharacter",
    "euler_phi",
    "unit_group",
    "cyclotomic_polynomial",
    "cyclo_arith",
    "change_modulus",
    "galois_apply",
    "embed_complex",
    "subfield_intersection",
    "is_rational_intersection",
    "relative_rank",
    "dirichlet_characters",
    "exact_rank",
]


# ---------------------------------------------------------------------------
# integer utilities
# ---------------------------------------------------------------------------

def _factorize(m: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


_phi_cache: dict[int, int] = {}


def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("modulus must be positive")
    if m in _phi_cache:
        return _phi_cache[m]
    phi = 1
    for p, e in _factorize(m):
        phi *= (p - 1) * p ** (e - 1)
    _phi_cache[m] = phi
    return phi


def _norm_residue(r: int, m: int) -> int:
    """Residue representative in 1..m (so the identity is 1 even for m = 1)."""
    return (r - 1) % m + 1


# ---------------------------------------------------------------------------
# cyclotomic polynomials (dense integer coefficients, ascending)
# ---------------------------------------------------------------------------

_cyclo_cache: dict[int, tuple[int, ...]] = {1: (-1, 1)}


def _int_poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        assert r == 0, "non-exact cyclotomic division"
        out[i - dn] = q
        for j, dc in enumerate(den):
            num[i - dn + j] -= q * dc
    assert not any(num), "nonzero remainder in cyclotomic division"
    return out


def cyclotomic_polynomial(q: int) -> tuple[int, ...]:
    """Coefficients of the q-th cyclotomic polynomial (cached, idempotent fill)."""
    if q < 1:
        raise ValueError("modulus must be positive")
    cached = _cyclo_cache.get(q)
    if cached is not None:
        return cached
    num = [0] * (q + 1)
    num[0], num[q] = -1, 1  # x^q - 1
    poly = num
    for d in range(1, q):
        if q % d == 0:
            poly = _int_poly_divexact(poly, cyclotomic_polynomial(d))
    result = tuple(poly)
    assert len(result) == euler_phi(q) + 1 and result[-1] == 1
    _cyclo_cache[q] = result
    return result


def _reduce_mod_cyclotomic(q: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(q)
    deg = len(phi) - 1
    work = list(coeffs)
    if len(work) < deg:
        work += [Fraction(0)] * (deg - len(work))
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c:
            base = i - deg
            for j in range(deg):
                if phi[j]:
                    work[base + j] -= c * phi[j]
        work[i] = Fraction(0)
    return tuple(work[:deg])


# ---------------------------------------------------------------------------
# field elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclotomicElement:
    """An element of Q(zeta_q) in reduced power-basis coordinates."""

    modulus: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if len(self.coeffs) != euler_phi(self.modulus):
            raise ValueError("coefficient vector has wrong length for the power basis")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_poly(cls, q: int, coeffs) -> "CyclotomicElement":
        work = [Fraction(c) for c in coeffs]
        return cls(q, _reduce_mod_cyclotomic(q, work))

    @classmethod
    def zero(cls, q: int) -> "CyclotomicElement":
        return cls(q, tuple([Fraction(0)] * euler_phi(q)))

    @classmethod
    def one(cls, q: int) -> "CyclotomicElement":
        return cls.from_rational(q, Fraction(1))

    @classmethod
    def from_rational(cls, q: int, r) -> "CyclotomicElement":
        work = [Fraction(r)] + [Fraction(0)] * (euler_phi(q) - 1)
        return cls(q, _reduce_mod_cyclotomic(q, work))

    @classmethod
    def zeta(cls, q: int, exponent: int = 1) -> "CyclotomicElement":
        e = exponent % q
        coeffs = [Fraction(0)] * (e + 1)
        coeffs[e] = Fraction(1)
        return cls.from_poly(q, coeffs)

    # -- predicates ---------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    # -- ring operations ----------------------------------------------------

    def _check_same(self, other: "CyclotomicElement") -> None:
        if self.modulus != other.modulus:
            raise ValueError(
                "operands live in different cyclotomic fields; lift to a common modulus first"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicElement.from_rational(self.modulus, other)
        self._check_same(other)
        return CyclotomicElement(
            self.modulus, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.modulus, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicElement.from_rational(self.modulus, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return CyclotomicElement(self.modulus, tuple(a * c for a in self.coeffs))
        self._check_same(other)
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CyclotomicElement(self.modulus, _reduce_mod_cyclotomic(self.modulus, prod))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        """Multiplicative inverse via the extended Euclidean algorithm against
        the cyclotomic polynomial (which is irreducible, so any nonzero element
        is invertible)."""
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.modulus)]
        old_r, r = list(self.coeffs), phi
        old_t, t = [Fraction(1)], [Fraction(0)]
        while _poly_degree(r) >= 0:
            quo = _fpoly_quotient(old_r, r)
            old_r, r = r, _fpoly_sub(old_r, _fpoly_mul(quo, r))
            old_t, t = t, _fpoly_sub(old_t, _fpoly_mul(quo, t))
        # old_r is now a nonzero constant c with old_t * self == c (mod Phi_q)
        const = old_r[0]
        inv_coeffs = [c / const for c in old_t]
        return CyclotomicElement(self.modulus, _reduce_mod_cyclotomic(self.modulus, inv_coeffs))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                raise ZeroDivisionError("division by zero")
            return self * (1 / c)
        self._check_same(other)
        return self * other.inverse()

    def __pow__(self, n: int) -> "CyclotomicElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = CyclotomicElement.one(self.modulus)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- conversions --------------------------------------------------------

    def galois(self, r: int) -> "CyclotomicElement":
        return galois_apply(r, self)

    def lifted(self, m: int) -> "CyclotomicElement":
        return change_modulus(self, m)

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "CyclotomicElement":
        return cls(int(data["modulus"]), tuple(Fraction(c) for c in data["coeffs"]))


# dense Fraction-polynomial helpers for the extended Euclid above

def _poly_degree(p: list[Fraction]) -> int:
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return -1


def _fpoly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    while len(out) > 1 and not out[-1]:
        out.pop()
    return out


def _fpoly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _fpoly_quotient(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    da, db = _poly_degree(a), _poly_degree(b)
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    if da < db:
        return [Fraction(0)]
    out = [Fraction(0)] * (da - db + 1)
    lead = b[db]
    for i in range(da, db - 1, -1):
        c = rem[i]
        if c:
            f = c / lead
            out[i - db] = f
            for j in range(db + 1):
                rem[i - db + j] -= f * b[j]
    return out


def cyclo_arith(op: str, x: CyclotomicElement | None, y: CyclotomicElement) -> CyclotomicElement:
    """Dispatcher form of the field arithmetic: op in {add, sub, mul, inv}.

    ``inv`` is unary and inverts ``y`` (``x`` is ignored).
    """
    if op == "inv":
        return y.inverse()
    if x is None:
        raise ValueError("binary operation needs two operands")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown operation {op!r}")


def change_modulus(x: CyclotomicElement, m: int) -> CyclotomicElement:
    """Image of x under the inclusion Q(zeta_q) -> Q(zeta_m), zeta_q -> zeta_m^(m/q)."""
    q = x.modulus
    if m % q != 0:
        raise ValueError(f"no natural inclusion: {q} does not divide {m}")
    step = m // q
    coeffs = [Fraction(0)] * m
    for i, c in enumerate(x.coeffs):
        if c:
            coeffs[i * step] += c
    return CyclotomicElement.from_poly(m, coeffs)


def galois_apply(r: int, x: CyclotomicElement) -> CyclotomicElement:
    """Apply the automorphism zeta_q -> zeta_q^r (requires gcd(r, q) = 1)."""
    q = x.modulus
    if gcd(r, q) != 1:
        raise ValueError(f"{r} is not coprime to {q}: not a Galois automorphism")
    coeffs = [Fraction(0)] * q
    for i, c in enumerate(x.coeffs):
        if c:
            coeffs[(i * r) % q] += c
    return CyclotomicElement.from_poly(q, coeffs)


def embed_complex(x: CyclotomicElement, ctx: PrecisionContext) -> PrecisionComplex:
    """Numeric value of x under zeta_q -> exp(2 pi i / q), with error bound."""
    q = x.modulus
    with ctx.workdps(5):
        total = mp.mpc(0)
        abssum = mp.mpf(0)
        terms = 0
        for i, c in enumerate(x.coeffs):
            if not c:
                continue
            cv = mp.mpf(c.numerator) / mp.mpf(c.denominator)
            total += cv * mp.expjpi(mp.mpf(2 * i) / q)
            abssum += abs(cv)
            terms += 1
        bound = (12 * terms + 8) * mp.eps * (abssum + abs(total) + 1)
        return PrecisionComplex(total, bound)


# ---------------------------------------------------------------------------
# unit groups (Z/mZ)*
# ---------------------------------------------------------------------------

def _primitive_root_mod_p(p: int) -> int:
    if p == 2:
        return 1
    factors = [f for f, _ in _factorize(p - 1)]
    g = 2
    while True:
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
        g += 1


def _prime_power_generators(p: int, e: int) -> list[tuple[int, int]]:
    """Generators (residue, order) of (Z/p^eZ)* for one prime power."""
    if p == 2:
        if e == 1:
            return []
        if e == 2:
            return [(3, 2)]
        return [(2 ** e - 1, 2), (5, 2 ** (e - 2))]
    g = _primitive_root_mod_p(p)
    if e > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    return [(g, (p - 1) * p ** (e - 1))]


@dataclass(frozen=True)
class UnitGroupStruct:
    """Cyclic decomposition of (Z/mZ)*: generators with their orders."""

    modulus: int
    generators: tuple[int, ...]
    orders: tuple[int, ...]
    order: int

    @property
    def exponent(self) -> int:
        return lcm(*self.orders) if self.orders else 1

    @cached_property
    def residue_log(self) -> dict[int, tuple[int, ...]]:
        """Map residue -> exponent tuple over the generators."""
        out: dict[int, tuple[int, ...]] = {}
        m = self.modulus
        for exps in itertools.product(*[range(o) for o in self.orders]):
            r = 1
            for g, e in zip(self.generators, exps):
                r = r * pow(g, e, m) % m
            out[_norm_residue(r, m)] = exps
        assert len(out) == self.order
        return out


_unit_group_cache: dict[int, UnitGroupStruct] = {}


def unit_group(m: int) -> UnitGroupStruct:
    """Cyclic decomposition of (Z/mZ)* (cached, idempotent fill)."""
    if m < 1:
        raise ValueError("modulus must be positive")
    cached = _unit_group_cache.get(m)
    if cached is not None:
        return cached
    gens: list[int] = []
    orders: list[int] = []
    for p, e in _factorize(m):
        pe = p ** e
        rest = m // pe
        for g, o in _prime_power_generators(p, e):
            # CRT lift: g mod p^e, 1 mod m/p^e
            t = ((1 - g) * pow(pe, -1, rest)) % rest if rest > 1 else 0
            gens.append(_norm_residue(g + pe * t, m))
            orders.append(o)
    ug = UnitGroupStruct(m, tuple(gens), tuple(orders), euler_phi(m))
    assert ug.order == (1 if not orders else _product(orders))
    _unit_group_cache[m] = ug
    return ug


def _product(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


# ---------------------------------------------------------------------------
# Dirichlet characters
# ---------------------------------------------------------------------------

class DirichletCharacter:
    """A Dirichlet character mod q with exact cyclotomic values.

    Values live in Q(zeta_E) where E is the exponent of (Z/qZ)*; the value at
    residues sharing a factor with q is the zero element.
    """

    __slots__ = ("modulus", "index", "exponents", "_values", "is_even", "is_principal")

    def __init__(self, modulus, index, exponents, values, is_even, is_principal):
        self.modulus = modulus
        self.index = index
        self.exponents = exponents
        self._values = values
        self.is_even = is_even
        self.is_principal = is_principal

    def __call__(self, n: int) -> CyclotomicElement:
        return self._values[n % self.modulus]

    @property
    def parity(self) -> str:
        return "even" if self.is_even else "odd"

    def __repr__(self) -> str:
        return f"DirichletCharacter(mod {self.modulus}, #{self.index}, {self.parity})"

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "index": self.index,
            "parity": self.parity,
            "principal": self.is_principal,
            "generator_exponents": list(self.exponents),
        }


def dirichlet_characters(q: int) -> list[DirichletCharacter]:
    """All phi(q) Dirichlet characters mod q, principal first, in the
    deterministic order of exponent tuples on the unit-group generators."""
    if q < 1:
        raise ValueError("modulus must be positive")
    ug = unit_group(q)
    e_grp = ug.exponent
    zeta_pows = [CyclotomicElement.zeta(e_grp, t) for t in range(e_grp)]
    zero = CyclotomicElement.zero(e_grp)
    one = CyclotomicElement.one(e_grp)
    log = ug.residue_log
    chars: list[DirichletCharacter] = []
    minus_one = _norm_residue(q - 1, q) if q > 1 else 1
    for index, tup in enumerate(itertools.product(*[range(o) for o in ug.orders])):
        values: dict[int, CyclotomicElement] = {}
        for res in range(q) if q > 1 else [0]:
            key = _norm_residue(res, q)
            if gcd(res, q) == 1 or q == 1:
                exps = log[key]
                a = sum(
                    t * e * (e_grp // o) for t, e, o in zip(tup, exps, ug.orders)
                ) % e_grp
                values[res] = zeta_pows[a]
            else:
                values[res] = zero
        is_principal = not any(tup)
        is_even = values[minus_one % q] == one
        chars.append(DirichletCharacter(q, index, tup, values, is_even, is_principal))
    assert len(chars) == euler_phi(q)
    return chars


# ---------------------------------------------------------------------------
# abelian subfields and the Galois correspondence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbelianFieldDesc:
    """An abelian number field as the fixed field of ``subgroup`` inside Q(zeta_m).

    (1, (1,)) is Q and (q, (1,)) is Q(zeta_q).  Dataclass equality compares
    descriptions; use :meth:`equals` for equality of the described fields.
    """

    modulus: int
    subgroup: tuple[int, ...]

    def __post_init__(self) -> None:
        m = self.modulus
        if m < 1:
            raise ValueError("modulus must be positive")
        members = sorted(set(_norm_residue(h, m) for h in self.subgroup))
        if 1 not in members:
            raise ValueError("fixing subgroup must contain 1")
        for h in members:
            if gcd(h, m) != 1 and m > 1:
                raise ValueError(f"{h} is not a unit mod {m}")
        mset = set(members)
        for a in members:
            for b in members:
                if _norm_residue(a * b, m) not in mset:
                    raise ValueError("fixing subgroup is not closed under multiplication")
        object.__setattr__(self, "subgroup", tuple(members))

    # -- constructors -------------------------------------------------------

    @classmethod
    def rationals(cls) -> "AbelianFieldDesc":
        return cls(1, (1,))

    @classmethod
    def full_cyclotomic(cls, q: int) -> "AbelianFieldDesc":
        return cls(q, (1,))

    @classmethod
    def from_generators(cls, m: int, gens) -> "AbelianFieldDesc":
        return cls(m, tuple(_subgroup_closure(m, gens)))

    # -- structure ----------------------------------------------------------

    def degree(self) -> int:
        phi = euler_phi(self.modulus)
        assert phi % len(self.subgroup) == 0
        return phi // len(self.subgroup)

    def lift_subgroup(self, big_modulus: int) -> tuple[int, ...]:
        """Preimage of the fixing subgroup in (Z/LZ)*; fixes the same field there."""
        m = self.modulus
        if big_modulus % m != 0:
            raise ValueError(f"cannot lift: {m} does not divide {big_modulus}")
        mset = set(self.subgroup)
        out = [
            r
            for r in range(1, big_modulus + 1)
            if gcd(r, big_modulus) == 1 and _norm_residue(r, m) in mset
        ]
        return tuple(sorted(_norm_residue(r, big_modulus) for r in out))

    def equals(self, other: "AbelianFieldDesc") -> bool:
        big = lcm(self.modulus, other.modulus)
        return set(self.lift_subgroup(big)) == set(other.lift_subgroup(big))

    def is_subfield_of(self, other: "AbelianFieldDesc") -> bool:
        """Smaller field <-> larger fixing subgroup."""
        big = lcm(self.modulus, other.modulus)
        return set(self.lift_subgroup(big)) >= set(other.lift_subgroup(big))

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "subgroup": list(self.subgroup)}

    @classmethod
    def from_json(cls, data: dict) -> "AbelianFieldDesc":
        return cls(int(data["modulus"]), tuple(int(h) for h in data["subgroup"]))


def _subgroup_closure(m: int, gens) -> list[int]:
    seen = {1}
    frontier = [1]
    norm_gens = [_norm_residue(g, m) for g in gens]
    for g in norm_gens:
        if gcd(g, m) != 1 and m > 1:
            raise ValueError(f"{g} is not a unit mod {m}")
    while frontier:
        nxt = []
        for a in frontier:
            for g in norm_gens:
                b = _norm_residue(a * g, m)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return sorted(seen)


def subfield_intersection(field: AbelianFieldDesc, q: int) -> AbelianFieldDesc:
    """Description of (field intersect Q(zeta_q)) inside Q(zeta_lcm(m, q)).

    By the Galois correspondence the intersection is the fixed field of the
    subgroup generated by the lift of the fixing subgroup together with the
    kernel of (Z/LZ)* -> (Z/qZ)*.
    """
    if q < 1:
        raise ValueError("modulus must be positive")
    big = lcm(field.modulus, q)
    lifted = set(field.lift_subgroup(big))
    kernel = {
        r for r in range(1, big + 1) if gcd(r, big) == 1 and (r - 1) % q == 0
    }
    kernel = {_norm_residue(r, big) for r in kernel}
    combined = _subgroup_closure(big, sorted(lifted | kernel))
    return AbelianFieldDesc(big, tuple(combined))


def is_rational_intersection(field: AbelianFieldDesc, q: int) -> bool:
    """True iff the field meets Q(zeta_q) in Q only."""
    return subfield_intersection(field, q).degree() == 1


# ---------------------------------------------------------------------------
# exact rank over abelian subfields
# ---------------------------------------------------------------------------

def _bareiss_rank(rows: list[list[int]]) -> int:
    """Fraction-free elimination; all intermediate divisions are exact."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            row_i = m[i]
            f = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - f * m[r][j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        rank += 1
        if r == nrows:
            break
    return rank


def exact_rank(rows) -> int:
    """Exact rank of a matrix with Fraction (or int) entries."""
    int_rows: list[list[int]] = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        int_rows.append([x.numerator * (den // x.denominator) for x in fr])
    if not int_rows:
        return 0
    return _bareiss_rank(int_rows)


def _fixed_field_basis(big_modulus: int, subgroup: frozenset[int]) -> list[CyclotomicElement]:
    """Q-basis of the fixed field of ``subgroup`` in Q(zeta_L): Gaussian-period
    orbit sums over ascending orbit representatives, thinned to a maximal
    independent subset (deterministic)."""
    L = big_modulus
    d = euler_phi(L) // len(subgroup)
    seen = [False] * L
    basis: list[CyclotomicElement] = []
    echelon: list[tuple[int, list[Fraction]]] = []
    for t in range(L):
        if seen[t]:
            continue
        counts: dict[int, int] = {}
        for h in subgroup:
            idx = (h % L) * t % L
            counts[idx] = counts.get(idx, 0) + 1
        for idx in counts:
            seen[idx] = True
        coeffs = [Fraction(0)] * L
        for idx, c in counts.items():
            coeffs[idx] = Fraction(c)
        elem = CyclotomicElement.from_poly(L, coeffs)
        row = list(elem.coeffs)
        for pivot, erow in echelon:
            if row[pivot]:
                f = row[pivot]
                row = [a - f * b for a, b in zip(row, erow)]
        pivot = next((i for i, a in enumerate(row) if a), None)
        if pivot is None:
            continue
        inv = 1 / row[pivot]
        echelon.append((pivot, [a * inv for a in row]))
        basis.append(elem)
        if len(basis) == d:
            break
    assert len(basis) == d, "Gaussian periods failed to span the fixed field"
    return basis


def relative_rank(vectors, field: AbelianFieldDesc) -> int:
    """Dimension over the field of the span of the given cyclotomic numbers.

    All vectors must share a modulus L with field.modulus | L, so the field
    lifts to a subfield F of Q(zeta_L).  The F-span of the vectors, viewed as
    a Q-space, is spanned by the products (basis element of F) * vector; its
    Q-rank is [F:Q] times the F-rank.
    """
    vectors = list(vectors)
    if not vectors:
        return 0
    L = vectors[0].modulus
    for v in vectors:
        if v.modulus != L:
            raise ValueError("all vectors must share one cyclotomic modulus")
    if L % field.modulus != 0:
        raise ValueError("field cannot be lifted into the vectors' cyclotomic field")
    subgroup = frozenset(field.lift_subgroup(L))
    d = euler_phi(L) // len(subgroup)
    basis = _fixed_field_basis(L, subgroup)
    rows = []
    for v in vectors:
        for f in basis:
            rows.append((f * v).coeffs)
    r = exact_rank(rows)
    assert r % d == 0, "flattened rank is not a multiple of the field degree"
    return r // d
