"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored as integer coordinate vectors over a common denominator
in the power basis 1, zeta, ..., zeta^(deg-1), where deg is the degree of the
m-th cyclotomic polynomial and zeta = exp(2*pi*i/m).  All arithmetic is exact;
floating point enters only inside ``certified_sign``, and there only through
rigorous interval bounds.

Values are immutable after construction, so they are safe to share between
threads; every operation is a pure function.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "CycloNum",
    "CycloPoly",
    "cyclo_root",
    "from_rational",
    "one",
    "zero",
    "conj",
    "as_rational",
    "certified_sign",
]


# ---------------------------------------------------------------------------
# cyclotomic polynomials and per-conductor context


def _int_poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact division of integer polynomials (coefficients low-to-high).

    The divisor must be monic; raises if the division leaves a remainder.
    """
    num = list(num)
    dn = len(den) - 1
    q = [0] * (len(num) - dn)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + dn]
        if c:
            q[k] = c
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return q


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    """Coefficients (low-to-high) of the m-th cyclotomic polynomial."""
    poly = [0] * (m + 1)
    poly[0] = -1
    poly[m] = 1
    for d in range(1, m):
        if m % d == 0:
            poly = _int_poly_divexact(poly, _cyclotomic(d))
    return tuple(poly)


class _Ctx:
    __slots__ = ("m", "deg", "phi", "red", "powers", "conjmap")


@lru_cache(maxsize=None)
def _ctx(m: int) -> _Ctx:
    """Reduction data for Q(zeta_m), computed once per conductor."""
    if m < 1:
        raise ValueError("conductor must be a positive integer")
    phi = _cyclotomic(m)
    deg = len(phi) - 1
    base = [-a for a in phi[:deg]]  # x^deg reduced mod Phi_m

    red = [tuple(base)]
    cur = list(base)
    for _ in range(deg + 1, 2 * deg - 1):
        shifted = [0] + cur
        top = shifted[deg]
        cur = shifted[:deg]
        if top:
            for i in range(deg):
                cur[i] += top * base[i]
        red.append(tuple(cur))

    powers = []
    vec = [0] * deg
    vec[0] = 1
    for _ in range(m):
        powers.append(tuple(vec))
        shifted = [0] + list(vec)
        top = shifted[deg] if len(shifted) > deg else 0
        vec = shifted[:deg]
        if top:
            for i in range(deg):
                vec[i] += top * base[i]

    ctx = _Ctx()
    ctx.m = m
    ctx.deg = deg
    ctx.phi = phi
    ctx.red = red
    ctx.powers = powers
    ctx.conjmap = [powers[(m - k) % m] for k in range(deg)]
    return ctx


# ---------------------------------------------------------------------------
# field elements


def _make(m: int, num: list[int], den: int) -> "CycloNum":
    """Normalize and wrap raw coordinates: positive denominator, content 1."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        den = -den
        num = [-a for a in num]
    g = den
    for a in num:
        if a:
            g = gcd(g, a)
            if g == 1:
                break
    if g > 1:
        num = [a // g for a in num]
        den //= g
    x = object.__new__(CycloNum)
    x.m = m
    x.num = tuple(num)
    x.den = den
    return x


class CycloNum:
    """An exact element of the cyclotomic field Q(zeta_m)."""

    __slots__ = ("m", "num", "den")

    def __init__(self, m: int, coords, den: int = 1):
        ctx = _ctx(m)
        vec = [Fraction(c) for c in coords]
        if len(vec) > ctx.deg:
            raise ValueError("coordinate vector longer than the field degree")
        vec += [Fraction(0)] * (ctx.deg - len(vec))
        common = 1
        for f in vec:
            common = common * f.denominator // gcd(common, f.denominator)
        nums = [int(f * common) for f in vec]
        norm = _make(m, nums, den * common)
        self.m = norm.m
        self.num = norm.num
        self.den = norm.den

    # -- helpers ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other.m != self.m:
                raise ValueError("mixed cyclotomic conductors")
            return other
        if isinstance(other, int):
            return _rational(self.m, other, 1)
        if isinstance(other, Fraction):
            return _rational(self.m, other.numerator, other.denominator)
        return None

    def coordinates(self) -> tuple[Fraction, ...]:
        """Exact rational coordinates in the power basis."""
        return tuple(Fraction(a, self.den) for a in self.num)

    # -- ring/field operations ----------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        da, db = self.den, o.den
        num = [a * db + b * da for a, b in zip(self.num, o.num)]
        return _make(self.m, num, da * db)

    __radd__ = __add__

    def __neg__(self):
        x = object.__new__(CycloNum)
        x.m = self.m
        x.num = tuple(-a for a in self.num)
        x.den = self.den
        return x

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        da, db = self.den, o.den
        num = [a * db - b * da for a, b in zip(self.num, o.num)]
        return _make(self.m, num, da * db)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return zero(self.m)
            return _make(self.m, [a * other for a in self.num], self.den)
        if isinstance(other, Fraction):
            return _make(
                self.m,
                [a * other.numerator for a in self.num],
                self.den * other.denominator,
            )
        if not isinstance(other, CycloNum):
            return NotImplemented
        if other.m != self.m:
            raise ValueError("mixed cyclotomic conductors")
        ctx = _ctx(self.m)
        deg = ctx.deg
        a, b = self.num, other.num
        prod = [0] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        vec = prod[:deg]
        for k in range(deg, 2 * deg - 1):
            c = prod[k]
            if c:
                row = ctx.red[k - deg]
                for i in range(deg):
                    vec[i] += c * row[i]
        return _make(self.m, vec, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if not self:
            raise ZeroDivisionError(
                "inverse of zero cyclotomic value (degenerate evaluation point?)"
            )
        inv = _poly_invmod(self.num, self.m)
        common = 1
        for f in inv:
            common = common * f.denominator // gcd(common, f.denominator)
        nums = [int(f * common) for f in inv]
        # self = num/den, so self^-1 = den * num(x)^-1
        return _make(self.m, [a * self.den for a in nums], common)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = one(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- predicates ----------------------------------------------------------

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            o = self._coerce(other)
            return self.num == o.num and self.den == o.den
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.m == other.m and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.m, self.num, self.den))

    def __repr__(self):
        terms = []
        for k, a in enumerate(self.num):
            if a:
                terms.append(f"{a}*z^{k}" if k else f"{a}")
        body = " + ".join(terms) if terms else "0"
        if self.den != 1:
            body = f"({body})/{self.den}"
        return f"CycloNum[{self.m}]({body})"


def _rational(m: int, p: int, q: int) -> CycloNum:
    ctx = _ctx(m)
    vec = [0] * ctx.deg
    vec[0] = p
    return _make(m, vec, q)


def zero(m: int) -> CycloNum:
    return _rational(m, 0, 1)


def one(m: int) -> CycloNum:
    return _rational(m, 1, 1)


def from_rational(m: int, value) -> CycloNum:
    """Embed an int or Fraction into Q(zeta_m)."""
    f = Fraction(value)
    return _rational(m, f.numerator, f.denominator)


def cyclo_root(m: int, k: int) -> CycloNum:
    """The exact root of unity zeta_m^k, zeta_m = exp(2*pi*i/m)."""
    ctx = _ctx(m)
    return _make(m, list(ctx.powers[k % m]), 1)


def conj(x):
    """Complex conjugation, the field automorphism zeta -> zeta^(-1).

    Rational values (int, Fraction) pass through unchanged.
    """
    if isinstance(x, (int, Fraction)):
        return x
    ctx = _ctx(x.m)
    vec = [0] * ctx.deg
    for k, c in enumerate(x.num):
        if c:
            row = ctx.conjmap[k]
            for i in range(ctx.deg):
                vec[i] += c * row[i]
    return _make(x.m, vec, x.den)


def as_rational(x: CycloNum):
    """The Fraction value of x if x lies in Q, else None."""
    if any(x.num[1:]):
        return None
    return Fraction(x.num[0], x.den)


def _poly_invmod(num: tuple[int, ...], m: int) -> list[Fraction]:
    """Inverse of the integer polynomial ``num`` modulo Phi_m, over Q."""
    phi = _ctx(m).phi

    def trim(p):
        while p and not p[-1]:
            p.pop()
        return p

    def polydivmod(a, b):
        a = list(a)
        q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
        while len(a) >= len(b) and trim(a):
            c = a[-1] / b[-1]
            k = len(a) - len(b)
            q[k] = c
            for i, bc in enumerate(b):
                a[k + i] -= c * bc
            trim(a)
        return q, a

    r0 = [Fraction(c) for c in phi]
    r1 = trim([Fraction(c) for c in num])
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1:
        q, r = polydivmod(r0, r1)
        r0, r1 = r1, trim(r)
        # s_new = s0 - q*s1
        s_new = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
        for i, qc in enumerate(q):
            if qc:
                for j, sc in enumerate(s1):
                    s_new[i + j] -= qc * sc
        s0, s1 = s1, trim(s_new) or [Fraction(0)]
    if not r1:
        raise ZeroDivisionError("element not invertible (zero modulo Phi_m)")
    c = r1[0]
    deg = len(phi) - 1
    out = [sc / c for sc in s1]
    out += [Fraction(0)] * (deg - len(out))
    return out[:deg]


# ---------------------------------------------------------------------------
# certified sign of real elements


def _raw_mpf_to_fraction(raw) -> Fraction:
    sign, man, exp, _bc = raw
    if man == 0:
        if exp == 0:
            return Fraction(0)
        raise ArithmeticError("non-finite interval endpoint")
    v = Fraction(man) * Fraction(2) ** exp
    return -v if sign else v


@lru_cache(maxsize=None)
def _cos_bounds(m: int, prec: int) -> tuple[tuple[Fraction, Fraction], ...]:
    """Rational enclosures of cos(2*pi*k/m) for k below the field degree."""
    from mpmath import iv

    old = iv.prec
    try:
        iv.prec = prec
        out = []
        for k in range(_ctx(m).deg):
            c = iv.cos(2 * iv.pi * k / m)
            a, b = c._mpi_
            out.append((_raw_mpf_to_fraction(a), _raw_mpf_to_fraction(b)))
    finally:
        iv.prec = old
    return tuple(out)


def certified_sign(x: CycloNum) -> int:
    """Exact sign (-1, 0, +1) of a real (conjugation-fixed) element.

    Zero is decided exactly from the coordinate vector.  A nonzero value is
    bracketed by interval evaluation at increasing precision; termination is
    guaranteed because a nonzero element of norm bounded by the coordinate
    sizes cannot be smaller than 2^(-cap) for the computed cap.
    """
    if conj(x) != x:
        raise ValueError("certified_sign requires a conjugation-fixed (real) value")
    if not x:
        return 0
    total = sum(abs(a) for a in x.num)
    deg = _ctx(x.m).deg
    cap = (deg - 1) * total.bit_length() + x.den.bit_length() + 96
    prec = 64
    while True:
        bounds = _cos_bounds(x.m, prec)
        lo = Fraction(0)
        hi = Fraction(0)
        for k, a in enumerate(x.num):
            if a > 0:
                lo += a * bounds[k][0]
                hi += a * bounds[k][1]
            elif a < 0:
                lo += a * bounds[k][1]
                hi += a * bounds[k][0]
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        if prec > cap:
            raise ArithmeticError("sign of a provably nonzero value undecided")
        prec *= 2


# ---------------------------------------------------------------------------
# univariate polynomials (carrier for Hall-Littlewood interpolation in t)


class CycloPoly:
    """Dense univariate polynomial over an exact coefficient ring.

    Coefficients may be int, Fraction, or CycloNum (mixing is fine as long as
    the CycloNum conductors agree).  The zero polynomial has no coefficients;
    otherwise the leading coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, CycloPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, CycloPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return CycloPoly(out)

    def __neg__(self):
        return CycloPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, CycloPoly):
            # scalar
            return CycloPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return CycloPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return CycloPoly(out)

    __rmul__ = __mul__

    def divmod_monic(self, other: "CycloPoly"):
        """Quotient and remainder by a divisor with leading coefficient 1."""
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        lead = other.coeffs[-1]
        if not (lead == 1):
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dn = other.degree
        qlen = max(len(rem) - dn, 0)
        quot = [0] * qlen
        for k in range(qlen - 1, -1, -1):
            c = rem[k + dn]
            if c:
                quot[k] = c
                for i, d in enumerate(other.coeffs):
                    rem[k + i] = rem[k + i] - c * d
        return CycloPoly(quot), CycloPoly(rem)

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self):
        return f"CycloPoly({list(self.coeffs)!r})"
