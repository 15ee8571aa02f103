"""Symmetric function kernel: elementary/complete/Schur evaluation, the
Pfaffian Q-tilde and P-tilde polynomials of Pragacz-Ratajski type, and
Hall-Littlewood polynomials specialized at t = -1.

All evaluation routines are generic over the coefficient ring: points may
consist of ints, Fractions, CycloNums, or SparsePoly variables (in which case
the routine returns the polynomial itself).  Everything is exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .exactnum import CycloNum, CycloPoly
from .partitions import Partition

__all__ = [
    "SparsePoly",
    "variables",
    "elem_values",
    "complete_values",
    "elem",
    "complete",
    "schur",
    "schur_bialternant",
    "qtilde_pair",
    "qtilde",
    "ptilde",
    "qtilde_from_elems",
    "ptilde_from_elems",
    "hall_littlewood",
    "schur_p_direct_value",
    "omega_dual_value",
]


# ---------------------------------------------------------------------------
# sparse multivariate polynomials over an exact coefficient ring


class SparsePoly:
    """Sparse multivariate polynomial; terms map exponent tuples to exact
    coefficients (int, Fraction, or CycloNum).  No zero coefficient is stored.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    key = tuple(exps)
                    prev = clean.get(key)
                    clean[key] = c if prev is None else prev + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def zero(cls, nvars: int) -> "SparsePoly":
        return cls(nvars)

    @classmethod
    def const(cls, c, nvars: int) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "SparsePoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    def _coerce(self, other):
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise ValueError("mixed variable counts")
            return other
        if isinstance(other, (int, Fraction, CycloNum)):
            return SparsePoly.const(other, self.nvars)
        return None

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            cur = out.get(e)
            out[e] = c if cur is None else cur + c
        return SparsePoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            return SparsePoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, SparsePoly):
            return NotImplemented
        if other.nvars != self.nvars:
            raise ValueError("mixed variable counts")
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                cur = out.get(e)
                prod = c1 * c2
                out[e] = prod if cur is None else cur + prod
        return SparsePoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = SparsePoly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def evaluate(self, point):
        """Value at a point; entries may themselves be ring elements or polys."""
        if len(point) != self.nvars:
            raise ValueError("point length mismatch")
        powcache: list[dict] = [dict() for _ in range(self.nvars)]

        def pw(i, e):
            cache = powcache[i]
            if e not in cache:
                cache[e] = point[i] ** e if e > 1 else point[i]
            return cache[e]

        total = 0
        for exps, c in self.terms.items():
            term = c
            for i, e in enumerate(exps):
                if e:
                    term = term * pw(i, e)
            total = total + term
        return total

    def set_vars_zero(self, indices) -> "SparsePoly":
        """Substitute 0 for the given variables."""
        idx = set(indices)
        out = {e: c for e, c in self.terms.items() if all(e[i] == 0 for i in idx)}
        return SparsePoly(self.nvars, out)

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def weighted_degree(self, weights) -> int:
        if not self.terms:
            return 0
        return max(sum(w * x for w, x in zip(weights, e)) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_symmetric(self) -> bool:
        for i in range(self.nvars - 1):
            for e, c in self.terms.items():
                swapped = list(e)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                if self.terms.get(tuple(swapped), 0) != c:
                    return False
        return True

    def __repr__(self):
        if not self.terms:
            return "SparsePoly(0)"
        bits = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(f"x{i}^{k}" for i, k in enumerate(e) if k)
            bits.append(f"({c!r})*{mono}" if mono else f"({c!r})")
        return "SparsePoly(" + " + ".join(bits) + ")"


def variables(n: int) -> tuple[SparsePoly, ...]:
    """The coordinate polynomials (x_0, ..., x_{n-1}) in n variables."""
    return tuple(SparsePoly.variable(i, n) for i in range(n))


# ---------------------------------------------------------------------------
# elementary / complete / Schur evaluation


def elem_values(point, kmax: int) -> list:
    """[E_0, ..., E_kmax] at the point (E_k = 0 beyond the variable count)."""
    E = [1] + [0] * kmax
    for x in point:
        for k in range(kmax, 0, -1):
            E[k] = E[k] + x * E[k - 1]
    return E


def complete_values(point, kmax: int) -> list:
    """[H_0, ..., H_kmax] at the point."""
    H = [1] + [0] * kmax
    for x in point:
        for k in range(1, kmax + 1):
            H[k] = H[k] + x * H[k - 1]
    return H


def elem(k: int, point):
    """The k-th elementary symmetric function at the point."""
    if k < 0 or k > len(point):
        return 0
    return elem_values(point, k)[k]


def complete(k: int, point):
    """The k-th complete homogeneous symmetric function at the point."""
    if k < 0:
        return 0
    return complete_values(point, k)[k]


def _det_generic(rows):
    """Division-free determinant by Laplace expansion with subset memoization."""
    size = len(rows)
    if size == 0:
        return 1
    memo = {}

    def rec(r, cols):
        if not cols:
            return 1
        key = (r, cols)
        if key in memo:
            return memo[key]
        total = 0
        sign = 1
        for pos, c in enumerate(cols):
            a = rows[r][c]
            if a:
                term = a * rec(r + 1, cols[:pos] + cols[pos + 1 :])
                total = total + (term if sign > 0 else -term)
            sign = -sign
        memo[key] = total
        return total

    return rec(0, tuple(range(size)))


def schur(lam: Partition, point):
    """Schur polynomial via the Jacobi-Trudi determinant det[H_{lam_i + j - i}]."""
    l = len(lam)
    if l == 0:
        return 1
    kmax = lam[0] + l
    H = complete_values(point, kmax)

    def h(k):
        return H[k] if k >= 0 else 0

    rows = [[h(lam[i] + j - i) for j in range(l)] for i in range(l)]
    return _det_generic(rows)


def schur_bialternant(lam: Partition, point):
    """Schur value as a ratio of alternants; needs distinct invertible coordinates."""
    n = len(point)
    full = tuple(lam) + (0,) * (n - len(lam))
    num = _det_generic([[point[i] ** (full[j] + n - 1 - j) for j in range(n)] for i in range(n)])
    den = _det_generic([[point[i] ** (n - 1 - j) for j in range(n)] for i in range(n)])
    return num / den


# ---------------------------------------------------------------------------
# Pfaffian Q-tilde / P-tilde polynomials


def _pair_from_elems(i: int, j: int, E):
    """Two-row value E_i E_j + 2 sum (-1)^k E_{i+k} E_{j-k} over given E's."""
    if i < j:
        raise ValueError("pair indices must satisfy i >= j")

    def e(k):
        return E[k] if 0 <= k < len(E) else 0

    total = e(i) * e(j)
    for k in range(1, j + 1):
        term = 2 * (e(i + k) * e(j - k))
        total = total + (term if k % 2 == 0 else -term)
    return total


def _pfaffian_from_pairs(parts, E):
    """Pfaffian of the antisymmetric matrix with (i<j) entry pair(parts_i, parts_j),
    expanded along the first row."""
    parts = list(parts)
    if len(parts) % 2 == 1:
        parts.append(0)

    entry = {}

    def pair(i, j):
        if (i, j) not in entry:
            entry[(i, j)] = _pair_from_elems(parts[i], parts[j], E)
        return entry[(i, j)]

    def pf(idx):
        if not idx:
            return 1
        i0 = idx[0]
        total = 0
        sign = 1
        for pos in range(1, len(idx)):
            a = pair(i0, idx[pos])
            if a:
                term = a * pf(idx[1:pos] + idx[pos + 1 :])
                total = total + (term if sign > 0 else -term)
            sign = -sign
        return total

    return pf(tuple(range(len(parts))))


def qtilde_pair(i: int, j: int, point):
    """Q-tilde of a two-row index (i >= j >= 0) at the point."""
    return _pair_from_elems(i, j, elem_values(point, i + j))


def qtilde_from_elems(lam: Partition, E):
    if not lam:
        return 1
    return _pfaffian_from_pairs(lam, E)


def ptilde_from_elems(lam: Partition, E):
    return Fraction(1, 2 ** len(lam)) * qtilde_from_elems(lam, E)


def qtilde(lam: Partition, point):
    """Pfaffian Q-tilde polynomial of any partition at the point."""
    if not lam:
        return 1
    kmax = lam[0] + (lam[1] if len(lam) > 1 else 0)
    return _pfaffian_from_pairs(lam, elem_values(point, kmax))


def ptilde(lam: Partition, point):
    """P-tilde = 2^(-length) * Q-tilde."""
    return Fraction(1, 2 ** len(lam)) * qtilde(lam, point)


# ---------------------------------------------------------------------------
# Hall-Littlewood polynomials at t = -1


def _inv(x):
    if isinstance(x, CycloNum):
        return x.inverse()
    return Fraction(1) / Fraction(x)


class _HLContext:
    """Per-point data shared by all Hall-Littlewood evaluations at one point."""

    __slots__ = ("point", "n", "terms", "powcache")

    def __init__(self, point):
        self.point = point
        n = len(point)
        self.n = n
        vand = 1
        for a in range(n):
            for b in range(a + 1, n):
                diff = point[a] - point[b]
                if not diff:
                    raise ValueError("Hall-Littlewood evaluation needs distinct coordinates")
                vand = vand * diff
        vand_inv = _inv(vand)
        terms = []
        for w in permutations(range(n)):
            inv_count = sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])
            sign = -1 if inv_count % 2 else 1
            # prod_{i<j} (x_{w(i)} - t x_{w(j)}), a polynomial in t
            numer = CycloPoly([1])
            for a in range(n):
                for b in range(a + 1, n):
                    numer = numer * CycloPoly([point[w[a]], -point[w[b]]])
            terms.append((w, numer * (vand_inv if sign > 0 else -vand_inv)))
        self.terms = terms
        self.powcache = [dict() for _ in range(n)]

    def power(self, i, e):
        cache = self.powcache[i]
        if e not in cache:
            cache[e] = self.point[i] ** e
        return cache[e]


_HL_CTX: dict = {}
_HL_CACHE: dict = {}


def _v_poly(lam: Partition, n: int) -> CycloPoly:
    """Multiplicity factor: product over part multiplicities (zeros counted)
    of [m]_t! where [k]_t = 1 + t + ... + t^(k-1).  Monic over the integers."""
    mult: dict[int, int] = {0: n - len(lam)}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    out = CycloPoly([1])
    for m in mult.values():
        for k in range(2, m + 1):
            out = out * CycloPoly([1] * k)
    return out


def hall_littlewood(lam: Partition, point):
    """Hall-Littlewood P_lam at the point, with parameter t = -1.

    The symmetrization sum is assembled as an exact polynomial in t, divided
    exactly by the multiplicity factor v_lam(t) (the division must leave no
    remainder, and a nonzero remainder raises), and only then is t = -1
    substituted.
    """
    point = tuple(point)
    n = len(point)
    if len(lam) > n:
        raise ValueError("partition longer than the number of coordinates")
    key = (point, tuple(lam))
    cached = _HL_CACHE.get(key)
    if cached is not None:
        return cached
    ctx = _HL_CTX.get(point)
    if ctx is None:
        ctx = _HLContext(point)
        _HL_CTX[point] = ctx

    exps = tuple(lam) + (0,) * (n - len(lam))
    S = CycloPoly()
    for w, numer in ctx.terms:
        mono = 1
        for i, e in enumerate(exps):
            if e:
                mono = mono * ctx.power(w[i], e)
        S = S + numer * mono
    quot, rem = S.divmod_monic(_v_poly(lam, n))
    if rem:
        raise ArithmeticError("non-exact division by the multiplicity factor")
    value = quot(-1)
    _HL_CACHE[key] = value
    return value


# ---------------------------------------------------------------------------
# the involution swapping elementary and complete symmetric functions,
# applied to strict-shape Hall-Littlewood polynomials at t = -1
#
# Strict-shape polynomials at t = -1 lie in the subring generated by the
# coefficients q_r of E(z)H(z).  Expanding them in the abstract elementary
# generators makes the involution computable: evaluate the expansion at the
# complete symmetric values instead of the elementary ones.


@lru_cache(maxsize=None)
def _h_in_e(k: int, nvars: int) -> SparsePoly:
    """Complete symmetric h_k as a polynomial in elementary generators."""
    if k == 0:
        return SparsePoly.const(1, nvars)
    total = SparsePoly.zero(nvars)
    for i in range(1, min(k, nvars) + 1):
        term = SparsePoly.variable(i - 1, nvars) * _h_in_e(k - i, nvars)
        total = total + (term if i % 2 == 1 else -term)
    return total


@lru_cache(maxsize=None)
def _q_in_e(r: int, nvars: int) -> SparsePoly:
    """Generator q_r (coefficient of z^r in E(z)H(z)) in elementary generators."""
    total = _h_in_e(r, nvars)
    for a in range(1, min(r, nvars) + 1):
        total = total + SparsePoly.variable(a - 1, nvars) * _h_in_e(r - a, nvars)
    return total


@lru_cache(maxsize=None)
def _schur_p_in_e(lam: Partition) -> SparsePoly:
    """Abstract strict-shape P polynomial in elementary generators."""
    if not lam:
        return SparsePoly.const(1, 1)
    nvars = sum(lam)
    parts = list(lam)
    if len(parts) % 2 == 1:
        parts.append(0)

    def pair(i, j):
        total = _q_in_e(parts[i], nvars) * _q_in_e(parts[j], nvars)
        for k in range(1, parts[j] + 1):
            term = 2 * (_q_in_e(parts[i] + k, nvars) * _q_in_e(parts[j] - k, nvars))
            total = total + (term if k % 2 == 0 else -term)
        return total

    entry = {}

    def pf(idx):
        if not idx:
            return SparsePoly.const(1, nvars)
        i0 = idx[0]
        total = SparsePoly.zero(nvars)
        sign = 1
        for pos in range(1, len(idx)):
            j = idx[pos]
            if (i0, j) not in entry:
                entry[(i0, j)] = pair(i0, j)
            a = entry[(i0, j)]
            if a:
                term = a * pf(idx[1:pos] + idx[pos + 1 :])
                total = total + (term if sign > 0 else -term)
            sign = -sign
        return total

    return pf(tuple(range(len(parts)))) * Fraction(1, 2 ** len(lam))


def schur_p_direct_value(lam: Partition, point):
    """Strict-shape P polynomial evaluated through its expansion in elementary
    generators; must agree with hall_littlewood(lam, point)."""
    ep = _schur_p_in_e(tuple(lam))
    E = elem_values(point, ep.nvars)
    return ep.evaluate(E[1 : ep.nvars + 1])


def omega_dual_value(lam: Partition, point):
    """Image of the strict-shape P polynomial under the involution swapping
    elementary and complete symmetric functions, evaluated at the point."""
    ep = _schur_p_in_e(tuple(lam))
    H = complete_values(point, ep.nvars)
    return ep.evaluate(H[1 : ep.nvars + 1])
