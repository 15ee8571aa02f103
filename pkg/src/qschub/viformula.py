"""Gromov-Witten engines for the two families of rings.

The 3-point genus-zero invariants are computed by closed-form sums of
symmetric-function values over exclusive root tuples, weighted by squared
Vandermonde factors ("Vafa-Intriligator-type" sums):

* orthogonal side OG(n): sums over rank-n exclusive tuples in Q(zeta_{4n}),
  with P-tilde values of the two input classes and a Hall-Littlewood value
  of the padded output class;
* Lagrangian side LG(n): the same structure one rank up, over rank-(n+1)
  exclusive tuples in Q(zeta_{4(n+1)}), with Q-tilde values.

Every sum is accumulated exactly in the cyclotomic field and converted to a
rational only at the end; a non-integer or negative result is a hard error
(it would mean the formula and the implementation disagree).

The sums over tuples are order-independent pure evaluations, so they may be
partitioned across workers freely; per-(partition, point) values are memoized.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import partitions as pt
from . import symfunc as sf
from . import tuples as tu
from .exactnum import as_rational
from .partitions import Partition

__all__ = [
    "gw_og",
    "gw_lg",
    "expand_og",
    "pairing_og",
    "pairing_lg",
    "compare_og_lg",
]


class IntegralityError(ArithmeticError):
    """A structure constant came out non-integral or negative."""


@lru_cache(maxsize=None)
def _points(rank: int):
    """Pairs (roots of J, roots of J*) for every exclusive rank-`rank` tuple."""
    out = []
    for J in tu.exclusive_tuples(rank):
        out.append((tu.roots_of(J), tu.roots_of(tu.dual_tuple(J)), tu.vandermonde_sq(J)))
    return tuple(out)


@lru_cache(maxsize=None)
def _ptilde_at(lam: Partition, roots):
    return sf.ptilde(lam, roots)


@lru_cache(maxsize=None)
def _qtilde_at(lam: Partition, roots):
    return sf.qtilde(lam, roots)


def _finalize(total, scale: Fraction, what: str) -> int:
    value = as_rational(total * scale) if not isinstance(total, (int, Fraction)) else Fraction(total) * scale
    if value is None:
        raise IntegralityError(f"{what}: non-rational exact sum")
    if value.denominator != 1:
        raise IntegralityError(f"{what}: non-integer value {value}")
    if value < 0:
        raise IntegralityError(f"{what}: negative value {value}")
    return int(value)


def gw_og(n: int, lam: Partition, mu: Partition, nu: Partition, k: int) -> int:
    """3-point genus-zero invariant of the rank-n orthogonal Grassmannian.

    The third Schubert class is indexed by the complement of nu, so this is
    the coefficient of q^k times the nu-class in the product of the lam- and
    mu-classes.  Returns 0 unless |lam| + |mu| = |nu| + 2nk.
    """
    for p in (lam, mu, nu):
        pt.check_strict_in(p, n)
    if k < 0 or pt.weight(lam) + pt.weight(mu) != pt.weight(nu) + 2 * n * k:
        return 0
    total = 0
    for zJ, zJstar, vsq in _points(n):
        pp = _ptilde_at(tuple(lam), zJ) * _ptilde_at(tuple(mu), zJ) * vsq
        for m in range(pt.max_pad_og(nu, n) + 1):
            total = total + pp * sf.hall_littlewood(pt.pad_og(nu, m, n), zJstar)
    scale = Fraction(2 ** (len(nu) + 2 * k), (2 * n) ** n)
    return _finalize(total, scale, f"og n={n} {lam}*{mu}:{nu},q^{k}")


def gw_lg(n: int, lam: Partition, mu: Partition, nu: Partition, d: int) -> int:
    """3-point genus-zero invariant of the rank-n Lagrangian Grassmannian.

    The third Schubert class is indexed by the complement of nu.  Returns 0
    unless |lam| + |mu| = |nu| + (n+1)d.
    """
    for p in (lam, mu, nu):
        pt.check_strict_in(p, n)
    if d < 0 or pt.weight(lam) + pt.weight(mu) != pt.weight(nu) + (n + 1) * d:
        return 0
    total = 0
    for zJ, zJstar, vsq in _points(n + 1):
        qq = _qtilde_at(tuple(lam), zJ) * _qtilde_at(tuple(mu), zJ) * vsq
        for m in range(pt.max_pad_lg(nu, d, n) + 1):
            total = total + qq * sf.hall_littlewood(pt.pad_lg(nu, m, d, n), zJstar)
    scale = Fraction(1, 2**d * (2 * n + 2) ** (n + 1))
    return _finalize(total, scale, f"lg n={n} {lam}*{mu}:{nu},q^{d}")


def expand_og(poly: sf.SparsePoly, n: int) -> dict[tuple[Partition, int], int]:
    """Expand a symmetric homogeneous polynomial in n variables over the
    P-tilde basis of the rank-n orthogonal quantum ring.

    Returns the nonzero integer coefficients keyed by (strict partition,
    q-power).  Partitions whose weight is not congruent to the degree mod 2n
    are filtered out before any evaluation.
    """
    if not poly.is_symmetric():
        raise ValueError("polynomial is not symmetric")
    if not poly.is_homogeneous():
        raise ValueError("polynomial is not homogeneous")
    if poly.nvars != n:
        raise ValueError("polynomial must be in n variables")
    deg = poly.degree()
    values = {}
    for zJ, zJstar, vsq in _points(n):
        values[zJstar] = poly.evaluate(zJ) * vsq
    out: dict[tuple[Partition, int], int] = {}
    for nu in pt.strict_partitions(n):
        drop = deg - pt.weight(nu)
        if drop < 0 or drop % (2 * n) != 0:
            continue
        k = drop // (2 * n)
        total = 0
        for zJstar, pv in values.items():
            for m in range(pt.max_pad_og(nu, n) + 1):
                total = total + pv * sf.hall_littlewood(pt.pad_og(nu, m, n), zJstar)
        scale = Fraction(2 ** (len(nu) + 2 * k), (2 * n) ** n)
        value = as_rational(total * scale)
        if value is None or value.denominator != 1:
            raise IntegralityError(f"expansion coefficient at {nu}, q^{k} not integral")
        if value:
            out[(nu, k)] = int(value)
    return out


def _pairing(n: int, mu: Partition, nu: Partition, period: int, engine) -> dict[int, int]:
    """Coefficient of the top (staircase) class, with its degree-forced
    q-power, in the product of the mu-class and the complement-of-nu class.

    Returns {q_power: coefficient}; empty when the forced q-power is not a
    nonnegative integer or the coefficient vanishes.
    """
    drop = pt.weight(mu) - pt.weight(nu)
    if drop < 0 or drop % period != 0:
        return {}
    k = drop // period
    coeff = engine(n, mu, pt.complement(nu, n), pt.staircase(n), k)
    return {k: coeff} if coeff else {}


def pairing_og(n: int, mu: Partition, nu: Partition) -> dict[int, int]:
    """Quantum pairing of the mu-class against the complement-of-nu class
    (orthogonal side), as an element of Z[q] keyed by q-power."""
    return _pairing(n, mu, nu, 2 * n, gw_og)


def pairing_lg(n: int, mu: Partition, nu: Partition) -> dict[int, int]:
    """Quantum pairing of the mu-class against the complement-of-nu class
    (Lagrangian side), as an element of Z[q] keyed by q-power."""
    return _pairing(n, mu, nu, n + 1, gw_lg)


def compare_og_lg(n: int, lam: Partition, mu: Partition, nu: Partition, k: int):
    """Both sides of the two rank-comparison identities relating orthogonal
    invariants at rank n to Lagrangian invariants at rank n-1.

    lam, mu, nu must be strict with parts at most n-1.  Returns a dict with
    entries "even" and "odd", each a (lhs, rhs) pair of exact rationals; the
    test suites assert lhs == rhs.
    """
    for p in (lam, mu, nu):
        pt.check_strict_in(p, n - 1)
    lhs_even = Fraction(gw_og(n, lam, mu, nu, k))
    rhs_even = Fraction(2) ** (4 * k + len(nu) - len(lam) - len(mu)) * gw_lg(
        n - 1, lam, mu, nu, 2 * k
    )
    nu_tilde = (n,) + tuple(nu)
    lhs_odd = Fraction(gw_og(n, lam, mu, nu_tilde, k))
    rhs_odd = Fraction(2) ** (4 * k + 1 + len(nu_tilde) - len(lam) - len(mu)) * gw_lg(
        n - 1, lam, mu, nu, 2 * k + 1
    )
    return {"even": (lhs_even, rhs_even), "odd": (lhs_odd, rhs_odd)}
