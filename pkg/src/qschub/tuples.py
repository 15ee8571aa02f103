"""Index tuples of roots of unity for the rank-n quantum rings.

For rank n the relevant points are n-element subsets of the 2n solutions of
z^(2n) = (-1)^(n+1).  Every such root is zeta_{4n}^e for a unique integer e
with e = n+1 (mod 2) in the window -(n-1) <= e <= 3n-1; tuples are stored as
strictly increasing tuples of these doubled exponents (the exponent over the
primitive 2n-th root is e/2, which would be half-integral for even n).

A tuple is *exclusive* if its root set contains no antipodal pair, and
*self-symmetric* if the root set is closed under complex conjugation.  There
are 2^n exclusive tuples, matching the number of Schubert classes.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .exactnum import CycloNum, cyclo_root, conj, certified_sign

Exps = tuple[int, ...]

__all__ = [
    "conductor",
    "exponent_window",
    "normalize_exp",
    "roots_of",
    "squared_roots",
    "all_tuples",
    "exclusive_tuples",
    "self_symmetric_tuples",
    "is_exclusive",
    "is_self_symmetric",
    "base_tuple",
    "complement_tuple",
    "dual_tuple",
    "vandermonde",
    "vandermonde_sq",
    "orbit_counts",
    "OrbitCounts",
]


def conductor(n: int) -> int:
    """Conductor of the ambient cyclotomic field for rank n."""
    return 4 * n


def normalize_exp(e: int, n: int) -> int:
    """Reduce a doubled exponent mod 4n into the window [-(n-1), 3n-1]."""
    return (e + (n - 1)) % (4 * n) - (n - 1)


@lru_cache(maxsize=None)
def exponent_window(n: int) -> Exps:
    """Doubled exponents of the 2n roots of z^(2n) = (-1)^(n+1), increasing."""
    lo, hi = -(n - 1), 3 * n - 1
    return tuple(e for e in range(lo, hi + 1) if (e - n - 1) % 2 == 0)


def roots_of(exps: Exps, n: int | None = None) -> tuple[CycloNum, ...]:
    """The tuple of exact roots zeta_{4n}^e for the stored exponents."""
    n = len(exps) if n is None else n
    m = conductor(n)
    return tuple(cyclo_root(m, e) for e in exps)


def squared_roots(exps: Exps, n: int | None = None) -> tuple[CycloNum, ...]:
    n = len(exps) if n is None else n
    m = conductor(n)
    return tuple(cyclo_root(m, 2 * e) for e in exps)


def is_exclusive(exps: Exps) -> bool:
    """True when no two chosen roots are antipodal (negatives of each other)."""
    n = len(exps)
    seen = set(exps)
    return all(normalize_exp(e + 2 * n, n) not in seen for e in exps)


def is_self_symmetric(exps: Exps) -> bool:
    """True when the chosen root set is closed under complex conjugation."""
    n = len(exps)
    seen = set(exps)
    return all(normalize_exp(-e, n) in seen for e in exps)


@lru_cache(maxsize=None)
def all_tuples(n: int) -> tuple[Exps, ...]:
    """All C(2n, n) increasing n-tuples of distinct admissible roots."""
    return tuple(combinations(exponent_window(n), n))


@lru_cache(maxsize=None)
def exclusive_tuples(n: int) -> tuple[Exps, ...]:
    return tuple(t for t in all_tuples(n) if is_exclusive(t))


@lru_cache(maxsize=None)
def self_symmetric_tuples(n: int) -> tuple[Exps, ...]:
    return tuple(t for t in exclusive_tuples(n) if is_self_symmetric(t))


def base_tuple(n: int) -> Exps:
    """The distinguished all-positive tuple, doubled exponents -(n-1)..(n-1)."""
    return tuple(range(-(n - 1), n, 2))


def complement_tuple(exps: Exps) -> Exps:
    """The n admissible roots not chosen by exps."""
    n = len(exps)
    seen = set(exps)
    return tuple(e for e in exponent_window(n) if e not in seen)


def dual_tuple(exps: Exps) -> Exps:
    """The dual exclusive tuple J*.

    It is defined by the set condition that {zeta^(n - j*)} runs over the
    complement of the chosen roots; any ordering satisfies it and the sorted
    one is returned (all downstream uses are symmetric in the entries).
    """
    n = len(exps)
    if not is_exclusive(exps):
        raise ValueError("dual is defined only for exclusive tuples")
    comp = complement_tuple(exps)
    dual = sorted(normalize_exp(2 * n - e, n) for e in comp)
    return tuple(dual)


def vandermonde(exps: Exps) -> CycloNum:
    """prod_{k<l} (zeta^{j_k} - zeta^{j_l}) over the stored roots."""
    n = len(exps)
    rs = roots_of(exps)
    out = cyclo_root(conductor(n), 0)
    for k in range(n):
        for l in range(k + 1, n):
            out = out * (rs[k] - rs[l])
    return out


def vandermonde_sq(exps: Exps) -> CycloNum:
    """Squared modulus of the Vandermonde factor; real and positive."""
    v = vandermonde(exps)
    if not v:
        raise ValueError("repeated roots in tuple")
    return v * conj(v)


class OrbitCounts:
    """Closed-form and enumerated orbit counts for the two group actions."""

    __slots__ = ("closed_rotation", "closed_negation", "enum_rotation", "enum_negation")

    def __init__(self, closed_rotation, closed_negation, enum_rotation, enum_negation):
        self.closed_rotation = closed_rotation
        self.closed_negation = closed_negation
        self.enum_rotation = enum_rotation
        self.enum_negation = enum_negation

    def agree(self) -> bool:
        return (
            self.closed_rotation == self.enum_rotation
            and self.closed_negation == self.enum_negation
        )

    def __repr__(self):
        return (
            f"OrbitCounts(rotation {self.closed_rotation}/{self.enum_rotation}, "
            f"negation {self.closed_negation}/{self.enum_negation})"
        )


def _euler_phi(d: int) -> int:
    return sum(1 for k in range(1, d + 1) if _gcd(k, d) == 1)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _orbit_count(sets, step) -> int:
    remaining = {frozenset(s) for s in sets}
    count = 0
    while remaining:
        s = next(iter(remaining))
        count += 1
        cur = s
        while True:
            remaining.discard(cur)
            cur = frozenset(step(cur))
            if cur == s:
                break
    return count


def orbit_counts(n: int) -> OrbitCounts:
    """Counts of root-set orbits under rotation by a 2n-th root of unity
    (on exclusive tuples) and under negation (on self-symmetric tuples).

    Both the printed closed forms and the counts from explicit orbit
    enumeration are returned so callers can compare them.
    """
    closed_rot = Fraction(
        sum(_euler_phi(d) * 2 ** (n // d) for d in range(1, n + 1) if n % d == 0 and d % 2 == 1),
        2 * n,
    )
    closed_neg = Fraction(2) ** (n // 2 - 1)

    def rotate(s):
        return (normalize_exp(e + 2, n) for e in s)

    def negate(s):
        return (normalize_exp(e + 2 * n, n) for e in s)

    enum_rot = _orbit_count(exclusive_tuples(n), rotate)
    enum_neg = _orbit_count(self_symmetric_tuples(n), negate)
    return OrbitCounts(closed_rot, closed_neg, enum_rot, enum_neg)
