"""Total positivity of matrix-model elements and positivity of Schubert
basis values at root-of-unity points.

Minor enumeration is exhaustive for matrix size up to 8 (12869 square minors
at size 8), computed with a shared-subminor dynamic program; above that the
sweep falls back to all contiguous minors plus seeded random index sets, so
it is a sound spot-check rather than a proof.  Every sign is certified in
exact arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import partitions as pt
from . import symfunc as sf
from . import tuples as tu
from .exactnum import CycloNum, certified_sign, conj
from .peterson import PetersonMatrix

__all__ = [
    "MinorStats",
    "PositivityReport",
    "DominanceReport",
    "iter_minors",
    "totally_nonneg",
    "schubert_signs",
    "dominance",
    "EXHAUSTIVE_SIZE_LIMIT",
]

EXHAUSTIVE_SIZE_LIMIT = 8
_SAMPLES_PER_SIZE = 40


def _sign_of(value) -> int:
    if isinstance(value, CycloNum):
        return certified_sign(value)
    f = Fraction(value)
    return (f > 0) - (f < 0)


def _require_real(mat) -> None:
    for row in mat:
        for e in row:
            if isinstance(e, CycloNum) and conj(e) != e:
                raise ValueError("matrix has non-real entries")


def iter_minors(mat, exhaustive: bool | None = None, seed: int = 0):
    """Yield ((rows, cols), value) over square minors of a matrix.

    Exhaustive (all index sets, shared-subminor dynamic program) when the
    size is at most EXHAUSTIVE_SIZE_LIMIT or forced; otherwise contiguous
    minors of every size plus seeded random index sets.
    """
    size = len(mat)
    if exhaustive is None:
        exhaustive = size <= EXHAUSTIVE_SIZE_LIMIT
    if exhaustive:
        prev: dict = {}
        for k in range(1, size + 1):
            cur: dict = {}
            for rows in combinations(range(size), k):
                for cols in combinations(range(size), k):
                    if k == 1:
                        det = mat[rows[0]][cols[0]]
                    else:
                        det = 0
                        r_last = rows[-1]
                        head = rows[:-1]
                        sign = 1 if k % 2 == 1 else -1
                        for pos, c in enumerate(cols):
                            a = mat[r_last][c]
                            if a:
                                term = a * prev[(head, cols[:pos] + cols[pos + 1 :])]
                                det = det + (term if sign > 0 else -term)
                            sign = -sign
                    cur[(rows, cols)] = det
                    yield (rows, cols), det
            prev = cur
        return

    rng = random.Random(seed)
    for k in range(1, size + 1):
        seen = set()
        for r0 in range(size - k + 1):
            for c0 in range(size - k + 1):
                rows = tuple(range(r0, r0 + k))
                cols = tuple(range(c0, c0 + k))
                seen.add((rows, cols))
        for _ in range(_SAMPLES_PER_SIZE):
            rows = tuple(sorted(rng.sample(range(size), k)))
            cols = tuple(sorted(rng.sample(range(size), k)))
            seen.add((rows, cols))
        for rows, cols in sorted(seen):
            sub = [[mat[i][j] for j in cols] for i in rows]
            yield (rows, cols), sf._det_generic(sub)


@dataclass
class MinorStats:
    positive: int = 0
    zero: int = 0
    negative: int = 0
    negative_witnesses: list = field(default_factory=list)  # (rows, cols)
    exhaustive: bool = True

    @property
    def total(self) -> int:
        return self.positive + self.zero + self.negative

    def to_json(self) -> dict:
        return {
            "positive": self.positive,
            "zero": self.zero,
            "negative": self.negative,
            "exhaustive": self.exhaustive,
            "negative_witnesses": [
                {"rows": list(r), "cols": list(c)} for r, c in self.negative_witnesses
            ],
        }


def totally_nonneg(u: PetersonMatrix, max_witnesses: int = 4) -> tuple[bool, MinorStats]:
    """Certified-sign check of every enumerated minor of a real matrix.

    Returns (all minors nonnegative, statistics with negative witnesses).
    """
    _require_real(u.mat)
    size = u.size
    stats = MinorStats(exhaustive=size <= EXHAUSTIVE_SIZE_LIMIT)
    for (rows, cols), det in iter_minors(u.mat):
        s = _sign_of(det)
        if s > 0:
            stats.positive += 1
        elif s == 0:
            stats.zero += 1
        else:
            stats.negative += 1
            if len(stats.negative_witnesses) < max_witnesses:
                stats.negative_witnesses.append((rows, cols))
    return stats.negative == 0, stats


@dataclass
class PositivityReport:
    """Signs of Schubert basis values at one root tuple, with metadata."""

    kind: str
    exps: tuple
    signs: dict = field(default_factory=dict)  # partition -> -1/0/1 or "non-real"

    def all_nonnegative(self) -> bool:
        return all(isinstance(s, int) and s >= 0 for s in self.signs.values())

    def has_negative(self) -> bool:
        return any(s == -1 for s in self.signs.values())

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "exps_doubled": list(self.exps),
            "exponent_convention": "stored integers are twice the root exponents",
            "signs": {pt.format_partition(l) or "()": s for l, s in self.signs.items()},
        }


def schubert_signs(kind: str, exps, index_rank: int | None = None) -> PositivityReport:
    """Exact signs of the Schubert basis values at the root point of exps.

    Kind C at rank n uses the halved P-tilde values over rank-n tuples; kind
    B uses the Q-tilde values over rank-(n+1) tuples, indexed by rank-n
    strict partitions either way.  ``index_rank`` widens the partition range
    (the ratchet from rank n to rank n+1 values can stall on zero values, so
    the sound rejection test on the B side indexes by rank n+1).  Non-real
    values (tuple not closed under conjugation) are recorded as "non-real".
    """
    exps = tuple(exps)
    if kind == "C":
        n = len(exps)
        value = sf.ptilde
    elif kind == "B":
        n = len(exps) - 1
        value = sf.qtilde
    else:
        raise ValueError("schubert_signs handles kinds C and B")
    if index_rank is None:
        index_rank = n
    z = tu.roots_of(exps)
    report = PositivityReport(kind, exps)
    for lam in pt.strict_partitions(index_rank):
        v = value(lam, z)
        if isinstance(v, CycloNum):
            if conj(v) != v:
                report.signs[lam] = "non-real"
                continue
            report.signs[lam] = certified_sign(v)
        else:
            report.signs[lam] = _sign_of(v)
    return report


@dataclass
class DominanceReport:
    n: int
    failures: list = field(default_factory=list)  # (lam, exps)
    checked: int = 0

    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "checked": self.checked,
            "failures": [
                {"lam": pt.format_partition(l) or "()", "exps_doubled": list(e)}
                for l, e in self.failures
            ],
        }


def dominance(n: int) -> DominanceReport:
    """For every strict partition and every exclusive tuple, certify that the
    base-tuple value dominates the absolute value at the tuple:
    value(base)^2 - value(I) * conj(value(I)) >= 0, exactly."""
    def abs_sq(v):
        if isinstance(v, CycloNum):
            return v * conj(v)
        return Fraction(v) ** 2

    report = DominanceReport(n)
    base = tu.roots_of(tu.base_tuple(n))
    for lam in pt.strict_partitions(n):
        v0sq = abs_sq(sf.ptilde(lam, base))
        for I in tu.exclusive_tuples(n):
            diff = v0sq - abs_sq(sf.ptilde(lam, tu.roots_of(I)))
            report.checked += 1
            if _sign_of(diff) < 0:
                report.failures.append((lam, I))
    return report
