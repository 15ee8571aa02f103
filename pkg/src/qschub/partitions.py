"""Partitions and strict partitions indexing Schubert classes.

A partition is a tuple of weakly decreasing positive integers; the empty
tuple is the empty partition (the unit class).  Strict partitions with parts
bounded by n index the Schubert basis of both LG(n) and the maximal
orthogonal Grassmannian of the same rank; there are 2^n of them.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

Partition = tuple[int, ...]

__all__ = [
    "Partition",
    "weight",
    "is_partition",
    "is_strict",
    "check_strict_in",
    "strict_partitions",
    "complement",
    "staircase",
    "pad_og",
    "max_pad_og",
    "pad_lg",
    "max_pad_lg",
    "partitions_in_box",
    "parse_partition",
    "format_partition",
]


def weight(lam: Partition) -> int:
    return sum(lam)


def is_partition(lam) -> bool:
    return all(isinstance(p, int) and p > 0 for p in lam) and all(
        a >= b for a, b in zip(lam, lam[1:])
    )


def is_strict(lam) -> bool:
    return is_partition(lam) and all(a > b for a, b in zip(lam, lam[1:]))


def check_strict_in(lam: Partition, n: int) -> None:
    """Raise ValueError unless lam is a strict partition with parts <= n."""
    if not is_strict(lam):
        raise ValueError(f"{format_partition(lam)!r} is not strictly decreasing")
    if lam and lam[0] > n:
        raise ValueError(f"part {lam[0]} exceeds the rank bound {n}")


@lru_cache(maxsize=None)
def strict_partitions(n: int) -> tuple[Partition, ...]:
    """All 2^n strict partitions with parts in {1..n}, graded-lex order."""
    if n < 0:
        raise ValueError("rank must be nonnegative")
    out = []
    for k in range(n + 1):
        for parts in combinations(range(n, 0, -1), k):
            out.append(parts)
    out.sort(key=lambda p: (sum(p), p))
    return tuple(out)


def complement(lam: Partition, n: int) -> Partition:
    """Parts complementary to lam inside {1..n}, sorted decreasingly."""
    check_strict_in(lam, n)
    present = set(lam)
    return tuple(p for p in range(n, 0, -1) if p not in present)


def staircase(n: int) -> Partition:
    """(n, n-1, ..., 1), the top Schubert class index."""
    return tuple(range(n, 0, -1))


def max_pad_og(nu: Partition, n: int) -> int:
    """Largest m so that 2m parts equal to n fit above nu inside the n-box."""
    return (n - len(nu)) // 2


def pad_og(nu: Partition, m: int, n: int) -> Partition:
    """Prepend 2m parts equal to n to the strict partition nu."""
    check_strict_in(nu, n)
    if m < 0 or m > max_pad_og(nu, n):
        raise ValueError(f"padding count {m} out of range 0..{max_pad_og(nu, n)}")
    return (n,) * (2 * m) + tuple(nu)


def max_pad_lg(nu: Partition, d: int, n: int) -> int:
    """Padding bound for the Lagrangian side; depends on the parity of d."""
    if d % 2 == 0:
        return (n + 1 - len(nu)) // 2
    return (n - len(nu)) // 2


def pad_lg(nu: Partition, m: int, d: int, n: int) -> Partition:
    """Prepend 2m (d even) or 2m+1 (d odd) parts equal to n+1 to nu."""
    check_strict_in(nu, n)
    if m < 0 or m > max_pad_lg(nu, d, n):
        raise ValueError(f"padding count {m} out of range 0..{max_pad_lg(nu, d, n)}")
    rows = 2 * m if d % 2 == 0 else 2 * m + 1
    return (n + 1,) * rows + tuple(nu)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions with at most `rows` parts, each at most `cols` (lazy)."""

    def rec(maxpart: int, remaining_rows: int) -> Iterator[Partition]:
        yield ()
        if remaining_rows == 0:
            return
        for first in range(maxpart, 0, -1):
            for rest in rec(first, remaining_rows - 1):
                yield (first,) + rest

    return rec(cols, rows)


def parse_partition(text: str) -> Partition:
    """Parse a comma-joined part list; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError as e:
        raise ValueError(f"cannot parse partition {text!r}: {e}") from None
    if not is_partition(parts):
        raise ValueError(f"{text!r} is not weakly decreasing with positive parts")
    return parts


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)
