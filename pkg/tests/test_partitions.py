"""Strict partitions, complements, and the padded output shapes."""

import pytest
from hypothesis import given, strategies as st

from qschub import partitions as pt


def test_strict_enumeration():
    assert pt.strict_partitions(1) == ((), (1,))
    assert pt.strict_partitions(2) == ((), (1,), (2,), (2, 1))
    for n in range(0, 13):
        assert len(pt.strict_partitions(n)) == 2**n


def test_complement():
    assert pt.complement((), 3) == (3, 2, 1)
    assert pt.complement((3, 1), 3) == (2,)
    for n in (3, 4, 5):
        for lam in pt.strict_partitions(n):
            assert pt.complement(pt.complement(lam, n), n) == lam
            assert pt.weight(lam) + pt.weight(pt.complement(lam, n)) == n * (n + 1) // 2
    with pytest.raises(ValueError):
        pt.complement((4,), 3)


def test_pad_og():
    assert pt.pad_og((2, 1), 0, 3) == (2, 1)
    assert pt.max_pad_og((2, 1), 3) == 0
    assert pt.pad_og((1,), 1, 3) == (3, 3, 1)
    assert pt.max_pad_og((1,), 3) == 1
    assert pt.pad_og((), 2, 4) == (4, 4, 4, 4)
    with pytest.raises(ValueError):
        pt.pad_og((1,), 2, 3)


def test_pad_lg():
    assert pt.pad_lg((1,), 0, 0, 2) == (1,)
    assert pt.max_pad_lg((1,), 0, 2) == 1
    assert pt.pad_lg((1,), 0, 1, 2) == (3, 1)
    assert pt.max_pad_lg((1,), 1, 2) == 0
    assert pt.pad_lg((), 1, 0, 2) == (3, 3)
    with pytest.raises(ValueError):
        pt.pad_lg((1,), 1, 1, 2)


def test_padded_weights():
    for n in (2, 3, 4):
        for nu in pt.strict_partitions(n):
            for m in range(pt.max_pad_og(nu, n) + 1):
                assert pt.weight(pt.pad_og(nu, m, n)) == pt.weight(nu) + 2 * m * n
            for d in (0, 1):
                for m in range(pt.max_pad_lg(nu, d, n) + 1):
                    rows = 2 * m if d % 2 == 0 else 2 * m + 1
                    assert pt.weight(pt.pad_lg(nu, m, d, n)) == pt.weight(nu) + (n + 1) * rows
                    assert len(pt.pad_lg(nu, m, d, n)) <= n + 1


def test_partitions_in_box():
    assert len(list(pt.partitions_in_box(2, 2))) == 6
    assert len(list(pt.partitions_in_box(3, 3))) == 20
    assert len(list(pt.partitions_in_box(4, 4))) == 70
    for lam in pt.partitions_in_box(3, 5):
        assert len(lam) <= 3 and (not lam or lam[0] <= 5)
        assert pt.is_partition(lam)


@given(st.lists(st.integers(1, 9), max_size=5))
def test_parse_format_roundtrip(parts):
    parts = tuple(sorted(parts, reverse=True))
    text = pt.format_partition(parts)
    assert pt.parse_partition(text) == parts


def test_parse_rejects_non_partitions():
    with pytest.raises(ValueError):
        pt.parse_partition("2,3")
    with pytest.raises(ValueError):
        pt.parse_partition("1,x")
    with pytest.raises(ValueError):
        pt.check_strict_in((2, 2), 3)
