"""Root-of-unity index combinatorics: windows, exclusivity, duals, orbits."""

from fractions import Fraction

import pytest

from qschub import exactnum as ex
from qschub import symfunc as sf
from qschub import tuples as tu


def test_window_and_counts():
    assert len(tu.all_tuples(2)) == 6
    for n in range(1, 9):
        assert len(tu.exponent_window(n)) == 2 * n
        assert len(tu.exclusive_tuples(n)) == 2**n
    # enumerated self-symmetric counts: 2^ceil(n/2) (even n matches the
    # 2^floor(n/2) closed form; odd n does not -- see the decisions notes)
    for n in range(1, 9):
        assert len(tu.self_symmetric_tuples(n)) == 2 ** ((n + 1) // 2)


def test_roots_satisfy_defining_equation():
    for n in (1, 2, 3, 4, 5):
        target = 1 if n % 2 == 1 else -1
        for e in tu.exponent_window(n):
            z = ex.cyclo_root(tu.conductor(n), e)
            assert z ** (2 * n) == target


def test_base_tuple():
    assert tu.base_tuple(2) == (-1, 1)
    assert tu.base_tuple(3) == (-2, 0, 2)
    for n in range(1, 8):
        b = tu.base_tuple(n)
        assert b in tu.self_symmetric_tuples(n)
        sq = tu.squared_roots(b)
        E = sf.elem_values(sq, n)
        for i in range(1, n):
            assert not E[i]
        assert E[n] == 1


def test_exclusive_characterization():
    # a tuple is exclusive exactly when the elementary values of its squared
    # roots vanish below the top
    for n in range(1, 6):
        for I in tu.all_tuples(n):
            sq = tu.squared_roots(I)
            E = sf.elem_values(sq, n)
            vanishes = not any(E[i] for i in range(1, n))
            assert vanishes == tu.is_exclusive(I), (n, I)


def test_complement_and_dual():
    for n in (2, 3, 4):
        win = set(tu.exponent_window(n))
        for J in tu.all_tuples(n):
            hat = tu.complement_tuple(J)
            assert set(J) | set(hat) == win
            assert tu.complement_tuple(hat) == J
        for J in tu.exclusive_tuples(n):
            Js = tu.dual_tuple(J)
            assert Js in tu.exclusive_tuples(n)
            covered = set(J) | {tu.normalize_exp(2 * n - e, n) for e in Js}
            assert covered == win
            assert tu.dual_tuple(Js) == J
    assert sorted(tu.dual_tuple(J) for J in tu.exclusive_tuples(3)) == sorted(
        tu.exclusive_tuples(3)
    )
    with pytest.raises(ValueError):
        nonexcl = next(t for t in tu.all_tuples(2) if not tu.is_exclusive(t))
        tu.dual_tuple(nonexcl)


def test_vandermonde():
    assert tu.vandermonde_sq(tu.base_tuple(1)) == 1
    assert ex.as_rational(tu.vandermonde_sq(tu.base_tuple(2))) == 2
    for n in (2, 3, 4):
        for J in tu.exclusive_tuples(n):
            v = tu.vandermonde_sq(J)
            assert ex.conj(v) == v
            assert ex.certified_sign(v) == 1


def test_pair_product_identity():
    # prod_{k,l} (1 - z_{i_k} / z_{j-hat_l}) = delta * (2n)^n / vandermonde_sq
    for n in (2, 3, 4):
        for I in tu.exclusive_tuples(n):
            zI = tu.roots_of(I)
            for J in tu.exclusive_tuples(n):
                zJhat = tu.roots_of(tu.complement_tuple(J))
                total = 1
                for a in zI:
                    for b in zJhat:
                        total = total * (1 - a * b.inverse())
                if I == J:
                    assert total == Fraction((2 * n) ** n) * tu.vandermonde_sq(I).inverse()
                else:
                    assert not total


def test_elem_complete_duality():
    for n in (2, 3, 4):
        for I in tu.exclusive_tuples(n):
            zIm = tuple(r.inverse() for r in tu.roots_of(I))
            zIs = tu.roots_of(tu.dual_tuple(I))
            for k in range(n + 1):
                assert sf.elem(k, zIm) == sf.complete(k, zIs)


def test_orbit_counts():
    oc = tu.orbit_counts(2)
    assert oc.closed_negation == 1 and oc.enum_negation == 1
    oc = tu.orbit_counts(3)
    assert oc.closed_rotation == 2 and oc.enum_rotation == 2
    # the rotation closed form matches enumeration at every rank
    for n in range(1, 11):
        oc = tu.orbit_counts(n)
        assert oc.closed_rotation == oc.enum_rotation, n
    # the negation closed form matches only at even ranks; enumeration gives
    # half the self-symmetric count (see decisions notes for the odd case)
    for n in range(1, 9):
        oc = tu.orbit_counts(n)
        assert oc.enum_negation == len(tu.self_symmetric_tuples(n)) // 2
        if n % 2 == 0:
            assert oc.closed_negation == oc.enum_negation
        else:
            assert oc.closed_negation != oc.enum_negation
