"""Named verification suites exposed through the command line.

Each suite re-derives a family of exact identities from scratch and reports
one named check per identity family; a suite passes only if every check
passes.  The suites never hard-code expected values beyond exact integers
and Kronecker deltas forced by the theory.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import partitions as pt
from . import peterson as pm
from . import positivity as pos
from . import qhring as qr
from . import symfunc as sf
from . import tuples as tu
from . import viformula as vi
from .exactnum import conj

__all__ = ["Check", "SuiteResult", "SUITES", "DEFAULT_RANK", "run_suite"]


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class SuiteResult:
    suite: str
    n: int
    checks: list = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
        }


# ---------------------------------------------------------------------------
# orthogonality


def _ortho_pair_product(I, J, n):
    """prod_{k,l} (1 - zeta^{i_k} zeta^{-j-hat_l}) over the two tuples."""
    zI = tu.roots_of(I)
    zJhat = tu.roots_of(tu.complement_tuple(J))
    total = 1
    for a in zI:
        for b in zJhat:
            total = total * (1 - a * b.inverse())
    return total


def suite_ortho(n: int) -> SuiteResult:
    res = SuiteResult("ortho-62", n)
    I_n = tu.exclusive_tuples(n)
    box = list(pt.partitions_in_box(n, n))
    D = pt.strict_partitions(n)

    ok = True
    for I in I_n:
        for J in I_n:
            lhs = _ortho_pair_product(I, J, n)
            if I == J:
                rhs = Fraction((2 * n) ** n) * tu.vandermonde_sq(I).inverse()
                ok &= lhs == rhs
            else:
                ok &= not lhs
    res.add("pair_product_delta", ok, "prod (1 - z_i / z_j-hat) collapses to delta")

    ok = True
    for I in I_n:
        zIm = tuple(r.inverse() for r in tu.roots_of(I))
        zIs = tu.roots_of(tu.dual_tuple(I))
        for k in range(n + 1):
            ok &= sf.elem(k, zIm) == sf.complete(k, zIs)
    res.add("elem_complete_duality", ok, "E_k at inverse roots = H_k at dual roots")

    if n <= 3:
        zs = sf.variables(n)
        ok = True
        for J in I_n:
            zJstar = tu.roots_of(tu.dual_tuple(J))
            lhs = sf.SparsePoly.zero(n)
            for lam in box:
                lhs = lhs + sf.qtilde(lam, zs) * sf.hall_littlewood(lam, zJstar)
            rhs = sf.SparsePoly.const(1, n)
            for b in tu.roots_of(tu.complement_tuple(J)):
                binv = b.inverse()
                for zk in zs:
                    rhs = rhs * (sf.SparsePoly.const(1, n) - zk * binv)
            ok &= not (lhs - rhs)
        res.add("cauchy_polynomial_identity", ok, "generating identity in z, all dual tuples")

    ok = True
    for J in I_n:
        zJstar = tu.roots_of(tu.dual_tuple(J))
        hl = {tuple(lam): sf.hall_littlewood(lam, zJstar) for lam in box}
        for I in I_n:
            zI = tu.roots_of(I)
            total = 0
            for lam in box:
                total = total + hl[tuple(lam)] * sf.qtilde(lam, zI)
            if I == J:
                ok &= total == Fraction((2 * n) ** n) * tu.vandermonde_sq(I).inverse()
            else:
                ok &= not total
    res.add("hl_qtilde_delta", ok, "Hall-Littlewood against Q-tilde collapses to delta")

    ok = True
    for I in I_n:
        zI = tu.roots_of(I)
        for J in I_n:
            zJ = tu.roots_of(J)
            total = 0
            for lam in D:
                total = total + sf.ptilde(lam, zI) * sf.ptilde(pt.complement(lam, n), zJ)
            if I == J:
                ok &= total == sf.schur(pt.staircase(n), zI)
            else:
                ok &= not total
    res.add("ptilde_pairing_delta", ok, "P-tilde pairing equals staircase Schur delta")

    # column orthogonality (sums over tuples, deltas over partitions).  The
    # Vandermonde-weighted columns need the short shapes summed over their
    # forced paddings: on the evaluation points a padded shape defines the
    # same function as its base shape, so the unpadded sums split the delta
    # weight across the aliases instead of concentrating it (at rank 2 the
    # empty shape alone yields 1/2).
    points = [
        (tu.roots_of(I), tu.roots_of(tu.dual_tuple(I)), tu.vandermonde_sq(I)) for I in I_n
    ]
    srho_inv = [sf.schur(pt.staircase(n), z).inverse() for z, _, _ in points]
    scale = Fraction(1, (2 * n) ** n)
    ok1 = ok2 = ok3 = True
    for lam in D:
        pads = [pt.pad_og(lam, m, n) for m in range(pt.max_pad_og(lam, n) + 1)]
        for mu in D:
            mu_hat = pt.complement(mu, n)
            t1 = 0
            t2 = 0
            t3 = 0
            for (z, zdual, vsq), sinv in zip(points, srho_inv):
                t1 = t1 + sf.ptilde(lam, z) * sf.ptilde(mu_hat, z) * sinv
                padded = 0
                for shape in pads:
                    padded = padded + sf.hall_littlewood(shape, zdual)
                qv = sf.qtilde(mu, z) * vsq
                t2 = t2 + padded * qv
                # independent route for the main term: the expansion in
                # elementary generators evaluated through the swap, at the
                # direct point, conjugated
                main = conj(sf.omega_dual_value(lam, z))
                alias = padded - sf.hall_littlewood(lam, zdual)
                t3 = t3 + (main + alias) * qv
            delta = 1 if lam == mu else 0
            ok1 &= t1 == delta
            ok2 &= t2 * scale == delta
            ok3 &= t3 * scale == delta
    res.add("column_ortho_staircase", ok1, "P-tilde columns orthogonal against staircase")
    res.add(
        "column_ortho_vandermonde", ok2, "Hall-Littlewood columns against Q-tilde (padded shapes)"
    )
    res.add(
        "column_ortho_involution",
        ok3,
        "main term through the elementary/complete swap at the direct point",
    )

    ok = True
    for I in I_n:
        z = tu.roots_of(I)
        zdual = tu.roots_of(tu.dual_tuple(I))
        for lam in D:
            lhs = conj(sf.omega_dual_value(lam, z))
            rhs = sf.hall_littlewood(lam, zdual)
            diff = lhs - rhs if not isinstance(rhs, int) or isinstance(lhs, int) else rhs - lhs
            ok &= not diff
    res.add(
        "involution_point_duality",
        ok,
        "conjugated swap value at a tuple equals the plain value at its dual",
    )
    return res


def suite_basis(n: int) -> SuiteResult:
    res = SuiteResult("basis-66", n)
    I_n = tu.exclusive_tuples(n)
    D = pt.strict_partitions(n)
    rows = [[sf.ptilde(lam, tu.roots_of(I)) for lam in D] for I in I_n]
    det = sf._det_generic(rows)
    res.add("ptilde_value_matrix_nonsingular", bool(det), "rank-n value matrix, all tuples")
    ok = True
    rho = pt.staircase(n)
    for I in I_n:
        ok &= bool(sf.ptilde(rho, tu.roots_of(I)))
    res.add("staircase_value_nonzero", ok, "top class value nonzero at every tuple")
    return res


# ---------------------------------------------------------------------------
# presentations, pairings, comparison


def suite_presentation_lg(n: int) -> SuiteResult:
    res = SuiteResult("presentation-31", n)
    for name, cls in qr.verify_presentation("lg", n).items():
        res.add(name, cls.is_zero(), str(cls) if not cls.is_zero() else "")
    return res


def suite_presentation_og(n: int) -> SuiteResult:
    res = SuiteResult("presentation-32", n)
    for name, cls in qr.verify_presentation("og", n).items():
        res.add(name, cls.is_zero(), str(cls) if not cls.is_zero() else "")
    return res


def suite_poincare(n: int) -> SuiteResult:
    res = SuiteResult("poincare-73", n)
    D = pt.strict_partitions(n)
    ok = True
    count = 0
    for mu in D:
        for nu in D:
            expect = {0: 1} if mu == nu else {}
            ok &= vi.pairing_og(n, mu, nu) == expect
            count += 1
    res.add("og_pairing_delta", ok, f"{count} pairings all delta")
    if n >= 2:
        ok = True
        count = 0
        for mu in pt.strict_partitions(n - 1):
            for nu in pt.strict_partitions(n - 1):
                expect = {0: 1} if mu == nu else {}
                ok &= vi.pairing_lg(n - 1, mu, nu) == expect
                count += 1
        res.add("lg_pairing_delta", ok, f"{count} pairings all delta (rank {n - 1})")
    return res


def suite_compare(n: int) -> SuiteResult:
    res = SuiteResult("compare-76", n)
    ok_even = ok_odd = True
    tested = 0
    for lam in pt.strict_partitions(n - 1):
        for mu in pt.strict_partitions(n - 1):
            for nu in pt.strict_partitions(n - 1):
                for k in (0, 1):
                    r = vi.compare_og_lg(n, lam, mu, nu, k)
                    ok_even &= r["even"][0] == r["even"][1]
                    ok_odd &= r["odd"][0] == r["odd"][1]
                    tested += 1
    res.add("even_degree_identity", ok_even, f"{tested} index combinations")
    res.add("odd_degree_identity", ok_odd, f"{tested} index combinations")
    return res


# ---------------------------------------------------------------------------
# counts, membership, positivity


def suite_counts(n: int) -> SuiteResult:
    """Counts at the single rank n.  Note the printed closed forms for the
    self-symmetric count and the negation orbits are only correct at even
    ranks; enumeration gives 2^ceil(n/2) and half of it at odd ranks."""
    res = SuiteResult("counts-53", n)
    res.add(
        "tuple_count",
        len(tu.all_tuples(n)) == _binomial(2 * n, n),
        f"|tuples({n})| = C(2n, n)",
    )
    res.add(
        "exclusive_count",
        len(tu.exclusive_tuples(n)) == 2**n,
        f"|exclusive({n})| = 2^{n}",
    )
    enum_ss = len(tu.self_symmetric_tuples(n))
    res.add(
        "self_symmetric_count",
        enum_ss == 2 ** (n // 2),
        f"closed form 2^floor(n/2) vs enumeration {enum_ss}",
    )
    oc = tu.orbit_counts(n)
    res.add(
        "rotation_orbits",
        oc.closed_rotation == oc.enum_rotation,
        f"closed {oc.closed_rotation} vs enumerated {oc.enum_rotation}",
    )
    res.add(
        "negation_orbits",
        oc.closed_negation == oc.enum_negation,
        f"closed {oc.closed_negation} vs enumerated {oc.enum_negation}",
    )
    return res


def _binomial(a: int, b: int) -> int:
    from math import comb

    return comb(a, b)


def suite_membership(n: int) -> SuiteResult:
    res = SuiteResult("membership-52", n)
    ts = (1, 2)

    ok = True
    for I in tu.all_tuples(n):
        for t in ts:
            coords = tuple(r * t for r in tu.roots_of(I))
            ok &= pm.member("C", coords) == tu.is_exclusive(I)
    res.add("c_membership_equivalence", ok, "membership iff exclusive, kinds C")

    ok = True
    for I in tu.all_tuples(n):
        for t in ts:
            coords = tuple(r * t for r in tu.roots_of(I))
            ok &= pm.member("D", coords) == tu.is_exclusive(I)
    res.add("d_membership_equivalence", ok, "membership iff exclusive, kind D")

    ok = True
    for I in tu.all_tuples(n + 1):
        for t in ts:
            coords = tuple(r * t for r in tu.roots_of(I))
            ok &= pm.member("B", coords) == tu.is_exclusive(I)
    res.add("b_membership_equivalence", ok, "membership iff exclusive, kind B (rank+1)")

    ok = True
    for I in tu.all_tuples(n):
        for t in ts:
            coords = tuple(r * t for r in tu.roots_of(I))
            u = pm.build_u("C", coords)
            for r in range(1, n):
                rows, cols = pm.corner_minor_rows_cols(2 * n, r)
                ok &= not pm.minor(u, rows, cols)
            v = pm.build_v(coords)
            for r in range(1, n):
                rows, cols = pm.corner_minor_rows_cols(2 * n + 2, r)
                ok &= not pm.minor(v, rows, cols)
            ok &= not pm.minor(v, *pm.spin_minor_rows_cols(n))
    res.add("cell_closure_minors_vanish", ok, "corner and spin minors vanish on the family")

    ok = True
    for I in tu.exclusive_tuples(n):
        for t in ts:
            coords = tuple(r * t for r in tu.roots_of(I))
            ok &= pm.satisfies_form(pm.build_u("C", coords))
            ok &= pm.satisfies_form(pm.build_v(coords))
    for I in tu.exclusive_tuples(n + 1):
        for t in ts:
            coords = tuple(r * t for r in tu.roots_of(I))
            ok &= pm.satisfies_form(pm.build_u("B", coords))
    res.add("bilinear_form_identity", ok, "members preserve the defining form exactly")

    ok = True
    for I in tu.exclusive_tuples(n):
        for t in ts:
            coords = tuple(r * t for r in tu.roots_of(I))
            ok &= pm.quantum_value("C", coords) == Fraction(t) ** (2 * n) * Fraction(1, 4)
    for I in tu.exclusive_tuples(n + 1):
        for t in ts:
            coords = tuple(r * t for r in tu.roots_of(I))
            q = pm.quantum_value("B", coords)
            z = sf.elem(n + 1, tu.roots_of(I))
            ok &= q == 2 * Fraction(t) ** (n + 1) * z
            ok &= q * q == 4 * Fraction(t) ** (2 * n + 2)
    res.add("quantum_variable_values", ok, "closed forms of the quantum variable")
    return res


def _positivity_sweep(kind: str, n: int) -> SuiteResult:
    suite = "positivity-83" if kind == "C" else "positivity-84"
    res = SuiteResult(suite, n)
    rank = n if kind == "C" else n + 1
    base = tu.base_tuple(rank)
    ts = (Fraction(1, 2), Fraction(1), Fraction(2))

    ok = True
    for t in ts:
        coords = tuple(r * t for r in tu.roots_of(base))
        u = pm.build_u(kind, coords)
        good, stats = pos.totally_nonneg(u)
        ok &= good
    res.add("base_tuple_totally_nonnegative", ok, f"t in {{1/2, 1, 2}}, size {2*n if kind=='C' else 2*n+1}")

    ok_minor = True
    ok_value = True
    witnesses = 0
    for I in tu.self_symmetric_tuples(rank):
        if I == base:
            continue
        # for kind B the rank-n index range can stall on zero values, so the
        # value-side rejection indexes partitions by the tuple rank
        rep = pos.schubert_signs(kind, I, index_rank=rank)
        ok_value &= rep.has_negative()
        for t in ts:
            coords = tuple(r * t for r in tu.roots_of(I))
            good, stats = pos.totally_nonneg(pm.build_u(kind, coords))
            ok_minor &= (not good) and bool(stats.negative_witnesses)
            witnesses += len(stats.negative_witnesses)
    res.add(
        "non_base_negative_minor_witnesses",
        ok_minor,
        f"{witnesses} negative-minor witnesses recorded",
    )
    res.add(
        "non_base_negative_basis_value",
        ok_value,
        "some basis value negative at every non-base tuple (rank-indexed range)",
    )
    return res


def suite_positivity_c(n: int) -> SuiteResult:
    return _positivity_sweep("C", n)


def suite_positivity_b(n: int) -> SuiteResult:
    return _positivity_sweep("B", n)


def suite_dominance(n: int) -> SuiteResult:
    res = SuiteResult("dominance-69", n)
    rep = pos.schubert_signs("C", tu.base_tuple(n))
    res.add(
        "base_tuple_signs_positive",
        all(s == 1 for s in rep.signs.values()),
        f"all {len(rep.signs)} strict partitions",
    )
    ok = True
    for I in tu.exclusive_tuples(n):
        if I == tu.base_tuple(n):
            continue
        rep = pos.schubert_signs("C", I)
        # every value real-and-nonnegative can only happen at the base tuple
        ok &= not rep.all_nonnegative()
    res.add("only_base_tuple_all_nonnegative", ok, "all other exclusive tuples rejected")
    dom = pos.dominance(n)
    res.add("dominance", dom.ok(), f"{dom.checked} comparisons certified")
    return res


SUITES = {
    "ortho-62": suite_ortho,
    "basis-66": suite_basis,
    "presentation-31": suite_presentation_lg,
    "presentation-32": suite_presentation_og,
    "poincare-73": suite_poincare,
    "compare-76": suite_compare,
    "counts-53": suite_counts,
    "membership-52": suite_membership,
    "positivity-83": suite_positivity_c,
    "positivity-84": suite_positivity_b,
    "dominance-69": suite_dominance,
}

DEFAULT_RANK = {
    "ortho-62": 3,
    "basis-66": 4,
    "presentation-31": 3,
    "presentation-32": 3,
    "poincare-73": 3,
    "compare-76": 3,
    "counts-53": 8,
    "membership-52": 3,
    "positivity-83": 3,
    "positivity-84": 2,
    "dominance-69": 3,
}

RANK_CAP = {
    "ortho-62": 4,
    "basis-66": 5,
    "presentation-31": 4,
    "presentation-32": 5,
    "poincare-73": 4,
    "compare-76": 4,
    "counts-53": 12,
    "membership-52": 4,
    "positivity-83": 4,
    "positivity-84": 3,
    "dominance-69": 5,
}


def run_suite(name: str, n: int | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    if n is None:
        n = DEFAULT_RANK[name]
    return SUITES[name](n)
