"""Quantum cohomology rings as computational objects.

A QHClass is a finite integer combination of pairs (strict partition, q-power).
Products are bilinear extensions of the 3-point structure constants, which can
be obtained from three independent engines:

* ``vi_formula``       - the root-of-unity summation formulas (viformula);
* ``ortho_extraction`` - coefficient extraction through the discrete
  orthogonality of P-tilde values against the staircase Schur value;
* ``ideal_reduction``  - exact linear algebra in the graded piece of the
  presented polynomial ring, with symmetric-multiplier ideal generators.

The three must agree entry by entry; the table builder can check that.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import partitions as pt
from . import symfunc as sf
from . import tuples as tu
from . import viformula as vi
from .exactnum import as_rational
from .partitions import Partition

__all__ = [
    "QHClass",
    "MultTable",
    "schubert_class",
    "unit",
    "multiply",
    "structure_constants",
    "ortho_constants",
    "ideal_constants",
    "verify_presentation",
    "full_table",
    "table_to_json",
    "table_from_json",
    "table_to_csv",
    "PROVENANCES",
]

PROVENANCES = ("vi_formula", "ortho_extraction", "ideal_reduction")


def _q_period(ring: str, n: int) -> int:
    """Weight drop per q-power: 2n on the orthogonal side, n+1 on the
    Lagrangian side."""
    if ring == "og":
        return 2 * n
    if ring == "lg":
        return n + 1
    raise ValueError(f"unknown ring tag {ring!r}")


@dataclass(frozen=True)
class QHClass:
    """An element of the quantum ring: finite map (partition, q-power) -> int."""

    ring: str
    n: int
    coeffs: tuple = ()  # sorted tuple of ((parts, k), coeff)

    @staticmethod
    def from_dict(ring: str, n: int, d: dict) -> "QHClass":
        items = tuple(sorted((key, c) for key, c in d.items() if c))
        return QHClass(ring, n, items)

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def __add__(self, other: "QHClass") -> "QHClass":
        self._check(other)
        out = self.as_dict()
        for key, c in other.coeffs:
            out[key] = out.get(key, 0) + c
        return QHClass.from_dict(self.ring, self.n, out)

    def __sub__(self, other: "QHClass") -> "QHClass":
        return self + other.scale(-1)

    def scale(self, c: int) -> "QHClass":
        return QHClass.from_dict(self.ring, self.n, {k: c * v for k, v in self.coeffs})

    def q_shift(self, j: int) -> "QHClass":
        return QHClass.from_dict(
            self.ring, self.n, {(parts, k + j): c for (parts, k), c in self.coeffs}
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "QHClass") -> None:
        if self.ring != other.ring or self.n != other.n:
            raise ValueError("mixed rings")

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for (parts, k), c in self.coeffs:
            name = "[" + pt.format_partition(parts) + "]"
            qpart = "" if k == 0 else (f"*q^{k}" if k > 1 else "*q")
            bits.append(f"{c}{name}{qpart}")
        return " + ".join(bits)


def schubert_class(ring: str, n: int, lam: Partition, k: int = 0) -> QHClass:
    pt.check_strict_in(lam, n)
    return QHClass.from_dict(ring, n, {(tuple(lam), k): 1})


def unit(ring: str, n: int) -> QHClass:
    return QHClass.from_dict(ring, n, {((), 0): 1})


# ---------------------------------------------------------------------------
# structure-constant engines


def _candidates(ring: str, n: int, lam: Partition, mu: Partition):
    """(nu, k) pairs allowed by the grading for the product lam * mu."""
    period = _q_period(ring, n)
    target = pt.weight(lam) + pt.weight(mu)
    for nu in pt.strict_partitions(n):
        drop = target - pt.weight(nu)
        if drop >= 0 and drop % period == 0:
            yield nu, drop // period


@lru_cache(maxsize=None)
def _vi_constants(ring: str, n: int, lam: Partition, mu: Partition):
    engine = vi.gw_og if ring == "og" else vi.gw_lg
    out = {}
    for nu, k in _candidates(ring, n, lam, mu):
        c = engine(n, lam, mu, nu, k)
        if c:
            out[(nu, k)] = c
    return out


@lru_cache(maxsize=None)
def _ortho_point_data(rank: int):
    """Per exclusive tuple: root point and the inverse staircase Schur value."""
    out = []
    for I in tu.exclusive_tuples(rank):
        z = tu.roots_of(I)
        out.append((z, sf.schur(pt.staircase(rank), z).inverse()))
    return tuple(out)


@lru_cache(maxsize=None)
def _ortho_constants_cached(ring: str, n: int, lam: Partition, mu: Partition):
    out = {}
    if ring == "og":
        data = _ortho_point_data(n)
        prods = [
            (sf.ptilde(lam, z) * sf.ptilde(mu, z) * srho_inv, z) for z, srho_inv in data
        ]
        for nu, k in _candidates(ring, n, lam, mu):
            nu_hat = pt.complement(nu, n)
            total = 0
            for pv, z in prods:
                total = total + pv * sf.ptilde(nu_hat, z)
            value = as_rational(total * Fraction(4**k))
            if value is None or value.denominator != 1:
                raise vi.IntegralityError(f"ortho extraction non-integral at {nu}, q^{k}")
            if value:
                out[(nu, k)] = int(value)
    elif ring == "lg":
        data = _ortho_point_data(n + 1)
        prods = [
            (sf.qtilde(lam, z) * sf.qtilde(mu, z) * srho_inv, z) for z, srho_inv in data
        ]
        for nu, d in _candidates(ring, n, lam, mu):
            # on the evaluation points the d-th q-power folds into one extra
            # part n+1 when d is odd (the squared top root value is 1)
            kappa = nu if d % 2 == 0 else (n + 1,) + tuple(nu)
            kappa_hat = pt.complement(kappa, n + 1)
            total = 0
            for pv, z in prods:
                total = total + pv * sf.ptilde(kappa_hat, z)
            value = as_rational(total) / Fraction(2 ** (d + len(kappa)))
            if value.denominator != 1:
                raise vi.IntegralityError(f"ortho extraction non-integral at {nu}, q^{d}")
            if value:
                out[(nu, d)] = int(value)
    else:
        raise ValueError(f"unknown ring tag {ring!r}")
    return out


def ortho_constants(ring: str, n: int, lam: Partition, mu: Partition):
    """Structure constants by orthogonality extraction (no Vandermonde sums,
    no Hall-Littlewood values; divides by staircase Schur values instead)."""
    for p in (lam, mu):
        pt.check_strict_in(p, n)
    return dict(_ortho_constants_cached(ring, n, tuple(lam), tuple(mu)))


# -- ideal reduction ---------------------------------------------------------


def _weighted_monomials(nvars: int, wdeg: int):
    """Exponent tuples (a_1..a_nvars) with sum i*a_i = wdeg (weights 1..nvars)."""

    def rec(i, remaining):
        if i == nvars:
            if remaining == 0:
                yield ()
            return
        w = i + 1
        for a in range(remaining // w, -1, -1):
            for rest in rec(i + 1, remaining - w * a):
                yield (a,) + rest

    yield from rec(0, wdeg)


@lru_cache(maxsize=None)
def _gen_symbols(nvars: int):
    """E-value vector [1, g_1, ..., g_nvars, 0, 0, ...] over the free
    polynomial ring in the elementary generators."""
    gs = sf.variables(nvars)
    return [1] + list(gs) + [0] * (2 * nvars + 2)


def _solve_graded(target: sf.SparsePoly, basis: list, gens: list, nvars: int, wdeg: int):
    """Solve target = sum c_i basis_i + sum_j gens_j * (symmetric multiplier)
    in the graded piece of weighted degree wdeg; returns the c_i (Fractions).

    The generators are paired with all monomial multipliers of complementary
    weighted degree; the resulting linear system is solved exactly and must be
    consistent (the basis property of the quotient makes the c_i unique).
    """
    weights = tuple(range(1, nvars + 1))
    rows = {m: i for i, m in enumerate(_weighted_monomials(nvars, wdeg))}

    columns = []
    for b in basis:
        columns.append(b)
    mult_cols = []
    for g in gens:
        gdeg = g.weighted_degree(weights)
        for m in _weighted_monomials(nvars, wdeg - gdeg):
            mult_cols.append(g * sf.SparsePoly(nvars, {m: 1}))
    columns.extend(mult_cols)

    nrows, ncols = len(rows), len(columns)
    A = [[Fraction(0)] * (ncols + 1) for _ in range(nrows)]
    for j, col in enumerate(columns):
        for e, c in col.terms.items():
            A[rows[e]][j] = Fraction(c)
    for e, c in target.terms.items():
        A[rows[e]][ncols] = Fraction(c)

    # Gaussian elimination to reduced row echelon form
    pivot_of_col = {}
    r = 0
    for cidx in range(ncols):
        prow = None
        for i in range(r, nrows):
            if A[i][cidx]:
                prow = i
                break
        if prow is None:
            continue
        A[r], A[prow] = A[prow], A[r]
        inv = 1 / A[r][cidx]
        A[r] = [a * inv for a in A[r]]
        for i in range(nrows):
            if i != r and A[i][cidx]:
                f = A[i][cidx]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivot_of_col[cidx] = r
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if A[i][ncols]:
            raise ArithmeticError("inconsistent reduction system (basis assumption violated)")
    # particular solution: free variables zero
    return [A[pivot_of_col[j]][ncols] if j in pivot_of_col else Fraction(0) for j in range(len(basis))]


_IDEAL_DEGREE_CAP = 24


@lru_cache(maxsize=None)
def _ideal_constants_cached(ring: str, n: int, lam: Partition, mu: Partition):
    if ring == "og":
        nvars = n
        E = _gen_symbols(nvars)
        target = sf.ptilde_from_elems(lam, E) * sf.ptilde_from_elems(mu, E)
        qimage = Fraction(1, 4) * sf._pair_from_elems(n, n, E)
        gens = [sf._pair_from_elems(i, i, E) for i in range(1, n)]
        basis_fn = sf.ptilde_from_elems
    elif ring == "lg":
        nvars = n + 1
        E = _gen_symbols(nvars)
        target = sf.qtilde_from_elems(lam, E) * sf.qtilde_from_elems(mu, E)
        qimage = 2 * sf.SparsePoly.variable(nvars - 1, nvars)
        gens = [sf._pair_from_elems(i, i, E) for i in range(1, n + 1)]
        basis_fn = sf.qtilde_from_elems
    else:
        raise ValueError(f"unknown ring tag {ring!r}")

    wdeg = pt.weight(lam) + pt.weight(mu)
    if wdeg > _IDEAL_DEGREE_CAP:
        raise ValueError(f"ideal reduction capped at total degree {_IDEAL_DEGREE_CAP}")
    if wdeg == 0:
        return {((), 0): 1} if lam == mu == () else {}

    cand = list(_candidates(ring, n, lam, mu))
    basis = [basis_fn(nu, E) * qimage**k for nu, k in cand]
    target = sf.SparsePoly.const(1, nvars) * target  # promote possible scalars
    coeffs = _solve_graded(target, basis, gens, nvars, wdeg)
    out = {}
    for (nu, k), c in zip(cand, coeffs):
        if c:
            if c.denominator != 1:
                raise vi.IntegralityError(f"ideal reduction non-integral at {nu}, q^{k}")
            out[(nu, k)] = int(c)
    return out


def ideal_constants(ring: str, n: int, lam: Partition, mu: Partition):
    """Structure constants by exact linear algebra in the presented ring."""
    for p in (lam, mu):
        pt.check_strict_in(p, n)
    return dict(_ideal_constants_cached(ring, n, tuple(lam), tuple(mu)))


def structure_constants(ring: str, n: int, lam: Partition, mu: Partition, provenance: str = "vi_formula"):
    """Structure constants of the product of two Schubert classes."""
    lam, mu = tuple(lam), tuple(mu)
    if (lam, mu) > (mu, lam):
        lam, mu = mu, lam  # engines are symmetric; canonicalize the cache key
    if provenance == "vi_formula":
        return dict(_vi_constants(ring, n, lam, mu))
    if provenance == "ortho_extraction":
        return ortho_constants(ring, n, lam, mu)
    if provenance == "ideal_reduction":
        return ideal_constants(ring, n, lam, mu)
    raise ValueError(f"unknown provenance {provenance!r}")


# ---------------------------------------------------------------------------
# products, presentation checks, tables


def multiply(a: QHClass, b: QHClass, provenance: str = "vi_formula") -> QHClass:
    """Product in the quantum ring; q acts as a free central variable."""
    a._check(b)
    out: dict = {}
    for (lam, j1), c1 in a.coeffs:
        for (mu, j2), c2 in b.coeffs:
            consts = structure_constants(a.ring, a.n, lam, mu, provenance)
            for (nu, k), c in consts.items():
                key = (nu, k + j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2 * c
    return QHClass.from_dict(a.ring, a.n, out)


def _gen_class(ring: str, n: int, j: int) -> QHClass:
    """Single-row class with the conventions: index 0 is the unit, an index
    outside 1..n is zero."""
    if j == 0:
        return unit(ring, n)
    if j < 0 or j > n:
        return QHClass(ring, n)
    return schubert_class(ring, n, (j,))


def verify_presentation(ring: str, n: int, provenance: str = "vi_formula") -> dict[str, QHClass]:
    """Evaluate every presentation relation; the residuals must all be zero.

    Orthogonal side: the two-row relations for r = 1..n-1 plus the quantum
    relation (top class squared equals q).  Lagrangian side: the quadratic
    relations for r = 1..n with the q-correction term.
    """
    res: dict[str, QHClass] = {}

    def mul(a, b):
        return multiply(a, b, provenance)

    if ring == "og":
        for r in range(1, n):
            acc = mul(_gen_class(ring, n, r), _gen_class(ring, n, r))
            for i in range(1, r):
                term = mul(_gen_class(ring, n, r + i), _gen_class(ring, n, r - i)).scale(2)
                acc = acc + (term if i % 2 == 0 else term.scale(-1))
            two_r = _gen_class(ring, n, 2 * r)
            acc = acc + (two_r if r % 2 == 0 else two_r.scale(-1))
            res[f"two_row_{r}"] = acc
        top = _gen_class(ring, n, n)
        res["quantum"] = mul(top, top) - unit(ring, n).q_shift(1)
    elif ring == "lg":
        for r in range(1, n + 1):
            acc = mul(_gen_class(ring, n, r), _gen_class(ring, n, r))
            for i in range(1, n - r + 1):
                term = mul(_gen_class(ring, n, r + i), _gen_class(ring, n, r - i)).scale(2)
                acc = acc + (term if i % 2 == 0 else term.scale(-1))
            rhs = _gen_class(ring, n, 2 * r - n - 1).q_shift(1)
            acc = acc - (rhs if (n - r) % 2 == 0 else rhs.scale(-1))
            res[f"quadratic_{r}"] = acc
    else:
        raise ValueError(f"unknown ring tag {ring!r}")
    return res


@dataclass
class MultTable:
    """Full multiplication table over the Schubert basis."""

    ring: str
    n: int
    provenance: str
    entries: dict = field(default_factory=dict)  # (lam, mu) -> {(nu, k): coeff}

    def __eq__(self, other):
        if not isinstance(other, MultTable):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.n == other.n
            and self.entries == other.entries
        )

    def first_difference(self, other: "MultTable"):
        """First (lam, mu, nu, k) where the two tables disagree, or None."""
        for key in sorted(set(self.entries) | set(other.entries)):
            a = self.entries.get(key, {})
            b = other.entries.get(key, {})
            if a != b:
                for term in sorted(set(a) | set(b)):
                    if a.get(term, 0) != b.get(term, 0):
                        return key + term
        return None


def full_table(ring: str, n: int, provenance: str = "vi_formula") -> MultTable:
    """All pairwise products of Schubert basis classes."""
    basis = pt.strict_partitions(n)
    entries = {}
    for lam in basis:
        for mu in basis:
            entries[(lam, mu)] = structure_constants(ring, n, lam, mu, provenance)
    return MultTable(ring, n, provenance, entries)


# ---------------------------------------------------------------------------
# serialization (bit-exact round trip)

SCHEMA_VERSION = 1


def _part_key(parts: Partition):
    return (sum(parts), parts)


def table_to_json(table: MultTable, library_version: str = "0") -> str:
    entries = []
    for (lam, mu) in sorted(table.entries, key=lambda p: (_part_key(p[0]), _part_key(p[1]))):
        terms = [
            {"nu": pt.format_partition(nu), "k": k, "coeff": c}
            for (nu, k), c in sorted(
                table.entries[(lam, mu)].items(), key=lambda t: (t[0][1], _part_key(t[0][0]))
            )
        ]
        entries.append(
            {"lambda": pt.format_partition(lam), "mu": pt.format_partition(mu), "terms": terms}
        )
    doc = {
        "schema_version": SCHEMA_VERSION,
        "library_version": library_version,
        "ring": table.ring,
        "n": table.n,
        "provenance": table.provenance,
        "entries": entries,
    }
    import hashlib

    canon = json.dumps(entries, sort_keys=True, separators=(",", ":"))
    doc["checksum"] = "sha256:" + hashlib.sha256(canon.encode()).hexdigest()
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def table_from_json(text: str) -> MultTable:
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError("unsupported table schema version")
    entries = {}
    for rec in doc["entries"]:
        lam = pt.parse_partition(rec["lambda"])
        mu = pt.parse_partition(rec["mu"])
        entries[(lam, mu)] = {
            (pt.parse_partition(t["nu"]), t["k"]): t["coeff"] for t in rec["terms"]
        }
    return MultTable(doc["ring"], doc["n"], doc["provenance"], entries)


def table_checksum_ok(text: str) -> bool:
    """Re-derive the embedded checksum of a serialized table."""
    import hashlib

    doc = json.loads(text)
    canon = json.dumps(doc["entries"], sort_keys=True, separators=(",", ":"))
    return doc.get("checksum") == "sha256:" + hashlib.sha256(canon.encode()).hexdigest()


def table_to_csv(table: MultTable) -> str:
    lines = ["lambda,mu,nu,k,coeff"]
    for (lam, mu) in sorted(table.entries, key=lambda p: (_part_key(p[0]), _part_key(p[1]))):
        for (nu, k), c in sorted(
            table.entries[(lam, mu)].items(), key=lambda t: (t[0][1], _part_key(t[0][0]))
        ):
            lines.append(
                f'"{pt.format_partition(lam)}","{pt.format_partition(mu)}","{pt.format_partition(nu)}",{k},{c}'
            )
    return "\n".join(lines) + "\n"
