"""Explicit matrix models for the one-dimensional varieties whose coordinate
rings realize the quantum rings.

Three kinds of unipotent matrices are built from a coordinate vector x:

* kind C: the 2n x 2n banded Toeplitz matrix with bands E_1(x)..E_n(x)
  (symplectic bilinear form);
* kind B: the (2n+1) x (2n+1) banded Toeplitz matrix built from n+1
  coordinates (odd orthogonal form);
* kind D: the (2n+2) x (2n+2) block matrix with prescribed corner blocks
  (even orthogonal form).

Membership in the variety is the vanishing of E_i(x_1^2, ..., x_k^2) for all
i strictly below the coordinate count, which happens exactly when x is a
scalar multiple of an exclusive root tuple.  Minors are exact determinants
and work over symbolic entries as well, so the block transcription can be
validated by executable identities (the bilinear-form identity and the
closed form of the spin-weight minor after specialization).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import symfunc as sf
from .exactnum import CycloNum
from .partitions import Partition

__all__ = [
    "PetersonMatrix",
    "build_u",
    "build_v",
    "v_symbolic",
    "bilinear_form",
    "form_residual",
    "satisfies_form",
    "minor",
    "corner_minor_rows_cols",
    "spin_minor_rows_cols",
    "member",
    "membership_bound",
    "quantum_value",
    "matrix_to_json",
]

KINDS = ("C", "B", "D")


@dataclass(frozen=True)
class PetersonMatrix:
    """A matrix-model element: kind tag, rank, and exact entries."""

    kind: str
    n: int
    mat: tuple  # tuple of tuples

    @property
    def size(self) -> int:
        return len(self.mat)

    def entry(self, i: int, j: int):
        return self.mat[i][j]


def _band_matrix(size: int, bands: list) -> tuple:
    """Upper unitriangular Toeplitz matrix: entry (i, j) is bands[j-i]."""
    ext = [1] + list(bands) + [0] * size
    return tuple(tuple(ext[j - i] if j >= i else 0 for j in range(size)) for i in range(size))


def build_u(kind: str, coords) -> PetersonMatrix:
    """Banded Toeplitz model element of kind C (size 2n from n coordinates)
    or kind B (size 2n+1 from n+1 coordinates)."""
    coords = tuple(coords)
    k = len(coords)
    if kind == "C":
        n, size = k, 2 * k
    elif kind == "B":
        if k < 2:
            raise ValueError("kind B needs at least 2 coordinates")
        n, size = k - 1, 2 * k - 1
    else:
        raise ValueError("build_u handles kinds C and B")
    E = sf.elem_values(coords, k)
    return PetersonMatrix(kind, n, _band_matrix(size, E[1:]))


def _v_matrix(n: int, X: list, Y: dict) -> tuple:
    """The (2n+2) x (2n+2) block matrix from generators X_1..X_n, Y_n..Y_2n.

    X[0] must be 1.  Works over any exact coefficient ring (symbolic or not).
    """

    def xp(k):
        # the mixed generator: X_k below n, Y_k from n on
        return X[k] if k <= n - 1 else Y[k]

    if n % 2 == 1:
        w_corner = X[n] - 2 * Y[n]
        z_corner = -X[n]
    else:
        w_corner = X[n]
        z_corner = 2 * Y[n] - X[n]

    size = n + 1
    A = [[X[j - i] if 0 <= j - i <= n else 0 for j in range(size)] for i in range(size)]

    B = [[0] * size for _ in range(size)]
    B[0][0] = 2 * Y[n] - X[n]
    for i in range(1, n):
        B[i][0] = X[n - i]
    for i in range(n):
        for j in range(1, size):
            val = 2 * xp(n + j - i)
            B[i][j] = val if j % 2 == 0 else -val
    for j in range(1, n):
        B[n][j] = X[j] if j % 2 == 0 else -X[j]
    B[n][n] = w_corner

    C = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            d = j - i
            if d <= n - 1:
                C[i][j] = X[d] if d % 2 == 0 else -X[d]
    C[0][n] = z_corner

    rows = []
    for i in range(size):
        rows.append(tuple(A[i]) + tuple(B[i]))
    for i in range(size):
        rows.append((0,) * size + tuple(C[i]))
    return tuple(rows)


def build_v(coords) -> PetersonMatrix:
    """Kind D model element of size 2n+2 from n coordinates: the generators
    are X_i = E_i(coords) for i < n, Y_n = E_n(coords), and the remaining
    generators zero."""
    coords = tuple(coords)
    n = len(coords)
    if n < 2:
        raise ValueError("kind D needs at least 2 coordinates")
    E = sf.elem_values(coords, n)
    X = [1] + [E[i] for i in range(1, n)] + [0]
    Y = {n: E[n], **{k: 0 for k in range(n + 1, 2 * n + 1)}}
    return PetersonMatrix("D", n, _v_matrix(n, X, Y))


def v_symbolic(n: int):
    """Fully symbolic kind-D matrix with live generators.

    Returns (matrix rows, x variables X_1..X_n, y variables Y_n..Y_2n) over
    a polynomial ring in 2n+1 variables.
    """
    nv = 2 * n + 1
    xs = [sf.SparsePoly.variable(i, nv) for i in range(n)]  # X_1..X_n
    ys = [sf.SparsePoly.variable(n + j, nv) for j in range(n + 1)]  # Y_n..Y_2n
    X = [sf.SparsePoly.const(1, nv)] + xs
    Y = {n + j: ys[j] for j in range(n + 1)}
    return _v_matrix(n, X, Y), xs, ys


def bilinear_form(kind: str, n: int) -> tuple:
    """The defining bilinear form as an integer matrix."""
    if kind == "C":
        size = 2 * n
        return tuple(
            tuple((1 if i % 2 == 0 else -1) if i + j == size - 1 else 0 for j in range(size))
            for i in range(size)
        )
    if kind == "B":
        size = 2 * n + 1
        return tuple(
            tuple((1 if i % 2 == 0 else -1) if i + j == size - 1 else 0 for j in range(size))
            for i in range(size)
        )
    if kind == "D":
        size = 2 * n + 2
        return tuple(
            tuple(1 if i + j == size - 1 else 0 for j in range(size)) for i in range(size)
        )
    raise ValueError(f"unknown kind {kind!r}")


def _mat_mul(a, b):
    size = len(a)
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            acc = 0
            for k in range(size):
                x, y = a[i][k], b[k][j]
                if x and y:
                    acc = acc + x * y
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _transpose(a):
    return tuple(tuple(row[i] for row in a) for i in range(len(a)))


def form_residual(u: PetersonMatrix):
    """u^T J u - J; identically zero exactly when u preserves the form."""
    J = bilinear_form(u.kind, u.n)
    prod = _mat_mul(_mat_mul(_transpose(u.mat), J), u.mat)
    return tuple(
        tuple(prod[i][j] - J[i][j] for j in range(len(J))) for i in range(len(J))
    )


def satisfies_form(u: PetersonMatrix) -> bool:
    return not any(any(c for c in row) for row in form_residual(u))


def minor(u: PetersonMatrix, rows, cols):
    """Exact determinant of the selected submatrix."""
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols):
        raise ValueError("minor needs equally many rows and columns")
    sub = [[u.mat[i][j] for j in cols] for i in rows]
    return sf._det_generic(sub)


def corner_minor_rows_cols(size: int, r: int):
    """Upper-right r x r corner index sets."""
    return tuple(range(r)), tuple(range(size - r, size))


def spin_minor_rows_cols(n: int):
    """Row/column sets of the spin-weight minor of the kind-D matrix."""
    if n % 2 == 1:
        rows = tuple(range(n)) + (n + 1,)
    else:
        rows = tuple(range(n + 1))
    cols = (n,) + tuple(range(n + 2, 2 * n + 2))
    return rows, cols


def membership_bound(coords) -> int:
    """Number of vanishing conditions: one per index below the coordinate count."""
    return len(tuple(coords)) - 1


def member(kind: str, coords) -> bool:
    """Variety membership: E_i of the squared coordinates vanishes for every
    i = 1 .. len(coords)-1.  Equivalent to coords being a scalar multiple of
    an exclusive root tuple."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    coords = tuple(coords)
    squares = tuple(c * c for c in coords)
    E = sf.elem_values(squares, len(coords) - 1)
    return not any(E[i] for i in range(1, len(coords)))


def quantum_value(kind: str, coords):
    """Value of the quantum variable at a model point.

    Kind C: the doubled-top-row class value, one quarter of E_n of the
    squared coordinates.  Kind B: twice the top elementary value.
    """
    coords = tuple(coords)
    if not member(kind, coords):
        raise ValueError("quantum_value requires a variety member")
    if kind == "C":
        n = len(coords)
        return sf.ptilde((n, n), coords)
    if kind == "B":
        return 2 * sf.elem(len(coords), coords)
    raise ValueError("quantum_value handles kinds C and B")


def matrix_to_json(u: PetersonMatrix, conductor: int = 1) -> dict:
    """JSON structure with every entry as power-basis rational coordinate strings."""

    def coords_of(entry):
        if isinstance(entry, CycloNum):
            return [str(c) for c in entry.coordinates()]
        return [str(Fraction(entry))]

    return {
        "kind": u.kind,
        "n": u.n,
        "conductor": conductor,
        "entries": [[coords_of(e) for e in row] for row in u.mat],
    }
