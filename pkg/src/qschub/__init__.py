"""Exact quantum Schubert calculus for Lagrangian and maximal orthogonal
Grassmannians: 3-point genus-zero Gromov-Witten invariants, quantum
multiplication tables, and the associated orthogonality, matrix-model, and
total-positivity checks, all in exact cyclotomic arithmetic.
"""

__version__ = "0.1.0"

from . import exactnum, partitions, tuples, symfunc, viformula, qhring, peterson, positivity

__all__ = [
    "exactnum",
    "partitions",
    "tuples",
    "symfunc",
    "viformula",
    "qhring",
    "peterson",
    "positivity",
    "__version__",
]
