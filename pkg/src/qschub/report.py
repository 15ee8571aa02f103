"""Report rendering: delimited outputs with matplotlib figures alongside.

Every report writes machine-readable CSV/JSON next to a PNG figure so the
numbers can be consumed without re-deriving them from the picture.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from . import partitions as pt
from . import positivity as pos
from . import qhring as qr
from . import tuples as tu
from . import __version__


def _labels(parts_list) -> list[str]:
    return [pt.format_partition(p) or "()" for p in parts_list]


def render_table_report(ring: str, n: int, provenance: str, out: Path) -> list[str]:
    """Structure-constant table as CSV/JSON plus a heatmap of the total
    coefficient mass of every product."""
    out.mkdir(parents=True, exist_ok=True)
    table = qr.full_table(ring, n, provenance)
    stem = f"table-{ring}{n}-{provenance}"
    csv_path = out / f"{stem}.csv"
    csv_path.write_text(qr.table_to_csv(table))
    json_path = out / f"{stem}.json"
    json_path.write_text(qr.table_to_json(table, __version__))

    basis = pt.strict_partitions(n)
    mass = [
        [sum(table.entries[(lam, mu)].values()) for mu in basis] for lam in basis
    ]
    qdeg = [
        [max((k for (_, k) in table.entries[(lam, mu)]), default=0) for mu in basis]
        for lam in basis
    ]
    fig, axes = plt.subplots(1, 2, figsize=(11, 5))
    for ax, data, title in (
        (axes[0], mass, "total structure-constant mass"),
        (axes[1], qdeg, "highest q-power"),
    ):
        im = ax.imshow(data, cmap="viridis")
        ax.set_xticks(range(len(basis)), _labels(basis), rotation=90, fontsize=7)
        ax.set_yticks(range(len(basis)), _labels(basis), fontsize=7)
        ax.set_title(f"{ring}({n}): {title}", fontsize=10)
        fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    png_path = out / f"{stem}.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [str(csv_path), str(json_path), str(png_path)]


def render_positivity_report(n: int, out: Path, kind: str = "C") -> list[str]:
    """Sign table of basis values over self-symmetric tuples, and the minor
    statistics of the corresponding matrix-model elements at t = 1."""
    from fractions import Fraction

    from . import peterson as pm

    out.mkdir(parents=True, exist_ok=True)
    rank = n if kind == "C" else n + 1
    tuples_ss = tu.self_symmetric_tuples(rank)
    basis = pt.strict_partitions(rank if kind == "B" else n)

    rows = []
    sign_grid = []
    for I in tuples_ss:
        rep = pos.schubert_signs(kind, I, index_rank=rank if kind == "B" else None)
        sign_grid.append([rep.signs[lam] for lam in basis])
        coords = tuple(r * Fraction(1) for r in tu.roots_of(I))
        ok, stats = pos.totally_nonneg(pm.build_u(kind, coords))
        rows.append((I, rep, ok, stats))

    stem = f"positivity-{kind.lower()}{n}"
    csv_lines = ["tuple_doubled_exps,partition,sign"]
    for I, rep, _, _ in rows:
        for lam, s in rep.signs.items():
            csv_lines.append(f'"{" ".join(map(str, I))}","{pt.format_partition(lam) or "()"}",{s}')
    csv_path = out / f"{stem}-signs.csv"
    csv_path.write_text("\n".join(csv_lines) + "\n")

    minor_lines = ["tuple_doubled_exps,totally_nonnegative,positive,zero,negative,witness_rows,witness_cols"]
    for I, _, ok, stats in rows:
        wit = stats.negative_witnesses[0] if stats.negative_witnesses else ((), ())
        minor_lines.append(
            f'"{" ".join(map(str, I))}",{int(ok)},{stats.positive},{stats.zero},{stats.negative},'
            f'"{" ".join(map(str, wit[0]))}","{" ".join(map(str, wit[1]))}"'
        )
    minors_path = out / f"{stem}-minors.csv"
    minors_path.write_text("\n".join(minor_lines) + "\n")

    fig, ax = plt.subplots(figsize=(1.2 + 0.45 * len(basis), 1.2 + 0.5 * len(tuples_ss)))
    im = ax.imshow(sign_grid, cmap="RdBu", vmin=-1, vmax=1)
    ax.set_xticks(range(len(basis)), _labels(basis), rotation=90, fontsize=7)
    ax.set_yticks(
        range(len(tuples_ss)), [" ".join(map(str, I)) for I in tuples_ss], fontsize=7
    )
    ax.set_title(f"basis-value signs, kind {kind}, rank {n}", fontsize=10)
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    png_path = out / f"{stem}-signs.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [str(csv_path), str(minors_path), str(png_path)]


def render_dominance_report(n: int, out: Path) -> list[str]:
    """Gap between the squared base-tuple value and the squared modulus at
    every exclusive tuple, for every strict partition."""
    from fractions import Fraction

    from . import exactnum as ex
    from . import symfunc as sf

    out.mkdir(parents=True, exist_ok=True)
    D = pt.strict_partitions(n)
    I_n = tu.exclusive_tuples(n)
    base = tu.roots_of(tu.base_tuple(n))

    def abs_sq(v):
        if isinstance(v, ex.CycloNum):
            r = ex.as_rational(v * ex.conj(v))
        else:
            r = Fraction(v) ** 2
        return r

    grid = []
    csv_lines = ["partition,tuple_doubled_exps,base_sq,value_sq,gap"]
    for lam in D:
        v0 = abs_sq(sf.ptilde(lam, base))
        row = []
        for I in I_n:
            v = abs_sq(sf.ptilde(lam, tu.roots_of(I)))
            gap = v0 - v
            row.append(float(gap))
            csv_lines.append(
                f'"{pt.format_partition(lam) or "()"}","{" ".join(map(str, I))}",{v0},{v},{gap}'
            )
        grid.append(row)

    stem = f"dominance-{n}"
    csv_path = out / f"{stem}.csv"
    csv_path.write_text("\n".join(csv_lines) + "\n")

    fig, ax = plt.subplots(figsize=(1.5 + 0.4 * len(I_n), 1.5 + 0.35 * len(D)))
    im = ax.imshow(grid, cmap="viridis")
    ax.set_xticks(range(len(I_n)), [" ".join(map(str, I)) for I in I_n], rotation=90, fontsize=6)
    ax.set_yticks(range(len(D)), _labels(D), fontsize=7)
    ax.set_title(f"dominance gap, rank {n} (all entries must be >= 0)", fontsize=10)
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    png_path = out / f"{stem}.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [str(csv_path), str(png_path)]
