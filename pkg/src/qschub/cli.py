"""Command-line surface: invariants, tables, verification suites, reports,
and the on-disk table cache.

Exit codes: 0 success, 1 failed verification checks, 2 argument/validation
errors, 3 engine disagreement in ``table --provenance all``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from . import partitions as pt
from . import qhring as qr
from . import verify as vf
from . import viformula as vi

RING_BOUNDS = {"og": 5, "lg": 4}
PROVENANCE_ALIASES = {
    "vi": "vi_formula",
    "ortho": "ortho_extraction",
    "ideal": "ideal_reduction",
    "vi_formula": "vi_formula",
    "ortho_extraction": "ortho_extraction",
    "ideal_reduction": "ideal_reduction",
}


def cache_dir(override: str | None = None) -> Path:
    if override:
        return Path(override)
    env = os.environ.get("QSCHUB_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "qschub"


def _fail(msg: str, code: int = 2) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def _check_rank(ring: str, n: int, allow_large: bool) -> str | None:
    if n < 1:
        return "rank must be at least 1"
    bound = RING_BOUNDS[ring]
    if n > bound and not allow_large:
        return (
            f"rank {n} exceeds the default bound {bound} for ring {ring} "
            f"(the summation work grows like (n+1)! per point; pass --allow-large to force)"
        )
    if n > bound:
        print(
            f"warning: rank {n} beyond the desk-scale bound {bound}; expect long runtimes",
            file=sys.stderr,
        )
    return None


# ---------------------------------------------------------------------------
# gw


def cmd_gw(args) -> int:
    ring = args.ring
    err = _check_rank(ring, args.n, args.allow_large)
    if err:
        return _fail(err)
    try:
        lam = pt.parse_partition(args.lam)
        mu = pt.parse_partition(args.mu)
        nu = pt.parse_partition(args.nu)
        for p in (lam, mu, nu):
            pt.check_strict_in(p, args.n)
    except ValueError as e:
        return _fail(str(e))
    degree = args.degree
    if degree < 0:
        return _fail("degree must be nonnegative")
    period = 2 * args.n if ring == "og" else args.n + 1
    condition = pt.weight(lam) + pt.weight(mu) == pt.weight(nu) + period * degree
    engine = vi.gw_og if ring == "og" else vi.gw_lg
    value = engine(args.n, lam, mu, nu, degree)
    if args.format == "json":
        record = {
            "schema_version": qr.SCHEMA_VERSION,
            "library_version": __version__,
            "ring": ring,
            "n": args.n,
            "lambda": args.lam,
            "mu": args.mu,
            "nu": args.nu,
            "degree": degree,
            "degree_condition_ok": condition,
            "provenance": "vi_formula",
            "value": value,
        }
        print(json.dumps(record, sort_keys=True))
    else:
        print(value)
    return 0


# ---------------------------------------------------------------------------
# table


def _build_table(ring: str, n: int, provenance: str, jobs: int) -> qr.MultTable:
    if jobs <= 1:
        return qr.full_table(ring, n, provenance)
    import multiprocessing as mp

    basis = pt.strict_partitions(n)
    tasks = [(ring, n, lam, provenance) for lam in basis]
    ctx = mp.get_context("fork")
    with ctx.Pool(processes=jobs) as pool:
        rows = pool.map(_table_row, tasks)
    entries = {}
    for lam, row in sorted(rows):
        for mu, consts in row.items():
            entries[(lam, mu)] = consts
    return qr.MultTable(ring, n, provenance, entries)


def _table_row(task):
    ring, n, lam, provenance = task
    row = {}
    for mu in pt.strict_partitions(n):
        row[mu] = qr.structure_constants(ring, n, lam, mu, provenance)
    return lam, row


def cmd_table(args) -> int:
    ring = args.ring
    err = _check_rank(ring, args.n, args.allow_large)
    if err:
        return _fail(err)
    if args.provenance == "all":
        tables = {}
        for prov in qr.PROVENANCES:
            tables[prov] = _build_table(ring, args.n, prov, args.jobs)
        ref = tables["vi_formula"]
        for prov in ("ortho_extraction", "ideal_reduction"):
            if tables[prov] != ref:
                diff = ref.first_difference(tables[prov])
                print(
                    f"error: engine disagreement between vi_formula and {prov} at "
                    f"lambda={pt.format_partition(diff[0])!r} mu={pt.format_partition(diff[1])!r} "
                    f"nu={pt.format_partition(diff[2])!r} q^{diff[3]}",
                    file=sys.stderr,
                )
                return 3
        table = ref
        prov_label = "all"
    else:
        prov = PROVENANCE_ALIASES.get(args.provenance)
        if prov is None:
            return _fail(f"unknown provenance {args.provenance!r}")
        table = None
        prov_label = prov

    cdir = cache_dir(args.cache_dir)
    key = f"table-{ring}{args.n}-{prov_label}-s{qr.SCHEMA_VERSION}-v{__version__}.json"
    path = cdir / key
    text = None
    if path.exists() and not args.no_cache:
        cached = path.read_text()
        if qr.table_checksum_ok(cached):
            text = cached
    if text is None:
        if table is None:
            table = _build_table(ring, args.n, prov_label, args.jobs)
        text = qr.table_to_json(table, __version__)
        if not args.no_cache:
            cdir.mkdir(parents=True, exist_ok=True)
            path.write_text(text)

    if args.format == "json":
        sys.stdout.write(text)
    elif args.format == "csv":
        sys.stdout.write(qr.table_to_csv(qr.table_from_json(text)))
    else:
        tbl = qr.table_from_json(text)
        for (lam, mu) in sorted(tbl.entries, key=lambda p: (qr._part_key(p[0]), qr._part_key(p[1]))):
            cls = qr.QHClass.from_dict(tbl.ring, tbl.n, tbl.entries[(lam, mu)])
            lhs = f"[{pt.format_partition(lam)}] * [{pt.format_partition(mu)}]"
            print(f"{lhs:24s} = {cls}")
    return 0


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    name = args.suite
    if name not in vf.SUITES:
        return _fail(f"unknown suite {name!r}; available: {', '.join(sorted(vf.SUITES))}")
    n = args.n if args.n is not None else vf.DEFAULT_RANK[name]
    cap = vf.RANK_CAP[name]
    if n > cap and not args.allow_large:
        return _fail(f"suite {name} capped at rank {cap} (pass --allow-large to force)")
    result = vf.run_suite(name, n)
    if args.format == "json":
        print(json.dumps(result.to_json(), sort_keys=True))
    else:
        for c in result.checks:
            mark = "ok " if c.ok else "FAIL"
            detail = f"  ({c.detail})" if c.detail else ""
            print(f"[{mark}] {result.suite} n={result.n}: {c.name}{detail}")
        print(f"suite {result.suite} n={result.n}: {'pass' if result.ok else 'FAIL'}")
    if not result.ok and args.format != "json":
        for c in result.checks:
            if not c.ok:
                print(json.dumps({"suite": result.suite, "n": result.n, **c.to_json()}))
    return 0 if result.ok else 1


# ---------------------------------------------------------------------------
# report / cache


def cmd_report(args) -> int:
    from . import report

    out = Path(args.out)
    try:
        if args.target == "table":
            err = _check_rank(args.ring, args.n, args.allow_large)
            if err:
                return _fail(err)
            prov = PROVENANCE_ALIASES.get(args.provenance, None)
            if prov is None:
                return _fail(f"unknown provenance {args.provenance!r}")
            files = report.render_table_report(args.ring, args.n, prov, out)
        elif args.target == "positivity":
            files = report.render_positivity_report(args.n, out, kind=args.kind)
        elif args.target == "dominance":
            files = report.render_dominance_report(args.n, out)
        else:
            return _fail(f"unknown report target {args.target!r}")
    except ValueError as e:
        return _fail(str(e))
    for f in files:
        print(f)
    return 0


def cmd_cache(args) -> int:
    cdir = cache_dir(args.cache_dir)
    if args.action == "info":
        files = sorted(cdir.glob("table-*.json")) if cdir.exists() else []
        print(json.dumps({
            "cache_dir": str(cdir),
            "tables": [f.name for f in files],
            "bytes": sum(f.stat().st_size for f in files),
        }, sort_keys=True))
        return 0
    if args.action == "clear":
        removed = 0
        if cdir.exists():
            for f in cdir.glob("table-*.json"):
                f.unlink()
                removed += 1
        print(f"removed {removed} cached tables from {cdir}")
        return 0
    return _fail(f"unknown cache action {args.action!r}")


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qschub",
        description=(
            "Exact quantum Schubert calculus for Lagrangian (lg) and maximal "
            "orthogonal (og) Grassmannians."
        ),
    )
    p.add_argument("--version", action="version", version=f"qschub {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gw", help="one 3-point genus-zero invariant")
    g.add_argument("ring", choices=("og", "lg"))
    g.add_argument("--n", type=int, required=True, help="rank")
    g.add_argument("--lambda", dest="lam", default="", help='first class, e.g. "3,1"')
    g.add_argument("--mu", default="", help="second class")
    g.add_argument("--nu", default="", help="output class (complement indexes the third insertion)")
    g.add_argument("--k", "--d", "--degree", dest="degree", type=int, default=0, help="q-degree")
    g.add_argument("--format", choices=("pretty", "json"), default="pretty")
    g.add_argument("--allow-large", action="store_true")
    g.set_defaults(func=cmd_gw)

    t = sub.add_parser("table", help="full multiplication table")
    t.add_argument("ring", choices=("og", "lg"))
    t.add_argument("--n", type=int, required=True)
    t.add_argument(
        "--provenance",
        default="vi",
        help="vi | ortho | ideal | all (all compares the three engines)",
    )
    t.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    t.add_argument("--cache-dir", default=None)
    t.add_argument("--no-cache", action="store_true")
    t.add_argument("--jobs", type=int, default=1, help="parallel workers for table rows")
    t.add_argument("--allow-large", action="store_true")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("suite", help=", ".join(sorted(vf.SUITES)))
    v.add_argument("--n", type=int, default=None)
    v.add_argument("--format", choices=("pretty", "json"), default="pretty")
    v.add_argument("--allow-large", action="store_true")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("report", help="render CSV + figure reports")
    r.add_argument("target", choices=("table", "positivity", "dominance"))
    r.add_argument("--ring", choices=("og", "lg"), default="og")
    r.add_argument("--n", type=int, default=3)
    r.add_argument("--provenance", default="vi")
    r.add_argument("--kind", choices=("C", "B"), default="C")
    r.add_argument("--out", default="reports")
    r.add_argument("--allow-large", action="store_true")
    r.set_defaults(func=cmd_report)

    c = sub.add_parser("cache", help="inspect or clear the table cache")
    c.add_argument("action", choices=("info", "clear"))
    c.add_argument("--cache-dir", default=None)
    c.set_defaults(func=cmd_cache)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
