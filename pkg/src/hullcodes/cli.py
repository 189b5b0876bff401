"""Command-line entry point.

Exit codes: 0 success, 1 reproduction mismatch, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .code import DEFAULT_CAP, classify, griesmer, weight_distribution
from .constructions import lcd_bound_combine
from .errors import BudgetExceeded, CodingError
from .field import field_from_order, parse_field
from .io import format_code, read_code_file, render_report, render_rows, report_document
from .recipe import ConstructionRecipe, RecipeError, build_recipe, load_recipe

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2

_H_KEYS = ("lcd_h", "so_h", "sd_h", "fsd_h")
_E_KEYS = ("lcd_e", "so_e", "sd_e", "almost_so_e", "almost_sd_e", "fsd_e")


class InputError(Exception):
    """Bad command-line input; reported with exit code 2."""


def _opt(args, name, default=None):
    return getattr(args, name, default)


def _field(args, default_q: Optional[int] = None):
    spec = _opt(args, "field")
    if spec is not None:
        return parse_field(spec)
    if default_q is not None:
        return field_from_order(default_q)
    return None


def _restrict(doc: dict, flavor: str) -> dict:
    """Blank out the flavor that was not asked for."""
    if flavor == "both":
        return doc
    drop_h = flavor == "euclidean"
    keys = _H_KEYS if drop_h else _E_KEYS
    hull = "hull_h" if drop_h else "hull_e"
    doc[hull] = None
    doc["reasons"][hull] = f"only {flavor} requested"
    for key in keys:
        doc["flags"][key] = None
        doc["reasons"][key] = f"only {flavor} requested"
    doc["reasons"] = dict(sorted(doc["reasons"].items()))
    return doc


def _emit_code_report(C, args, out=None) -> dict:
    out = out or sys.stdout
    cap = _opt(args, "cap", DEFAULT_CAP)
    doc = report_document(classify(C, cap), C.recipe)
    doc = _restrict(doc, _opt(args, "flavor", "both") or "both")
    out.write(render_report(doc, _opt(args, "report") or "json"))
    return doc


def _plot_code(C, args, stem: str) -> None:
    plot_dir = _opt(args, "plot")
    if plot_dir is None:
        return
    from .plotting import plot_weight_distribution

    Path(plot_dir).mkdir(parents=True, exist_ok=True)
    try:
        wd = weight_distribution(C, _opt(args, "cap", DEFAULT_CAP))
    except BudgetExceeded as exc:
        print(f"note: no weight plot, {exc}", file=sys.stderr)
        return
    title = f"[{C.n},{C.k}] code over GF({C.q})"
    plot_weight_distribution(wd, title, Path(plot_dir) / f"{stem}_weights.png")


# -- commands --------------------------------------------------------------------------

def cmd_analyze(args) -> int:
    cf = read_code_file(args.path)
    for w in cf.warnings:
        print(f"warning: {w}", file=sys.stderr)
    _emit_code_report(cf.code, args)
    _plot_code(cf.code, args, Path(args.path).stem)
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.inline is not None:
        try:
            recipe = ConstructionRecipe.from_dict(json.loads(args.inline))
        except json.JSONDecodeError as exc:
            raise InputError(f"inline recipe is not JSON: {exc}") from exc
        base = None
    elif args.recipe is not None:
        recipe = load_recipe(args.recipe)
        base = Path(args.recipe).parent
    else:
        raise InputError("give a recipe file or --inline JSON")
    C = build_recipe(recipe, _field(args), base)
    text = format_code(C)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stderr.write(text)
    _emit_code_report(C, args)
    _plot_code(C, args, "construct")
    return EXIT_OK


def _format_row(row) -> str:
    status = "PASS" if row.ok else "FAIL"
    params = row.observed.get("params")
    shown = "[" + ",".join(map(str, params)) + "]" if params else ""
    line = f"{status} {row.tag:<12} {shown}"
    if row.note:
        line += f"  ({row.note})"
    if not row.ok:
        for key, (exp, got) in row.diff().items():
            line += f"\n     {key}: expected {exp}, observed {got}"
    return line


def cmd_reproduce(args) -> int:
    from .reproduce import TABLES, run_table

    names = list(TABLES) if args.table == "all" else [args.table]
    if any(n not in TABLES for n in names):
        raise InputError(f"unknown table {args.table!r}; choose from all, {', '.join(TABLES)}")
    cap = _opt(args, "cap", DEFAULT_CAP)
    fmt = _opt(args, "report")
    plot_dir = _opt(args, "plot")
    results, records = [], []
    for name in names:
        res = run_table(name, cap)
        results.append(res)
        if fmt is None:
            for row in res.rows:
                print(_format_row(row))
            print(f"table {name}: {res.passed}/{len(res.rows)} rows match")
        for row in res.rows:
            records.append({
                "table": name,
                "tag": row.tag,
                "ok": row.ok,
                "expected": json.dumps(row.expected, sort_keys=True, default=list),
                "observed": json.dumps(row.observed, sort_keys=True, default=list),
                "note": row.note,
            })
        if plot_dir is not None:
            from .plotting import plot_table

            Path(plot_dir).mkdir(parents=True, exist_ok=True)
            plot_table(res, Path(plot_dir) / f"table_{name}.png")
    if fmt is not None:
        sys.stdout.write(render_rows(records, fmt))
    return EXIT_OK if all(r.ok for r in results) else EXIT_MISMATCH


def cmd_search_fsd(args) -> int:
    from .fsd import fsd_search, save_seed

    F = _field(args, args.q)
    if F is None:
        raise InputError("give --q or --field")
    if args.budget == 0:
        print("notice: budget 0, no candidates tried", file=sys.stderr)
        return EXIT_OK
    seeds = fsd_search(F, args.n, args.flavor or "euclidean", args.budget,
                       _opt(args, "seed", 0), _opt(args, "cap", DEFAULT_CAP))
    if not seeds:
        print("notice: no LCD seed found", file=sys.stderr)
        return EXIT_OK
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = []
    for i, s in enumerate(seeds[: args.top]):
        path = out / f"seed_q{F.q}_n{args.n}_{i:03d}.json"
        save_seed(s, path)
        rows.append({"file": str(path), "n": s.code.n, "k": s.code.k,
                     "d": s.certified.get("distance"),
                     **{k: v for k, v in s.certified.items() if k != "distance"}})
    sys.stdout.write(render_rows(rows, _opt(args, "report") or "json"))
    return EXIT_OK


def _int_list(text: Optional[str]):
    if text is None:
        return None
    return [t if t == "inf" else int(t) for t in text.replace(",", " ").split()]


def cmd_grs(args) -> int:
    from .grs import grs_from_parameters

    kind = args.kind.replace("-", "_")
    params: dict = {"construction": kind}
    if kind == "spec":
        if args.points is None or args.k is None:
            raise InputError("spec needs --points and --k")
        pts = _int_list(args.points)
        params.update(points=pts, k=args.k,
                      scalars=_int_list(args.scalars) or [1] * len(pts))
    elif kind == "so_hermitian_extended":
        if _opt(args, "field") is None and args.q is None:
            raise InputError("give the field GF(q^2) by --field or --q")
    else:
        if args.n is None or args.k is None:
            raise InputError(f"{args.kind} needs --n and --k")
        params.update(n=args.n, k=args.k)
    F = _field(args, args.q)
    if F is None:
        raise InputError("give --q or --field")
    params["field"] = F.spec_string()
    C = grs_from_parameters(params, F)
    C.recipe = ConstructionRecipe("grs", (), params)
    if args.out:
        Path(args.out).write_text(format_code(C))
    _emit_code_report(C, args)
    return EXIT_OK


def _triple(text: str) -> tuple[int, int, int]:
    vals = [int(t) for t in text.replace(",", " ").split()]
    if len(vals) != 3:
        raise InputError(f"expected n,k,d but got {text!r}")
    return vals[0], vals[1], vals[2]


def cmd_bounds(args) -> int:
    fmt = _opt(args, "report") or "json"
    if args.which == "griesmer":
        q, k, d = args.values
        row = {"q": q, "k": k, "d": d, "griesmer_n": griesmer(q, k, d)}
    else:
        p1, p2 = _triple(args.first), _triple(args.second)
        n, k, d = lcd_bound_combine(p1, p2)
        row = {"first": list(p1), "second": list(p2), "n": n, "k": k, "d": d}
    sys.stdout.write(render_rows([row], fmt) if fmt == "tsv" else json.dumps(row) + "\n")
    return EXIT_OK


# -- parser ----------------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    p.add_argument("--field", help="field as q or q:c0,c1,... (modulus coefficients)")
    p.add_argument("--cap", type=int, help=f"codeword enumeration budget (default {DEFAULT_CAP})")
    p.add_argument("--report", choices=("json", "tsv"), help="report format")
    p.add_argument("--seed", type=int, help="random seed for searches")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="hullcodes",
        description="Hulls, LCD and self-orthogonal codes over finite fields.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="classify a code file")
    p.add_argument("path")
    p.add_argument("--flavor", choices=("both", "euclidean", "hermitian"), default="both")
    p.add_argument("--plot", metavar="DIR", help="write a weight-distribution figure here")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", parents=[common], help="build a code from a recipe")
    p.add_argument("recipe", nargs="?")
    p.add_argument("--inline", metavar="JSON", help="recipe given as a JSON string")
    p.add_argument("--out", metavar="FILE", help="generator file (default: standard error)")
    p.add_argument("--flavor", choices=("both", "euclidean", "hermitian"), default="both")
    p.add_argument("--plot", metavar="DIR")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("reproduce", parents=[common], help="rebuild a table and compare")
    p.add_argument("table", help="1..6, ex-rm, ex-simplex or all")
    p.add_argument("--plot", metavar="DIR", help="write an expected-vs-observed figure here")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("search-fsd", parents=[common], help="search Toeplitz FSD LCD seeds")
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int, required=True, help="half-length")
    p.add_argument("--flavor", choices=("euclidean", "hermitian"), default="euclidean")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--top", type=int, default=5, help="number of seed files to write")
    p.add_argument("--out", default="seeds", metavar="DIR")
    p.set_defaults(func=cmd_search_fsd)

    p = sub.add_parser("grs", parents=[common], help="build a GRS code")
    p.add_argument("kind", choices=("spec", "so-euclidean", "so-hermitian", "so-hermitian-extended"))
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--points", help="comma-separated points, 'inf' allowed")
    p.add_argument("--scalars", help="comma-separated column scalars (default all 1)")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_grs, flavor="both")

    p = sub.add_parser("bounds", parents=[common], help="parameter arithmetic")
    bsub = p.add_subparsers(dest="which", required=True)
    g = bsub.add_parser("griesmer", parents=[common], help="Griesmer length for q k d")
    g.add_argument("values", type=int, nargs=3, metavar=("Q", "K", "D"))
    c = bsub.add_parser("lcd", parents=[common], help="direct-sum LCD parameters")
    c.add_argument("first", metavar="N,K,D")
    c.add_argument("second", metavar="N,K,D")
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, CodingError, RecipeError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
