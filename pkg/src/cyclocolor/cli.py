"""Command-line front end: ``cyclocolor {analyze,table,search,magnetic,render}``.

Exit codes: 0 success, 1 ``table --check`` mismatch, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from .colorsym import analyze
from .cyclo import CLASS_NUMBER_ONE, ModulusError, context, format_polynomial, parse_generator
from .idealsearch import enumerate_ideals
from .magnetic import BLACK_AND_WHITE, UNPRIMED_CHOICES, classify, format_symbol
from .render import ProjectionSetup, cut_and_project, emit_svg
from .colorsym import build_model
from .tables import REFERENCE_TABLES, TableRow

log = logging.getLogger("cyclocolor")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ctx(n: int):
    try:
        return context(n)
    except ModulusError as exc:
        raise UsageError(str(exc)) from None


def _gen(text: str, ctx, where: str = ""):
    try:
        return parse_generator(text, ctx)
    except ValueError as exc:
        raise UsageError(f"{where}{exc}") from None


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


# ------------------------------------------------------------------ analyze

def cmd_analyze(args) -> int:
    ctx = _ctx(args.n)
    alpha = _gen(args.ideal, ctx)
    if not alpha:
        raise UsageError("the generator reduces to 0")
    report = analyze(ctx, alpha)
    _emit(args, report.to_dict(), str(report))
    return EXIT_OK


# ------------------------------------------------------------------ table

def _row_for(job) -> tuple:
    n, gen_text = job
    ctx = context(n)
    rep = analyze(ctx, parse_generator(gen_text, ctx))
    return rep.to_dict(), TableRow(n, rep.ell, rep.H_descriptor, rep.K_descriptor, gen_text)


def _format_table(rows: Sequence[TableRow]) -> str:
    header = ("n", "ell", "H", "K", "I")
    cells = [header] + [r.cells() for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
    return "\n".join(
        "  ".join(c[i].ljust(widths[i]) for i in range(len(header))).rstrip() for c in cells
    )


def _read_generators(path: str) -> list[str]:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return [ln.split("#", 1)[0].strip() for ln in lines if ln.split("#", 1)[0].strip()]


def cmd_table(args) -> int:
    ctx = _ctx(args.n)
    reference = None
    if args.generators:
        gens = _read_generators(args.generators)
    else:
        if ctx.n not in REFERENCE_TABLES:
            raise UsageError(
                f"no built-in table for n={ctx.n}; pass --generators FILE (built-in: 15, 16)"
            )
        reference = REFERENCE_TABLES[ctx.n]
        gens = [r.generator_text for r in reference]
    for i, g in enumerate(gens, 1):
        _gen(g, ctx, where=f"row {i} ({g!r}): ")
    jobs = [(ctx.n, g) for g in gens]
    if args.threads > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            results = list(pool.map(_row_for, jobs))
    else:
        results = [_row_for(j) for j in jobs]
    rows = [r for _, r in results]
    status = EXIT_OK
    mismatches = []
    if args.check:
        if reference is None:
            raise UsageError("--check compares against a built-in table; drop --generators")
        for got, want in zip(rows, reference):
            if got != want:
                mismatches.append((got, want))
        status = EXIT_MISMATCH if mismatches else EXIT_OK
    payload = [d for d, _ in results]
    text = _format_table(rows)
    if args.check:
        text += f"\ncheck: {len(rows) - len(mismatches)}/{len(rows)} rows match"
        for got, want in mismatches:
            text += f"\nMISMATCH ell={want.ell} <{want.generator_text}>: got {got.cells()}, expected {want.cells()}"
    if args.json:
        if args.check:
            payload = {"rows": payload, "check": {"rows": len(rows), "mismatches": len(mismatches)}}
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)
    return status


# ------------------------------------------------------------------ search

def cmd_search(args) -> int:
    ctx = _ctx(args.n)
    entries = enumerate_ideals(ctx, args.max_norm, args.coeff_bound, threads=args.threads)
    reports = [analyze(ctx, e.sample_generator) for e in entries]
    payload = [r.to_dict() for r in reports]
    text = "\n".join(
        f"{r.ell}  {format_polynomial(r.model.generator.coeffs)}  {r.H_descriptor}  {r.K_descriptor}"
        for r in reports
    )
    _emit(args, payload, text if reports else "(no ideals found)")
    return EXIT_OK


# ------------------------------------------------------------------ magnetic

def cmd_magnetic(args) -> int:
    ctx = _ctx(args.n)
    c = classify(ctx)
    symbol = c.symbol
    if args.unprimed:
        if c.verdict != BLACK_AND_WHITE:
            raise UsageError(f"M_{ctx.n} is grey; --unprimed applies to black-and-white groups")
        try:
            symbol = format_symbol(ctx.N, BLACK_AND_WHITE, args.unprimed)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    witness = str(c.witness) if c.witness is not None else None
    payload = {
        "n": ctx.n,
        "N": ctx.N,
        "verdict": c.verdict,
        "witness": witness,
        "min_norm_above_2": c.min_norm_above_2,
        "symbol": symbol,
    }
    parts = [c.verdict]
    if witness:
        parts.append(f"witness {witness}")
    if symbol:
        parts.append(f"symbol {symbol}")
    _emit(args, payload, ", ".join(parts))
    return EXIT_OK


# ------------------------------------------------------------------ render

def cmd_render(args) -> int:
    ctx = _ctx(args.n)
    alpha = _gen(args.ideal, ctx)
    if not alpha:
        raise UsageError("the generator reduces to 0")
    try:
        setup = ProjectionSetup(ctx, args.window, args.radius)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    patch = cut_and_project(setup, build_model(ctx, alpha))
    try:
        emit_svg(patch, args.out)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from None
    payload = {
        "n": ctx.n,
        "generator": format_polynomial(alpha.coeffs),
        "ell": patch.ell,
        "points": len(patch),
        "colors_used": len(patch.colors()),
        "out": str(args.out),
    }
    _emit(args, payload, f"wrote {len(patch)} points in {len(patch.colors())} colors to {args.out}")
    return EXIT_OK


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclocolor",
        description="Color symmetry of Bravais colorings of cyclotomic modules Z[xi_n].",
        epilog="n must be one of " + ", ".join(map(str, CLASS_NUMBER_ONE)),
    )
    parser.add_argument("--json", action="store_true", default=False, help="machine-readable output")
    parser.add_argument("--threads", type=int, default=1, help="worker processes for table/search")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="H and K for one ideal")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ideal", required=True, help='generator, e.g. "1-x+x^3" or "1,-1,0,1"')
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("table", parents=[common], help="reproduce the n=15 / n=16 tables")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--generators", help="file with one generator per line")
    p.add_argument("--check", action="store_true", help="compare with the built-in reference rows")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("search", parents=[common], help="principal ideals by norm (box search)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-norm", type=int, required=True)
    p.add_argument("--coeff-bound", type=int, default=2)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("magnetic", parents=[common], help="grey vs black-and-white classification")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--unprimed", choices=[c for c in UNPRIMED_CHOICES if c != "full"],
                   help="unprimed index-2 subgroup for a black-and-white symbol")
    p.set_defaults(func=cmd_magnetic)

    p = sub.add_parser("render", parents=[common], help="SVG of a colored cut-and-project patch")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ideal", required=True)
    p.add_argument("--window", type=float, default=1.0)
    p.add_argument("--radius", type=float, default=8.0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
