"""Command-line interface: ``python3 -m threej_zeros <command> ...``.

Exit codes: 0 success, 2 invalid arguments, 3 domain error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .errors import DomainError
from .exact import HalfInt, SqrtRational

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class UsageError(Exception):
    pass


def _half(text: str) -> HalfInt:
    try:
        return HalfInt.of(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not an integer or half-integer: {text!r}") from exc


def _ints(text: str, n: int | None = None) -> list[int]:
    try:
        out = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc
    if n is not None and len(out) != n:
        raise UsageError(f"expected {n} integers, got {len(out)}")
    return out


def _symbol(vals: Sequence[str]):
    from .threej import ThreeJ

    if len(vals) != 6:
        raise UsageError("a symbol needs six values: a b c alpha beta gamma")
    return ThreeJ.of(*(_half(v) for v in vals))


def _fmt_value(v: SqrtRational) -> str:
    if v.is_zero():
        return "0  (0.0)"
    sign = "-" if v.sign < 0 else "+"
    return f"{sign}sqrt({v.radicand})  ({float(v):.15g})"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_eval(ns) -> None:
    from .threej import racah_value

    s = _symbol(ns.symbol)
    print(f"{s} = {_fmt_value(racah_value(s))}")


def cmd_regge(ns) -> None:
    from .threej import to_regge

    print(to_regge(_symbol(ns.symbol)))


def cmd_orbit(ns) -> None:
    from .threej import symmetry_orbit, to_regge

    seen = set()
    for sq, ph in symmetry_orbit(to_regge(_symbol(ns.symbol))):
        if sq.entries in seen and not ns.all:
            continue
        seen.add(sq.entries)
        print(f"{'+' if ph > 0 else '-'} {sq}")


def cmd_canonical(ns) -> None:
    from .threej import canonical_form, from_regge, to_regge

    sq, ph = canonical_form(to_regge(_symbol(ns.symbol)))
    print(f"{sq}  phase {ph:+d}  symbol {from_regge(sq)}")


def cmd_classify(ns) -> None:
    from .threej import degree, to_regge
    from .zeros import classify

    s = _symbol(ns.symbol)
    c = classify(s)
    reason = f" ({c.reason})" if c.reason else ""
    print(f"{c.kind}{reason}  degree {degree(to_regge(s))}  order {c.order}")


def cmd_forms(ns) -> None:
    from .hypergeom import classic_forms, eval_3f2_terminating, vdw_forms

    s = _symbol(ns.symbol)
    for f in vdw_forms(s):
        p = f.params
        if not p.terminating or p.has_pole():
            print(f"vdw{f.perm}: {p}  (not evaluated)")
            continue
        try:
            val = _fmt_value(f.assemble())
        except DomainError as exc:
            val = f"({exc})"
        print(f"vdw{f.perm}: {p}  -> {val}")
    for name, p in classic_forms(s).items():
        if not p.terminating or p.has_pole():
            print(f"{name}: {p}  (not evaluated)")
        else:
            print(f"{name}: {p}  3F2 = {eval_3f2_terminating(p)}")


def cmd_census(ns) -> None:
    from .census import BOWICK_FIGURE, FORMATTERS, CensusConfig, bowick_counts, run_census, verify_bryant_jahn

    if ns.jobs < 1:
        raise UsageError("--jobs must be positive")
    cfg = CensusConfig(
        j_max=_half(ns.max_j),
        include_half_integer=ns.half_integers,
        degree_filter=tuple(_ints(ns.degree, 2)) if ns.degree else None,
        order_filter=tuple(_ints(ns.order, 2)) if ns.order else None,
        jobs=ns.jobs,
        output_format=ns.format,
        output_path=ns.out,
    )
    rep = run_census(cfg)
    if ns.out is None:
        sys.stdout.write(FORMATTERS[ns.format](rep))
    # keep stdout parseable when records go there in jsonl/csv
    summary = sys.stdout if (ns.format == "table" or ns.out) else sys.stderr
    if ns.out is not None or ns.format != "table":
        print(f"scanned {rep.total}; " + ", ".join(f"{k} {v}" for k, v in rep.counts.items()), file=summary)
    allz, reduced = bowick_counts(rep)
    print(
        f"canonical polynomial zeros: {allz}; with every entry >= 1: {reduced}; "
        f"reference figure {BOWICK_FIGURE}; Bryant-Jahn {'ok' if verify_bryant_jahn(rep) else 'VIOLATED'}",
        file=summary,
    )


def cmd_pell(ns) -> None:
    from .pell import negative_pell, pell_like, pell_solutions

    if ns.negative:
        sol = negative_pell(ns.d)
        print("no solution" if sol is None else f"{sol.x} {sol.y}")
        return
    if ns.n == 1:
        for sol in pell_solutions(ns.d, ns.count):
            print(f"{sol.x} {sol.y}")
        return
    for sol in pell_like(ns.d, ns.n):
        print(f"{sol.x} {sol.y}")


def cmd_weight1(ns) -> None:
    from .threej import from_regge
    from .zeros import Weight1Params, weight1_from_params

    p = Weight1Params(*_ints(ns.params, 4))
    r = weight1_from_params(p)
    print(f"x,y,u,v = {p.xyuv()}")
    print(r)
    print(from_regge(r))


def cmd_weight2(ns) -> None:
    from .zeros import Weight2Instance, weight2_search

    w = Weight2Instance(ns.u1, ns.u2)
    x1, x2 = _ints(ns.box, 2)
    print(f"D = {w.D}, N = {w.N}")
    from .zeros import _weight2_points

    for (p1, p2), rec in zip(_weight2_points(w, x1, x2), weight2_search(w, x1, x2)):
        print(f"x1={p1} x2={p2}  {rec.symbol}  canonical {rec.square}  order {rec.order}")


def cmd_labarthe(ns) -> None:
    from .labarthe import decompose, labarthe_value

    s = _symbol(ns.symbol)
    for d in decompose(s):
        print(f"n = {tuple(d)}  term {d.term()}")
    print(f"value = {_fmt_value(labarthe_value(s))}")


def cmd_hydrogenic(ns) -> None:
    from .hydrogenic import HydrogenicState, r_k_expectation

    v = r_k_expectation(HydrogenicState(ns.n, ns.l), ns.k, allow_negative=ns.k < 0)
    print(f"<r^{ns.k}>(n={ns.n}, l={ns.l}) = {v}  ({float(v):.15g})")


def cmd_partitions(ns) -> None:
    from .labarthe import hardy_ramanujan_estimate, partition_count

    p = partition_count(ns.n)
    line = f"p({ns.n}) = {p}"
    if ns.n >= 1:
        est = hardy_ramanujan_estimate(ns.n)
        line += f"  Hardy-Ramanujan {est:.6g} (relative error {abs(est - p) / p:.3%})"
    print(line)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="threej-zeros", description="Exact 3j symbols and their zeros.")
    sub = ap.add_subparsers(dest="command", required=True)

    def symbol_cmd(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("symbol", nargs=6, metavar="J_OR_M", help="a b c alpha beta gamma (e.g. 7/2 or 3.5)")
        p.set_defaults(fn=fn)
        return p

    symbol_cmd("eval", cmd_eval, "exact value")
    symbol_cmd("regge", cmd_regge, "Regge square")
    symbol_cmd("orbit", cmd_orbit, "the 72 symmetry images").add_argument(
        "--all", action="store_true", help="keep repeated squares"
    )
    symbol_cmd("canonical", cmd_canonical, "canonical square")
    symbol_cmd("classify", cmd_classify, "zero classification")
    symbol_cmd("forms", cmd_forms, "3F2 parameter sets")
    symbol_cmd("labarthe", cmd_labarthe, "L-pattern decompositions")

    p = sub.add_parser("census", help="exhaustive zero census")
    p.add_argument("--max-j", required=True)
    p.add_argument("--half-integers", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("jsonl", "csv", "table"), default="jsonl")
    p.add_argument("--out")
    p.add_argument("--degree", help="inclusive range lo,hi")
    p.add_argument("--order", help="inclusive range lo,hi")
    p.set_defaults(fn=cmd_census)

    p = sub.add_parser("pell", help="Pell and Pell-like equations")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--negative", action="store_true")
    p.add_argument("--count", type=int, default=5)
    p.set_defaults(fn=cmd_pell)

    p = sub.add_parser("weight1", help="weight-1 zero from (alpha, beta, gamma, delta)")
    p.add_argument("--params", required=True)
    p.set_defaults(fn=cmd_weight1)

    p = sub.add_parser("weight2", help="weight-2 zeros in a box")
    p.add_argument("--u1", type=int, required=True)
    p.add_argument("--u2", type=int, required=True)
    p.add_argument("--box", required=True, help="x1_max,x2_max")
    p.set_defaults(fn=cmd_weight2)

    p = sub.add_parser("hydrogenic", help="<r^k> for a hydrogenic state")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_hydrogenic)

    p = sub.add_parser("partitions", help="partition numbers")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_partitions)
    return ap


SYMBOL_COMMANDS = ("eval", "regge", "orbit", "canonical", "classify", "forms", "labarthe")


def _protect_negatives(argv: list[str]) -> list[str]:
    """Put symbol values after ``--`` so that projections like -1 are not read as options."""
    if not argv or argv[0] not in SYMBOL_COMMANDS or "--" in argv:
        return argv
    opts = [a for a in argv[1:] if a in ("-h", "--help", "--all")]
    vals = [a for a in argv[1:] if a not in opts]
    return [argv[0], *opts, "--", *vals]


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        ns = ap.parse_args(_protect_negatives(args))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        ns.fn(ns)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
