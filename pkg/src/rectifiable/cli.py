"""Command-line front end.

Exit status: 0 success, 1 analysis error, 2 parse error, 3 fixture mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from fractions import Fraction
from typing import Optional, Sequence

from .affine import affine_cubic_diff
from .corpus import FIXTURES, run_corpus
from .differentials import KDifferential, stratum_of
from .errors import RectifiableError
from .geometry import Degenerate, arc_length_qdiff, evolute, realize_genus0
from .integration import rectify
from .parser import ParseError, parse_expr, parse_rational
from .pluecker import evolute_counts, pluecker
from .report import (
    AnalysisError,
    analyze,
    frac_str,
    ratfunc_json,
    render_text,
    verdict_json,
)
from .specfile import CurveSpec, load_curve_spec

EXIT_OK, EXIT_ANALYSIS, EXIT_PARSE, EXIT_MISMATCH = 0, 1, 2, 3


def _param(text: str) -> tuple[str, Fraction]:
    name, sep, value = text.partition("=")
    if not sep or not name.strip():
        raise argparse.ArgumentTypeError(f"expected k=v, got {text!r}")
    try:
        return name.strip(), parse_rational(value)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(exc.message) from exc


def _add_globals(p: argparse.ArgumentParser, suffix: str = ""):
    p.add_argument("--json", dest="json" + suffix, action="store_true", default=None,
                   help="emit JSON instead of key/value text")
    p.add_argument("--param", dest="param" + suffix, action="append", type=_param,
                   metavar="K=V", help="bind a parameter (repeatable)")


def _add_curve(p: argparse.ArgumentParser):
    p.add_argument("spec", nargs="?", help="curve-spec file")
    p.add_argument("--x", help="x(t) expression")
    p.add_argument("--y", help="y(t) expression")
    p.add_argument("--name", default="curve")
    p.add_argument("--fixture", choices=sorted(FIXTURES), help="use a bundled fixture")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rectifiable", description=__doc__.splitlines()[0])
    _add_globals(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, help_):
        p = sub.add_parser(name, help=help_)
        _add_globals(p, "_sub")
        return p

    p = command("analyze", "full Euclidean and affine report for a curve")
    _add_curve(p)
    p = command("rectify", "exactness of q for a curve, or of an explicit k-differential")
    _add_curve(p)
    p.add_argument("--coeff", help="coefficient h(t) of h dt^k")
    p.add_argument("--k", type=int, default=2)
    p = command("affine", "special-affine cubic differential")
    _add_curve(p)
    p = command("evolute", "evolute of a curve")
    _add_curve(p)
    p = command("pluecker", "Plücker and evolute counts for degree d")
    p.add_argument("d", type=int)
    p.add_argument("--variant", choices=["generic", "rational"], default="rational")
    p = command("realize", "curves with a prescribed arc-length quadratic differential")
    p.add_argument("q", help="coefficient of q dt^2")
    p.add_argument("--bound", type=int, default=2)
    p = command("corpus", "run the bundled fixtures")
    p.add_argument("--workers", type=int, default=1)
    return parser


def _curve_spec(args, params) -> CurveSpec:
    if args.fixture:
        spec = FIXTURES[args.fixture].spec
        return spec.with_params(params) if params else spec
    if args.spec:
        return load_curve_spec(args.spec, params)
    if args.x is None or args.y is None:
        raise ParseError("give a spec file, --fixture, or both --x and --y", 0)
    return CurveSpec(args.name, args.x, args.y, params)


def _emit(obj, as_json: bool):
    print(json.dumps(obj, indent=2) if as_json else render_text(obj))


def _run(args, params, as_json) -> int:
    cmd = args.command
    if cmd == "analyze":
        report = analyze(_curve_spec(args, params))
        print(report.to_json() if as_json else report.to_text())
    elif cmd == "rectify":
        if args.coeff is not None:
            d = KDifferential(args.k, parse_expr(args.coeff, params))
            label = {"coeff": ratfunc_json(d.coeff), "k": d.k}
        else:
            curve = _curve_spec(args, params).to_curve()
            d = arc_length_qdiff(curve)
            label = {"curve": curve.name, "q": ratfunc_json(d.coeff)}
        label["stratum"] = list(stratum_of(d).orders)
        label["rectification"] = verdict_json(rectify(d))
        _emit(label, as_json)
    elif cmd == "affine":
        curve = _curve_spec(args, params).to_curve()
        cubic = affine_cubic_diff(curve)
        _emit({"curve": curve.name, "cubic": ratfunc_json(cubic.coeff),
               "stratum": list(stratum_of(cubic.differential).orders),
               "verdict": verdict_json(rectify(cubic.differential))}, as_json)
    elif cmd == "evolute":
        curve = _curve_spec(args, params).to_curve()
        ev = evolute(curve)
        if isinstance(ev, Degenerate):
            out = {"kind": "point", "point": [frac_str(v) for v in ev.point]}
        else:
            out = {"kind": "curve", "x": ratfunc_json(ev.x), "y": ratfunc_json(ev.y)}
        _emit({"curve": curve.name, "evolute": out}, as_json)
    elif cmd == "pluecker":
        _emit({"curve": asdict(pluecker(args.d, args.variant)),
               "evolute": asdict(evolute_counts(args.d, args.variant))}, as_json)
    elif cmd == "realize":
        q = KDifferential(2, parse_expr(args.q, params))
        found = realize_genus0(q, args.bound)
        _emit({"q": ratfunc_json(q.coeff), "bound": args.bound, "realizations": [
            {"x": ratfunc_json(r.curve.x), "y": ratfunc_json(r.curve.y),
             "similarity": frac_str(r.similarity),
             "half_divisor": [{"factor": str(f), "order": m} for f, m in r.half_divisor]}
            for r in found]}, as_json)
    elif cmd == "corpus":
        summary = run_corpus(workers=args.workers)
        out = {
            "ok": summary.ok,
            "fixtures": [{"name": r.name, "mismatches": len(r.mismatches)} for r in summary.results],
            "mismatches": [asdict(m) for m in summary.mismatches],
            "notes": [n for r in summary.results for n in r.notes],
        }
        _emit(out, as_json)
        return EXIT_OK if summary.ok else EXIT_MISMATCH
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    as_json = bool(args.json or args.json_sub)
    params = dict((args.param or []) + (args.param_sub or []))
    try:
        return _run(args, params, as_json)
    except (ParseError, OSError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (AnalysisError, RectifiableError, ArithmeticError, ValueError) as exc:
        print(f"analysis error: {exc}", file=sys.stderr)
        return EXIT_ANALYSIS


if __name__ == "__main__":
    sys.exit(main())
