"""Command line front end.

Subcommands: ws (weight of a diagram), z (integral of a word), wz
(fused weight-system evaluation), lg (Links-Gould series), rt
(Reshetikhin-Turaev evaluation), verify (named identity suites).
Inputs dispatch on suffix: .tw words, .cd diagrams, .ribbon data.
"""

import argparse
import json
import sys
from fractions import Fraction

from .diagrams import CIRCLE, INTERVAL
from .jsonio import (
    load_diagram, load_ribbon, load_word, scalar_to_json, series_to_json,
    zvalue_to_json)
from .kontsevich import lg_invariant, wz_eval, z_eval
from .liesuper import build_gl, casimir_tensor, standard_rep
from .ribbon import ribbon_trivial, rt_invariant
from .scalars import AlphaScalar
from .verify import SUITES, run_all, run_suite
from .weightsys import scalar_of_endo, wlg, ws_link, ws_tangle11


_ALG_REP = {("gl2_1", "defining"): "gl21",
            ("gl1_1", "defining"): "gl11",
            ("gl2_1", "v_alpha"): "valpha"}


def _system(name):
    if name == "gl21":
        g = build_gl(2, 1)
        return standard_rep(g, "defining"), casimir_tensor(g, "gl")
    if name == "gl11":
        g = build_gl(1, 1)
        return standard_rep(g, "defining"), casimir_tensor(g, "gl")
    g = build_gl(2, 1)
    return standard_rep(g, "v_alpha"), casimir_tensor(g, "sl")


def _system_name(args):
    if getattr(args, "algebra", None) or getattr(args, "rep", None):
        key = (args.algebra or "gl2_1", args.rep or "defining")
        if key not in _ALG_REP:
            raise ValueError("no weight system for algebra %s with rep %s"
                             % key)
        return _ALG_REP[key]
    return args.system


def _poly_text(p):
    parts = []
    for k, c in enumerate(p.c):
        if not c:
            continue
        if k == 0:
            parts.append(str(c))
        elif k == 1:
            parts.append("%s a" % c)
        else:
            parts.append("%s a^%d" % (c, k))
    if not parts:
        return "0"
    out = parts[0]
    for term in parts[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


def scalar_text(v):
    if isinstance(v, AlphaScalar):
        num = _poly_text(v.num)
        if v.den.degree() > 0:
            return "(%s) / (%s)" % (num, _poly_text(v.den))
        return num
    return str(v)


def _series_lines(s):
    return ["h^%d: %s" % (m, scalar_text(s.coeff(m)))
            for m in range(s.ring.order + 1)]


def _chords_text(d):
    return " ".join("%d:%d-%d:%d" % (a + b) for a, b in d.chords) or "(none)"


def _emit_scalar(value, fmt):
    if fmt == "json":
        print(json.dumps(scalar_to_json(value)))
    else:
        print(scalar_text(value))


def _emit_series(value, fmt):
    if fmt == "json":
        print(json.dumps(series_to_json(value), indent=2))
    else:
        for line in _series_lines(value):
            print(line)


def _cmd_ws(args):
    d = load_diagram(args.file)
    if args.system == "lg":
        _emit_scalar(wlg(d), args.format)
        return 0
    rep, tv = _system(args.system)
    if all(k == CIRCLE for k in d.skeleton):
        value = ws_link(d, rep, tv)
    elif sum(1 for k in d.skeleton if k == INTERVAL) == 1:
        value = scalar_of_endo(ws_tangle11(d, rep, tv))
    else:
        raise ValueError("need an all-circle or one-interval skeleton")
    _emit_scalar(value, args.format)
    return 0


def _cmd_z(args):
    z = z_eval(load_word(args.file), args.order)
    if args.format == "json":
        print(json.dumps(zvalue_to_json(z), indent=2))
    else:
        for enc in sorted(z.terms, key=lambda e: (len(e[1]), e)):
            d = z.reps[enc]
            print("h^%d  %s  %s" % (len(enc[1]),
                                    scalar_text(z.terms[enc]),
                                    _chords_text(d)))
    return 0


def _cmd_wz(args):
    word = load_word(args.file)
    if not word.is_closed:
        raise ValueError("wz prints series for closed words only")
    rep, tv = _system(_system_name(args))
    _emit_series(wz_eval(word, rep, tv, args.order), args.format)
    return 0


def _cmd_lg(args):
    _emit_series(lg_invariant(load_word(args.file), args.order), args.format)
    return 0


def _cmd_rt(args):
    word = load_word(args.file)
    if not word.is_closed:
        raise ValueError("rt prints scalars for closed words only")
    data = load_ribbon(args.data) if args.data else ribbon_trivial()
    _emit_scalar(rt_invariant(word, data), args.format)
    return 0


def _cmd_verify(args):
    suite = args.suite_flag or args.suite
    if suite == "all":
        reports = run_all(order=args.order, seed=args.seed)
    else:
        reports = [run_suite(suite, order=args.order, seed=args.seed)]
    if args.format == "json":
        out = [{"suite": r.suite,
                "checks": [{"name": n, "ok": ok, "detail": d}
                           for n, ok, d in r.checks]} for r in reports]
        print(json.dumps(out, indent=2))
    else:
        for r in reports:
            for line in r.lines():
                print(line)
    return 0 if all(r.ok for r in reports) else 1


def _parser():
    top = argparse.ArgumentParser(
        prog="superchord",
        description="Exact weight systems, a truncated Kontsevich integral, "
                    "and ribbon evaluations for framed tangle words.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, order=True, flag="--word"):
        p.add_argument("file", nargs="?", help="input file")
        p.add_argument(flag, dest="file_flag",
                       help="same as the positional file")
        if order:
            p.add_argument("--order", type=int, default=3,
                           help="truncation degree, 1 to 4 (default 3)")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("ws", help="weight of a .cd diagram")
    p.add_argument("--system", choices=("lg", "gl21", "gl11", "valpha"),
                   default="lg")
    common(p, order=False, flag="--diagram")
    p.set_defaults(run=_cmd_ws)

    p = sub.add_parser("z", help="integral of a .tw word")
    common(p)
    p.set_defaults(run=_cmd_z)

    p = sub.add_parser("wz", help="weight-system series of a closed .tw word")
    p.add_argument("--system", choices=("gl21", "gl11", "valpha"),
                   default="gl21")
    p.add_argument("--algebra", choices=("gl2_1", "gl1_1"))
    p.add_argument("--rep", choices=("defining", "v_alpha"))
    common(p)
    p.set_defaults(run=_cmd_wz)

    p = sub.add_parser("lg", help="Links-Gould series of a knot word")
    common(p)
    p.set_defaults(run=_cmd_lg)

    p = sub.add_parser("rt", help="ribbon evaluation of a closed .tw word")
    p.add_argument("--data", help=".ribbon data file (default: trivial)")
    common(p, order=False)
    p.set_defaults(run=_cmd_rt)

    suites = tuple(sorted(SUITES)) + ("all",)
    p = sub.add_parser("verify", help="run named identity suites")
    p.add_argument("suite", nargs="?", choices=suites, default="all")
    p.add_argument("--suite", dest="suite_flag", choices=suites)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--order", "--degree", type=int, default=3,
                   help="truncation degree, 1 to 4 (default 3)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(run=_cmd_verify)
    return top


def main(argv=None):
    top = _parser()
    args = top.parse_args(argv)
    if getattr(args, "order", 3) not in (1, 2, 3, 4):
        top.error("--order must be between 1 and 4")
    if hasattr(args, "file"):
        args.file = args.file_flag or args.file
        if args.file is None:
            top.error("an input file is required")
    try:
        return args.run(args)
    except (ValueError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
