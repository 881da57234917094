"""Command-line interface: ``plueckerlab verify ...`` and a few ideal utilities."""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .domains import DomainError, parse_domain
from .grassmann import UnsupportedContext, parse_context, pluecker_ideal
from .idealfile import IdealFileError, format_ideal, read_ideal
from .ideals import Ideal, hilbert_data, saturate
from .polynomial import GREVLEX, LEX, ParseError
from .zerodim import NotZeroDimensional, zero_dim_radical
from . import verify


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def _window(text: str) -> tuple:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError("empty degree window")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    # the options are accepted before or after the subcommand; only the
    # top level sets defaults so a later parser cannot reset them
    top = argparse.ArgumentParser(add_help=False)
    top.add_argument("--format", choices=("text", "json"), default="text")
    top.add_argument("--timings", action="store_true", help="include wall-clock timings (not deterministic)")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--timings", action="store_true", default=argparse.SUPPRESS)

    ap = argparse.ArgumentParser(prog="plueckerlab", parents=[top],
                                 description="Exact verification runs for Pluecker ideals and Koszul complexes.")
    ap.add_argument("--version", action="version", version=f"plueckerlab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification and print its report", parents=[common])
    vs = v.add_subparsers(dest="check", required=True)
    p2 = vs.add_parser("p2", parents=[common])
    p2.add_argument("--degree-window", type=_window, default=(1, 6), metavar="LO..HI")
    p2.add_argument("--flip-sign", action="store_true", help=argparse.SUPPRESS)
    tp = vs.add_parser("two-points", parents=[common])
    tp.add_argument("--primes", type=_int_list, default=list(verify.DEFAULT_PRIMES))
    se = vs.add_parser("section", parents=[common])
    se.add_argument("--m", type=int, required=True)
    se.add_argument("--primes", type=_int_list, default=list(verify.SECTION_PRIMES))
    se.add_argument("--max-m", type=int, default=6)
    zd = vs.add_parser("zero-dim", parents=[common])
    zd.add_argument("--m", type=int, required=True)
    zd.add_argument("--primes", type=_int_list, default=list(verify.DEFAULT_PRIMES))
    ri = vs.add_parser("richardson", parents=[common])
    ri.add_argument("--m", type=int, required=True)
    g = vs.add_parser("g36", parents=[common])
    g.add_argument("--prime", type=int, default=101)

    gb = sub.add_parser("gb", help="reduced Groebner basis of an ideal file", parents=[common])
    gb.add_argument("file")
    gb.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
    sa = sub.add_parser("saturate", help="saturate by the irrelevant ideal or by --by FILE", parents=[common])
    sa.add_argument("file")
    sa.add_argument("--by", help="ideal file for J (same ring)")
    hi = sub.add_parser("hilbert", help="Hilbert numerator, projective dimension and degree", parents=[common])
    hi.add_argument("file")
    r0 = sub.add_parser("radical0", help="radical of a zero-dimensional affine ideal", parents=[common])
    r0.add_argument("file")
    pl = sub.add_parser("pluecker", help="print the Pluecker ideal as an ideal file", parents=[common])
    pl.add_argument("--grassmann", required=True, metavar="d,m")
    pl.add_argument("--over", default="Q")
    return ap


def _emit_report(rep, args) -> int:
    if args.format == "json":
        print(rep.to_json(args.timings))
    else:
        print(rep.to_text(args.timings))
    return 0 if rep.passed else 1


def _emit_ideal(I: Ideal, gens, args, extra: dict | None = None) -> int:
    if args.format == "json":
        d = {"ring": list(I.ring.variables), "domain": str(I.ring.domain), "gens": [str(g) for g in gens]}
        d.update(extra or {})
        print(json.dumps(d, indent=2))
    else:
        sys.stdout.write(format_ideal(I, gens))
    return 0


def run(args) -> int:
    if args.command == "verify":
        c = args.check
        if c == "p2":
            rep = verify.cmd_verify_p2(args.degree_window, flip_sign=args.flip_sign)
        elif c == "two-points":
            rep = verify.cmd_verify_two_points(args.primes)
        elif c == "section":
            rep = verify.cmd_verify_section(args.m, args.primes, max_m=args.max_m)
        elif c == "zero-dim":
            rep = verify.cmd_verify_zero_dim(args.m, args.primes)
        elif c == "richardson":
            rep = verify.cmd_verify_richardson(args.m)
        else:
            rep = verify.cmd_search_g36(args.prime)
        return _emit_report(rep, args)

    if args.command == "pluecker":
        ctx = parse_context(args.grassmann, parse_domain(args.over))
        I = pluecker_ideal(ctx)
        return _emit_ideal(I, I.gens, args)

    I = read_ideal(args.file)
    if args.command == "gb":
        order = LEX if args.order == "lex" else GREVLEX
        return _emit_ideal(I, I.reduced_gens(order), args, {"order": args.order})
    if args.command == "saturate":
        J = read_ideal(args.by) if args.by else None
        if J is not None and J.ring != I.ring:
            raise IdealFileError("--by ideal lives in a different ring")
        S = saturate(I, J)
        return _emit_ideal(S, S.reduced_gens(), args)
    if args.command == "hilbert":
        hd = hilbert_data(I)
        d = {"numerator": list(hd.numerator), "reduced_numerator": list(hd.reduced_numerator),
             "proj_dim": hd.proj_dim, "degree": hd.degree}
        if args.format == "json":
            print(json.dumps(d, indent=2))
        else:
            for k, val in d.items():
                print(f"{k}: {val}")
        return 0
    R = zero_dim_radical(I)
    return _emit_ideal(R, R.reduced_gens(), args)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except (IdealFileError, ParseError, DomainError, UnsupportedContext, NotZeroDimensional,
            ValueError, OSError) as exc:
        print(f"plueckerlab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
