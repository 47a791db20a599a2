"""Command-line front end.

Exit status: 0 on success, 1 on a domain error or failed verification,
2 on a usage error (bad flags, malformed expression).
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction
from typing import Sequence

from gfstream import continual, hankel, parser, ratgf, series, streamkit, verify
from gfstream.series import Series, SeriesError, fmt_rat

_GF_ARG = re.compile(r"^\s*([a-z_]+)\s*(?:\((.*)\))?\s*$")


class UsageError(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _rat(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _nat(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return v


def _seed(text: str) -> int:
    v = _nat(text)
    if v >= 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return v


def _add_gf(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--gf", help="catalog entry, e.g. g_half or 'g_lm(1,1/2)'")
    g.add_argument("--expr", help="expression in x, e.g. '1/sqrt(1-x)'")


def _series_from_args(args, order: int) -> Series:
    if args.gf is not None:
        m = _GF_ARG.match(args.gf)
        if not m:
            raise UsageError(f"malformed --gf value {args.gf!r}")
        params = [s for s in (m.group(2) or "").split(",") if s.strip()]
        try:
            values = [Fraction(s.strip()) for s in params]
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"malformed parameters in --gf {args.gf!r}") from None
        return series.catalog(m.group(1), order, *values)
    return parser.parse(args.expr, order)


def _read_rationals(path: str) -> list[Fraction]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                out.append(Fraction(line))
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"{path}:{lineno}: not a rational: {line!r}") from None
    return out


def _generate(kind: str, length: int, seed: int) -> list[Fraction]:
    if kind == "impulse":
        return [Fraction(int(t == 0)) for t in range(length)]
    if kind == "ones":
        return [Fraction(1)] * length
    rng = random.Random(seed)
    return [Fraction(rng.randint(-9, 9)) for _ in range(length)]


def _emit(args, data: dict, lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(data))
    else:
        for line in lines:
            print(line)


def _strs(values) -> list[str]:
    return [fmt_rat(v) for v in values]


# ---------------------------------------------------------------------------
# Subcommands


def cmd_coeffs(args) -> int:
    f = _series_from_args(args, args.order)
    _emit(args, {"order": f.order, "coeffs": _strs(f)}, [series.dumps(f)])
    return 0


def _rational_from_args(args) -> ratgf.RationalGF:
    if args.P is not None:
        return ratgf.RationalGF(series.Poly(series.loads(args.P)), series.Poly(series.loads(args.Q)))
    # recover P/Q from coefficients, refusing anything that does not look rational
    n = args.probe
    a = _series_from_args(args, 2 * n)
    rep = hankel.detect_degree(a)
    if rep.degree is None:
        raise SeriesError(f"{rep.verdict}; use --dense for irrational generating functions")
    g = ratgf.pade(a, max(rep.degree, 1))
    if ratgf.agreement(a, g) <= a.order:
        raise SeriesError("recovered P/Q does not reproduce the probed coefficients")
    return g


def cmd_stream(args) -> int:
    if args.input is not None:
        z = _read_rationals(args.input)
    else:
        if args.length is None:
            raise UsageError("stream run: --gen needs --length")
        z = _generate(args.gen, args.length, args.seed)
    if args.dense:
        if args.P is not None:
            a = ratgf.RationalGF(series.Poly(series.loads(args.P)),
                                 series.Poly(series.loads(args.Q))).expand(max(len(z) - 1, 0))
        else:
            a = _series_from_args(args, max(len(z) - 1, 0))
        s = streamkit.dense_streamer(a)
    else:
        s = streamkit.rational_streamer(_rational_from_args(args))
    r = streamkit.run(s, z)
    _emit(args, {"outputs": _strs(r.outputs), "buffers": r.buffers, "max_buffer": r.max_buffer},
          _strs(r.outputs) + [f"max_buffer={r.max_buffer}"])
    return 0


def cmd_hankel(args) -> int:
    if args.op == "degree":
        a = _series_from_args(args, 2 * args.n)
        rep = hankel.detect_degree(a)
        _emit(args, {"n": rep.n, "ranks": list(rep.ranks), "degree": rep.degree,
                     "verdict": rep.verdict}, str(rep).splitlines())
        return 0
    J = args.I if args.J is None else args.J
    a = _series_from_args(args, args.I + J)
    view = hankel.HankelView(a, args.I, J)
    if args.op == "det":
        v = hankel.det(view)
        _emit(args, {"I": args.I, "J": J, "det": fmt_rat(v)}, [f"det={fmt_rat(v)}"])
    else:
        r = hankel.rank(view)
        _emit(args, {"I": args.I, "J": J, "rank": r}, [f"rank={r}"])
    return 0


def cmd_lowerbound(args) -> int:
    a = _series_from_args(args, args.t + args.I)
    cert = hankel.space_lower_bound(a, args.t, args.I)
    _emit(args, {"t": cert.t, "I": cert.I, "rank": cert.rank, "witness": list(cert.witness)},
          [str(cert)])
    return 0


def cmd_pade(args) -> int:
    order = max(args.order if args.order is not None else 2 * args.d - 1, 2 * args.d - 1, 0)
    a = _series_from_args(args, order)
    g = ratgf.pade(a, args.d)
    agree = ratgf.agreement(a, g)
    _emit(args, {"P": _strs(g.P.coeffs), "Q": _strs(g.Q.coeffs), "degree": g.degree,
                 "agreement": agree},
          ratgf.dumps(g).splitlines() + [f"degree={g.degree}", f"agreement={agree}"])
    return 0


def cmd_verify(args) -> int:
    suite = args.suite
    if suite == "catalan":
        rep = verify.verify_catalan_dets(args.dmax if args.dmax is not None else verify.DEFAULTS.det_dmax)
    elif suite == "sqrtdet":
        rep = verify.verify_sqrt_dets(args.dmax if args.dmax is not None else verify.DEFAULTS.det_dmax)
    elif suite == "junod":
        rep = verify.verify_junod(args.b, args.c, args.dmax if args.dmax is not None else 8)
    elif suite == "corank":
        rep = verify.verify_corank(args.lam, args.mu,
                                   args.dmax if args.dmax is not None else verify.DEFAULTS.rank_dmax)
    else:
        dmax = args.dmax if args.dmax is not None else verify.DEFAULTS.comp_dmax
        rel = verify.harder_sqrt_relation(args.lam, args.mu, max(2 * dmax, 24))
        rep = verify.check_comp_relation(rel, dmax)
    data = {"suite": rep.name, "ok": rep.ok, "notes": rep.notes,
            "rows": [{"d": r.d, "expected": r.expected, "got": r.got, "ok": r.ok, **dict(r.extra)}
                     for r in rep.rows]}
    _emit(args, data, rep.lines())
    return 0 if rep.ok else 1


def cmd_continual(args) -> int:
    z = _read_rationals(args.input) if args.input else None
    length = args.length if z is None else len(z)
    if length is None:
        raise UsageError("continual demo: give --length or --input")
    if z is not None and args.length is not None and args.length != len(z):
        raise UsageError(f"--length {args.length} disagrees with {len(z)} input values")
    noise = _read_rationals(args.noise) if args.noise else None
    r = continual.mechanism_run(length, args.approx_degree, args.seed, z, noise)
    lines = [f"t={t} out={fmt_rat(v)}" for t, v in enumerate(r.outputs)]
    lines += [f"max_buffer={r.max_buffer}", f"coeff_error={fmt_rat(r.coeff_error)}"]
    _emit(args, {"outputs": _strs(r.outputs), "noise": _strs(r.noise), "max_buffer": r.max_buffer,
                 "coeff_error": fmt_rat(r.coeff_error),
                 "P": _strs(r.approximant.P.coeffs), "Q": _strs(r.approximant.Q.coeffs)}, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = _ArgParser(prog="gfstream", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True, parser_class=_ArgParser)

    p = sub.add_parser("coeffs", help="expand a generating function")
    _add_gf(p)
    p.add_argument("--order", type=_nat, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("stream", help="streaming runs")
    ssub = p.add_subparsers(dest="op", required=True, parser_class=_ArgParser)
    p = ssub.add_parser("run", help="run a streamer over an input stream")
    _add_gf(p, required=False)
    p.add_argument("--P", help="numerator coefficients, e.g. '1'")
    p.add_argument("--Q", help="denominator coefficients, e.g. '1,-1'")
    p.add_argument("--dense", action="store_true", help="store all inputs instead of P/Q registers")
    p.add_argument("--probe", type=_nat, default=16,
                   help="Hankel size used to recover P/Q from --gf/--expr (default 16)")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="file with one rational per line")
    src.add_argument("--gen", choices=["impulse", "ones", "random"])
    p.add_argument("--length", type=_nat)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_stream)

    p = sub.add_parser("hankel", help="Hankel determinant, rank, degree detection")
    p.add_argument("op", choices=["det", "rank", "degree"])
    _add_gf(p)
    p.add_argument("--I", type=_nat, default=0)
    p.add_argument("--J", type=_nat)
    p.add_argument("--n", type=_nat, default=10, help="truncation for 'degree' (order 2n)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hankel)

    p = sub.add_parser("lowerbound", help="rank certificate for the buffer size")
    _add_gf(p)
    p.add_argument("--t", type=_nat, required=True)
    p.add_argument("--I", type=_nat, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lowerbound)

    p = sub.add_parser("pade", help="Padé approximant from coefficients")
    _add_gf(p)
    p.add_argument("--d", type=_nat, required=True)
    p.add_argument("--order", type=_nat, help="coefficients used for the agreement report")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pade)

    p = sub.add_parser("verify", help="determinant and rank suites")
    p.add_argument("suite", choices=["catalan", "sqrtdet", "junod", "corank", "comp"])
    p.add_argument("--dmax", type=_nat)
    p.add_argument("--b", type=_rat, default=Fraction(5))
    p.add_argument("--c", type=_rat, default=Fraction(1))
    p.add_argument("--lam", type=_rat, default=Fraction(1))
    p.add_argument("--mu", type=_rat, default=Fraction(1, 2))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("continual", help="correlated-noise continual counting")
    csub = p.add_subparsers(dest="op", required=True, parser_class=_ArgParser)
    p = csub.add_parser("demo")
    p.add_argument("--length", type=_nat)
    p.add_argument("--approx-degree", type=_nat, default=3)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--input", help="file with z, one rational per line")
    p.add_argument("--noise", help="file with recorded noise y, one rational per line")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_continual)
    return top


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "op", None) == "run" and (args.P is None) != (args.Q is None):
            raise UsageError("stream run: --P and --Q go together")
        if getattr(args, "op", None) == "run" and args.P is None and args.gf is None and args.expr is None:
            raise UsageError("stream run: give --gf, --expr or --P/--Q")
        return args.func(args)
    except UsageError as e:
        print(str(e).rstrip(), file=sys.stderr)
        return 2
    except parser.ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SystemExit as e:  # --help
        return int(e.code or 0)
    except (ArithmeticError, ValueError, RuntimeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


dispatch = main


if __name__ == "__main__":
    sys.exit(main())
