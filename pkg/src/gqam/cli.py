"""Command-line interface: ``gqam <command> ...``.

Exit codes: 0 success, 1 negative verdict (incomparable, probe failure,
failed check), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis, means, verify
from .analysis import Relation
from .errors import GqamError
from .frak import prop_m_experiment
from .rational import as_rational, fmt
from .specio import continuous_to_dict, function_to_dict, load_function

OK, NEGATIVE, USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def _rationals(text: str) -> list:
    if text is None:
        raise _Usage("a comma-separated list of rationals is required")
    items = [t.strip() for t in text.split(",") if t.strip()]
    if not items:
        raise _Usage("empty list")
    return [as_rational(t) for t in items]


def _load(path):
    if path is None:
        raise _Usage("a generator file (-f) is required")
    try:
        return load_function(Path(path))
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None


def _emit(args, data: dict, text: str):
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _vec(xs) -> str:
    return "(" + ", ".join(fmt(x) for x in xs) + ")"


# -- commands ---------------------------------------------------------------------


def cmd_eval(args):
    f = _load(args.f)
    if args.x is None:
        raise _Usage("--x is required")
    x = as_rational(args.x)
    lo, v, hi = f.limits(x)
    if args.limits:
        _emit(args, {"x": fmt(x), "left": fmt(lo), "value": fmt(v), "right": fmt(hi)},
              f"{fmt(lo)} {fmt(v)} {fmt(hi)}")
    else:
        _emit(args, {"x": fmt(x), "value": fmt(v)}, fmt(v))
    return OK


def cmd_mean(args):
    f = _load(args.f)
    xs = _rationals(args.points)
    m = means.quasi_mean(f, xs)
    _emit(args, {"points": [fmt(x) for x in xs], "mean": fmt(m)}, fmt(m))
    return OK


def cmd_wmean(args):
    f = _load(args.f)
    xs, ws = _rationals(args.points), _rationals(args.weights)
    m = means.weighted_quasi_mean(f, xs, ws)
    _emit(args, {"points": [fmt(x) for x in xs], "weights": [fmt(w) for w in ws], "mean": fmt(m)}, fmt(m))
    return OK


def cmd_inverse(args):
    f = _load(args.f)
    inv = f.inverse
    if args.emit:
        print(json.dumps(continuous_to_dict(inv), indent=2))
        return OK
    if args.u is not None:
        u = as_rational(args.u)
        if u not in inv.domain:
            raise GqamError(f"u={fmt(u)} is outside {inv.domain}")
        _emit(args, {"u": fmt(u), "value": fmt(inv(u))}, fmt(inv(u)))
        return OK
    _emit(args, continuous_to_dict(inv), str(inv))
    return OK


def cmd_envelope(args):
    f = _load(args.f)
    h = f.lower_envelope() if args.side == "lower" else f.upper_envelope()
    print(json.dumps(function_to_dict(h), indent=2))
    return OK


def _witness_dict(w, cx) -> dict:
    return {
        "direction": w.direction.name, "x": fmt(w.x), "t": fmt(w.t), "y": fmt(w.y),
        "ratio_f": fmt(w.ratio_f), "ratio_g": fmt(w.ratio_g),
        "counterexample": None if cx is None else {
            "points": [fmt(p) for p in cx.points], "weights": [fmt(p) for p in cx.weights],
            "lambda": fmt(cx.lam), "mean_f": fmt(cx.mean_f), "mean_g": fmt(cx.mean_g)},
    }


def _verdict_dict(v) -> dict:
    cert = v.certificate
    if isinstance(cert, tuple):
        cert = {"alpha": fmt(cert[0]), "beta": fmt(cert[1])}
    elif cert is not None:
        cert = continuous_to_dict(cert)
    cxs = list(v.counterexamples) + [None] * (len(v.witnesses) - len(v.counterexamples))
    return {"relation": v.relation.name, "certificate": cert,
            "witnesses": [_witness_dict(w, c) for w, c in zip(v.witnesses, cxs)]}


def _verdict_text(v, report: bool) -> str:
    lines = [v.relation.name]
    cert = v.certificate
    if isinstance(cert, tuple):
        lines.append(f"f = {fmt(cert[0])}*g + {fmt(cert[1])}")
    elif cert is not None:
        lines.append(f"bridge: {cert}")
    cxs = list(v.counterexamples) + [None] * (len(v.witnesses) - len(v.counterexamples))
    for w, cx in zip(v.witnesses, cxs):
        lines.append(f"witness against {w.direction.name}: (x, t, y) = ({fmt(w.x)}, {fmt(w.t)}, {fmt(w.y)}), "
                     f"r_f = {fmt(w.ratio_f)}, r_g = {fmt(w.ratio_g)}")
        if report and cx is not None:
            lines.append(f"  weights ({fmt(cx.weights[0])}, {fmt(cx.weights[1])}) at {_vec(cx.points)}: "
                         f"A_f = {fmt(cx.mean_f)}, A_g = {fmt(cx.mean_g)}, t = {fmt(cx.t)}")
    return "\n".join(lines)


def cmd_compare(args):
    f, g = _load(args.f), _load(args.g)
    v = analysis.compare(f, g)
    _emit(args, _verdict_dict(v), _verdict_text(v, args.report))
    return NEGATIVE if v.relation is Relation.INCOMPARABLE else OK


def cmd_equal(args):
    f, g = _load(args.f), _load(args.g)
    ab = analysis.affine_relation(f, g)
    if ab is None:
        _emit(args, {"equal": False}, "NOT EQUAL")
        return NEGATIVE
    _emit(args, {"equal": True, "alpha": fmt(ab[0]), "beta": fmt(ab[1])},
          f"EQUAL\nf = {fmt(ab[0])}*g + {fmt(ab[1])}")
    return OK


def cmd_probe(args):
    f = _load(args.f)
    n = args.n or 2
    if args.check == "kolmogorov":
        k = analysis.kolmogorov_probe(f, n)
        opt = lambda w: None if w is None else [fmt(x) for x in w]
        data = {"n": n, "continuous": k.continuous, "envelope_order": k.envelope_order,
                "envelope_witness": opt(k.envelope_witness), "strict": k.strict,
                "strictness_witness": opt(k.strictness_witness),
                "strictly_increasing": k.strictly_increasing, "all_pass": k.all_pass}
        lines = [f"continuous generator: {k.continuous}",
                 f"envelope order: {k.envelope_order}" + (f" (fails at {_vec(k.envelope_witness)})"
                                                         if not k.envelope_order else ""),
                 f"strict: {k.strict}" + (f" (mean{_vec(k.strictness_witness)} is an extreme argument)"
                                          if not k.strict else ""),
                 f"strictly increasing: {k.strictly_increasing}"]
        _emit(args, data, "\n".join(lines))
        return OK if k.all_pass else NEGATIVE
    if args.x is None:
        raise _Usage("--x is required for this check")
    d = analysis.semicontinuity_probe(f, as_rational(args.x), n)
    ok = {"lsc": d.lower_semicontinuous, "usc": d.upper_semicontinuous, "cont": d.continuous}[args.check]
    data = {"x": fmt(d.point), "n": n, "lower_semicontinuous": d.lower_semicontinuous,
            "upper_semicontinuous": d.upper_semicontinuous,
            "lower_witness": None if d.lower_witness is None else fmt(d.lower_witness),
            "upper_witness": None if d.upper_witness is None else fmt(d.upper_witness)}
    lines = []
    if args.check in ("lsc", "cont"):
        lines.append(f"lower semicontinuous: {d.lower_semicontinuous}"
                     + (f" (witness y = {fmt(d.lower_witness)})" if d.lower_witness is not None else ""))
    if args.check in ("usc", "cont"):
        lines.append(f"upper semicontinuous: {d.upper_semicontinuous}"
                     + (f" (witness y = {fmt(d.upper_witness)})" if d.upper_witness is not None else ""))
    _emit(args, data, "\n".join(lines))
    return OK if ok else NEGATIVE


def cmd_reduce(args):
    f = _load(args.f)
    xs = _rationals(args.points)
    if args.n is None:
        raise _Usage("--n is required")
    lo, hi = means.reduce_from_n(f, xs, args.n)
    _emit(args, {"points": [fmt(x) for x in xs], "n": args.n, "inf_below": fmt(lo), "sup_above": fmt(hi)},
          f"{fmt(lo)} {fmt(hi)}")
    return OK


def cmd_floorcheck(args):
    f, g = _load(args.f), _load(args.g)
    if args.n is None:
        raise _Usage("--n is required")
    triples = None
    if args.triples:
        triples = []
        for chunk in args.triples.split(";"):
            t = _rationals(chunk)
            if len(t) != 3:
                raise _Usage(f"triple {chunk!r} needs three values")
            triples.append(tuple(t))
    fc = analysis.floor_condition(f, g, args.n, triples)
    data = {"passed": fc.passed, "checked": fc.checked,
            "failure": None if fc.failure is None else [fmt(v) for v in fc.failure]}
    if fc.passed:
        text = f"pass ({fc.checked} checks)"
    else:
        x, t, y, m, a, b = fc.failure
        text = f"FAIL at (x, t, y) = ({fmt(x)}, {fmt(t)}, {fmt(y)}), m = {m}: {a} > {b}"
    _emit(args, data, text)
    return OK if fc.passed else NEGATIVE


def cmd_example_m(args):
    if args.a is None or args.b is None:
        raise _Usage("--a and --b are required")
    rep = prop_m_experiment(as_rational(args.a), as_rational(args.b), args.n or 2, args.trials, args.seed)
    _emit(args, rep.to_dict(), "\n".join(rep.lines()))
    return OK if rep.passed else NEGATIVE


def cmd_verify(args):
    names = list(verify.SUITES) if args.suite in (None, "all") else [args.suite]
    for name in names:
        if name not in verify.SUITES:
            raise _Usage(f"unknown suite {name!r}; choose from {', '.join(verify.SUITES)} or all")
    results = []
    for name in names:
        r = verify.run_suite(name, args.seed, args.trials)
        results.append(r)
        if not args.json:
            print(r.line(), flush=True)
            for msg in r.failures:
                print(f"    {msg}")
    if args.json:
        print(json.dumps([{"suite": r.name, "passed": r.passed, "checks": r.checks,
                           "failed": r.failed, "failures": r.failures} for r in results], indent=2))
    return OK if all(r.passed for r in results) else NEGATIVE


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    fn = argparse.ArgumentParser(add_help=False)
    fn.add_argument("-f", metavar="FILE", help="generator file (JSON)")
    pair = argparse.ArgumentParser(add_help=False, parents=[fn])
    pair.add_argument("-g", metavar="FILE", help="second generator file (JSON)")

    p = argparse.ArgumentParser(prog="gqam", description="Generalized quasiarithmetic means, exactly.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", parents=[common, fn], help="evaluate f at a point")
    s.add_argument("--x")
    s.add_argument("--limits", action="store_true", help="print left limit, value, right limit")
    s.set_defaults(run=cmd_eval)

    s = sub.add_parser("mean", parents=[common, fn], help="quasiarithmetic mean")
    s.add_argument("--points")
    s.set_defaults(run=cmd_mean)

    s = sub.add_parser("wmean", parents=[common, fn], help="weighted quasiarithmetic mean")
    s.add_argument("--points")
    s.add_argument("--weights")
    s.set_defaults(run=cmd_wmean)

    s = sub.add_parser("inverse", parents=[common, fn], help="generalized inverse")
    s.add_argument("--u", help="evaluate the inverse at u")
    s.add_argument("--emit", action="store_true", help="print the inverse as a JSON document")
    s.set_defaults(run=cmd_inverse)

    s = sub.add_parser("envelope", parents=[common, fn], help="semicontinuous envelope as a generator file")
    s.add_argument("--side", choices=("lower", "upper"), default="lower")
    s.set_defaults(run=cmd_envelope)

    s = sub.add_parser("compare", parents=[common, pair], help="decide comparability of the two means")
    s.add_argument("--report", action="store_true", help="include verified counterexamples")
    s.set_defaults(run=cmd_compare)

    s = sub.add_parser("equal", parents=[common, pair], help="decide equality of the two means")
    s.set_defaults(run=cmd_equal)

    s = sub.add_parser("probe", parents=[common, fn], help="semicontinuity and continuity probes")
    s.add_argument("--check", choices=("lsc", "usc", "cont", "kolmogorov"), default="cont")
    s.add_argument("--x")
    s.add_argument("--n", type=int)
    s.set_defaults(run=cmd_probe)

    s = sub.add_parser("reduce", parents=[common, fn], help="recover the m-variable mean from arity n")
    s.add_argument("--points")
    s.add_argument("--n", type=int)
    s.set_defaults(run=cmd_reduce)

    s = sub.add_parser("floorcheck", parents=[common, pair], help="necessary floor condition at arity n")
    s.add_argument("--n", type=int)
    s.add_argument("--triples", help='"x,t,y;x,t,y;..." (default: critical triples)')
    s.set_defaults(run=cmd_floorcheck)

    s = sub.add_parser("example-m", parents=[common], help="zero-spanning mean experiment")
    s.add_argument("--a")
    s.add_argument("--b")
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(run=cmd_example_m)

    s = sub.add_parser("verify", parents=[common], help="run the seeded property suites")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, help="override each suite's primary trial count")
    s.add_argument("--suite", default="all", help=f"one of: {', '.join(verify.SUITES)}, all")
    s.set_defaults(run=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.run(args)
    except _Usage as exc:
        print(f"gqam {args.command}: {exc}", file=sys.stderr)
        return USAGE
    except (GqamError, ValueError, ZeroDivisionError) as exc:
        print(f"gqam {args.command}: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
