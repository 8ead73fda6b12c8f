"""Command-line entry point.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .catalog import CATALOG, CatalogError, catalog_json, catalog_table, parse_pv
from .exact_poly import ParseError
from .expr import ExprError
from .harish import NotSymmetric, a_to_r, center_split, decompose_tau, gamma, r_to_a
from .oracle import calibrate_and_check, parse_model
from .smith import CoeffRing, SmithContext, UContext
from .suites import SUITES, run_suite
from .tee import NotHomogeneous, TeeContext, WordError, bfunction, is_central, is_in_T0
from .torus import radial_restriction, render


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(text)


def _ctx(args) -> TeeContext:
    if not args.pv:
        raise UsageError("--pv is required")
    return TeeContext(parse_pv(args.pv))


def _word(ctx: TeeContext, args):
    if not args.word:
        raise UsageError("--word is required")
    return ctx.word(args.word)


def cmd_catalog(args) -> int:
    if args.json:
        print(catalog_json(CATALOG))
    else:
        print(catalog_table(CATALOG))
    return 0


def cmd_bfunction(args) -> int:
    ctx = _ctx(args)
    b = bfunction(_word(ctx, args))
    payload = {"pv": ctx.pv.label, "word": args.word, "degree": b.p, "a": str(b.poly),
               "r": str(a_to_r(b.poly))}
    lines = [f"degree  {b.p}", f"b(a)    {b.poly}", f"b(r)    {a_to_r(b.poly)}"]
    if b.p == 0:
        g = gamma(b, ctx.n, ctx.d, check=False)
        payload["gamma"] = str(g)
        payload["symmetric"] = g.is_symmetric
        lines.append(f"gamma   {g}{'' if g.is_symmetric else '  (not symmetric)'}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_radial(args) -> int:
    ctx = _ctx(args)
    r = radial_restriction(_word(ctx, args))
    text = render(r, args.style)
    _emit(args, {"pv": ctx.pv.label, "word": args.word, "radial": text}, text)
    return 0


def cmd_hc(args) -> int:
    ctx = _ctx(args)
    b = bfunction(_word(ctx, args))
    if b.p != 0:
        raise UsageError(f"the Harish-Chandra image needs a degree-0 word, got degree {b.p}")
    g = gamma(b, ctx.n, ctx.d)
    image = g.poly if args.vars == "r" else r_to_a(g.poly)
    alphas = decompose_tau(g)
    payload = {"pv": ctx.pv.label, "word": args.word, "vars": args.vars, "gamma": str(image),
               "sigma0_expansion": [str(a) for a in alphas]}
    lines = [f"gamma   {image}"]
    for i, a in enumerate(alphas):
        if a:
            lines.append(f"  sigma0^{i}: {a}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_center_test(args) -> int:
    if args.word:
        ctx = _ctx(args)
        u = ctx.word(args.word)
        in_t0 = is_in_T0(ctx, u)
        payload = {"pv": ctx.pv.label, "word": args.word, "in_T0": in_t0, "central": is_central(ctx, u)}
        lines = [f"in T0    {in_t0}", f"central  {payload['central']}"]
        if in_t0 and u:
            z, rest = center_split(bfunction(u), ctx.n, ctx.d)
            payload.update(center_part=str(z), e_part=str(rest))
            lines += [f"center   {z}", f"E-part   {rest}"]
        _emit(args, payload, "\n".join(lines))
        return 0
    rep = run_suite("center", seed=args.seed, pv=args.pv, trials=args.trials)
    _emit(args, rep.as_dict(), rep.summary())
    return 0 if rep.passed else 1


_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def _ring_names(poly_text: str) -> tuple[str, ...]:
    """Coefficient ring variables: the identifiers of ``f`` (or ``u``) other than ``t``."""
    return tuple(sorted({m for m in _IDENT.findall(poly_text) if m != "t"}))


def cmd_smith_nf(args) -> int:
    if not args.word:
        raise UsageError("--word is required")
    n = 1 if args.n is None else args.n
    if args.quotient:
        names = _ring_names(args.quotient)
        uctx = UContext(CoeffRing(names), n, args.quotient)
        el = uctx.element(args.word)
        payload = {"algebra": "U", "n": n, "u": str(uctx.u), "normal_form": str(el)}
    else:
        f = args.f or "t"
        names = _ring_names(f)
        ctx = SmithContext(CoeffRing(names), n, f)
        el = ctx.element(args.word)
        payload = {"algebra": "S", "n": n, "f": str(ctx.f), "normal_form": str(el)}
    _emit(args, payload, payload["normal_form"])
    return 0


def cmd_oracle(args) -> int:
    model = parse_model(args.model or "det:2")
    rep = calibrate_and_check(model, args.max_a)
    _emit(args, rep.as_dict(), rep.table())
    return 0 if rep.passed else 1


def cmd_verify(args) -> int:
    names = list(SUITES) if args.theorem == "all" else [args.theorem]
    reports = []
    for name in names:
        params = {"pv": args.pv, "trials": args.trials}
        if name in ("smith-pbw", "casimir"):
            params = {"trials": args.trials, "n": args.n, "f": args.f}
        elif name == "oracle":
            params = {"model": args.model, "max_a": args.max_a}
        elif name in ("bfunction-y", "sl2", "degree-growth", "rais"):
            params = {"pv": args.pv}
        reports.append(run_suite(name, seed=args.seed, **params))
    ok = all(r.passed for r in reports)
    if args.json:
        print(json.dumps({"passed": ok, "reports": [r.as_dict() for r in reports]}, indent=2))
    else:
        for r in reports:
            print(r.summary())
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pvalgebra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--seed", type=int, default=0)
        return p

    add("catalog", cmd_catalog, "list the builtin spaces")
    for name, func, help in (("bfunction", cmd_bfunction, "b-function of a word"),
                             ("radial", cmd_radial, "radial component of a word"),
                             ("hc", cmd_hc, "Harish-Chandra image of a degree-0 word"),
                             ("center-test", cmd_center_test, "membership in the center")):
        p = add(name, func, help)
        p.add_argument("--pv", help="family:size, E7, quadratic:k or custom:n:k")
        p.add_argument("--word", help="expression over X, Y, Xinv, E")
        if name == "radial":
            p.add_argument("--style", choices=("parts", "euler", "derivative"), default="parts")
        if name == "hc":
            p.add_argument("--vars", choices=("r", "a"), default="r")
        if name == "center-test":
            p.add_argument("--trials", type=int, default=20)

    p = add("smith-nf", cmd_smith_nf, "normal form in a Smith algebra or its quotient")
    p.add_argument("--word", help="expression over x, y, e and ring variables")
    p.add_argument("--n", type=int)
    p.add_argument("--f", help="f(t) for S(R, f, n); default t")
    p.add_argument("--quotient", metavar="U", help="u(t): use U(R, u, n) instead")

    p = add("oracle", cmd_oracle, "calibration table of a concrete model")
    p.add_argument("--model", default="det:2", help="det:m (m = 2, 3) or quadratic:k")
    p.add_argument("--max-a", dest="max_a", type=int, default=4)

    p = add("verify", cmd_verify, "run a named verification suite")
    p.add_argument("--theorem", required=True, choices=["all", *SUITES])
    p.add_argument("--pv")
    p.add_argument("--trials", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--f")
    p.add_argument("--model")
    p.add_argument("--max-a", dest="max_a", type=int, default=4)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CatalogError, WordError, ExprError, ParseError, NotHomogeneous,
            NotSymmetric, KeyError, ValueError) as exc:
        print(f"pvalgebra {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
