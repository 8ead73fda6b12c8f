"""Named verification suites.

Each suite takes a seed and returns a :class:`SuiteReport` listing every
check with its outcome and, on failure, a serialized counterexample.
"""

from __future__ import annotations

import random
import re
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .catalog import CATALOG, PVType, parse_pv
from .exact_poly import Poly
from .harish import (gamma, gamma_inverse, is_tau_invariant, jacobian_det, r_vars, sigma0,
                     tau_invariant_generators)
from .iso import build_u_xy, check_center_expansion, gamma_xy, verify_iso
from .oracle import calibrate_and_check, parse_model
from .samples import (random_central, random_degree0_word, random_noncentral, random_symmetric,
                      random_t0, random_T, random_T0XY, random_torus)
from .smith import (CoeffRing, SmithContext, casimir, casimir2, difference, pbw_independent,
                    random_smith, random_word, rewrite_word_S, solve_u, weight, word_element)
from .tee import (NotInT0XY, TeeContext, bfunction, decompose_T, decompose_T0XY, grade_project,
                  hq_sequence, is_central, recompose_T, recompose_T0XY, tau)
from .torus import TorusElement, commutator, radial_restriction, skew_mul, torus_vars


@dataclass
class SuiteReport:
    suite: str
    seed: int
    params: dict = field(default_factory=dict)
    checks: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        entry = {"name": name, "passed": bool(ok)}
        if not ok and detail:
            entry["counterexample"] = detail
        self.checks.append(entry)
        return bool(ok)

    def as_dict(self) -> dict:
        return {"suite": self.suite, "seed": self.seed, "params": self.params, "passed": self.passed,
                "checks": self.checks, "seconds": round(self.seconds, 3)}

    def summary(self) -> str:
        bad = [c for c in self.checks if not c["passed"]]
        head = f"{self.suite}: {'PASS' if not bad else 'FAIL'} ({len(self.checks) - len(bad)}/{len(self.checks)} checks, {self.seconds:.2f}s)"
        lines = [head]
        for c in bad:
            lines.append(f"  FAILED {c['name']}: {c.get('counterexample', '')}")
        return "\n".join(lines)


def _pvs(pv, max_n: int = 3) -> list[PVType]:
    if pv is None:
        return [p for p in CATALOG if p.n <= max_n]
    return [parse_pv(pv) if isinstance(pv, str) else pv]


# -- torus and T ----------------------------------------------------------------------

def bfunction_y_suite(rep: SuiteReport, pv=None, **_):
    for p in _pvs(pv):
        ctx = TeeContext(p)
        av = tuple(f"a{i}" for i in range(p.n + 1))
        a = Poly.gens(av)
        expected = Poly.const(1, av)
        for j in range(p.n + 1):
            expected = expected * (sum(a[:j + 1], Poly.zero(av)) + p.half_d * j)
        b = bfunction(ctx.Y)
        rep.check(f"{p.label}: b_Y", b.p == -1 and b.poly == expected, f"got {b}")


def grading_suite(rep: SuiteReport, pv=None, seed=0, trials=20, **_):
    rng = random.Random(seed)
    for p in _pvs(pv):
        ctx = TeeContext(p)
        ok = True
        for _ in range(trials):
            u = random_torus(p.n, rng, degrees=(-3, 3), parts=3)
            for m in u.degrees():
                h = grade_project(u, m)
                if commutator(ctx.E, h) != h.scale(m * (p.n + 1)):
                    ok = rep.check(f"{p.label}: [E,u] = p(n+1)u", False, f"u={h}")
                    break
            if not ok:
                break
        if ok:
            rep.check(f"{p.label}: [E,u] = p(n+1)u", True)
        ok = True
        for _ in range(trials):
            r = random_t0(ctx, rng)
            if skew_mul(ctx.X, r) != skew_mul(tau(r), ctx.X) or skew_mul(r, ctx.Y) != skew_mul(ctx.Y, tau(r)):
                ok = rep.check(f"{p.label}: XR = tau(R)X and RY = Y tau(R)", False, f"R={r}")
                break
        if ok:
            rep.check(f"{p.label}: XR = tau(R)X and RY = Y tau(R)", True)
        xy, yx = bfunction(skew_mul(ctx.X, ctx.Y)), bfunction(skew_mul(ctx.Y, ctx.X))
        rep.check(f"{p.label}: b_XY = b_Y and b_YX = b_Y(a0+1)",
                  xy.poly == ctx.b_Y.rename(xy.poly.vars)
                  and yx.poly == ctx.b_Y.shift("X0", 1).rename(yx.poly.vars))


def sl2_suite(rep: SuiteReport, pv=None, **_):
    """``[Y, X] = E + k/2`` in rank 2."""
    pvs = _pvs(pv) if pv is not None else [parse_pv(f"quadratic:{k}") for k in (4, 5, 6)]
    for p in pvs:
        if p.n != 1:
            rep.check(f"{p.label}: needs n = 1", False, f"n = {p.n}")
            continue
        ctx = TeeContext(p)
        got = commutator(ctx.Y, ctx.X)
        rep.check(f"{p.label}: [Y,X] = E + k/2", got == ctx.E + ctx.const(Fraction(p.k, 2)), f"got {got}")


def t0_commutative_suite(rep: SuiteReport, pv=None, seed=0, trials=50, **_):
    rng = random.Random(seed)
    for p in _pvs(pv):
        ctx = TeeContext(p)
        for t in range(trials):
            w1, w2 = random_degree0_word(rng), random_degree0_word(rng)
            c = commutator(ctx.word(w1), ctx.word(w2))
            if c:
                rep.check(f"{p.label}: degree-0 words commute", False, f"[{w1}, {w2}] = {c}")
                break
        else:
            rep.check(f"{p.label}: degree-0 words commute ({trials} pairs)", True)


def degree_growth_suite(rep: SuiteReport, pv=None, q_max=5, **_):
    pvs = _pvs(pv) if pv is not None else [parse_pv(s) for s in ("quadratic:4", "A:3", "A:4", "C:3", "E7")]
    for p in pvs:
        ctx = TeeContext(p)
        degs = [hq_sequence(ctx, q).poly.degree_in("a0") for q in range(1, q_max + 1)]
        expected = [(q - 1) * (p.n - 1) + p.n for q in range(1, q_max + 1)]
        rep.check(f"{p.label}: deg_a0 b_Hq for q=1..{q_max}", degs == expected, f"got {degs}, expected {expected}")


def rais_suite(rep: SuiteReport, pv=None, **_):
    """Radial part of ``Y`` in the determinant case against ``prod_{j=2}^m (t d/dt + j) d/dt``."""
    sizes = [parse_pv(pv).n + 1] if pv is not None else [2, 3, 4]
    for m in sizes:
        ctx = TeeContext(f"A:{m}")
        vars = torus_vars(0)
        x0 = Poly.var("X0", vars)
        op = TorusElement(0, {0: Poly.const(1, vars)})
        for j in range(2, m + 1):
            op = op * TorusElement(0, {0: x0 + j})
        op = op * TorusElement(0, {-1: x0})
        got = radial_restriction(ctx.Y)
        rep.check(f"A:{m}: radial part of Y", got == op, f"{got} != {op}")
        rep.check(f"A:{m}: radial parts of X, Xinv, E",
                  radial_restriction(ctx.X) == TorusElement(0, {1: Poly.const(1, vars)})
                  and radial_restriction(ctx.Xinv) == TorusElement(0, {-1: Poly.const(1, vars)})
                  and radial_restriction(ctx.E) == TorusElement(0, {0: x0.scale(m)}))


def decompositions_suite(rep: SuiteReport, pv=None, seed=0, trials=50, **_):
    rng = random.Random(seed)
    for p in _pvs(pv):
        ctx = TeeContext(p)
        ok_t = ok_xy = True
        for _ in range(trials):
            u = random_T(ctx, rng)
            if recompose_T(ctx, decompose_T(ctx, u)) != u:
                ok_t = rep.check(f"{p.label}: T = sum T0 X^i round trip", False, f"u={u}")
                break
        for _ in range(trials):
            u = random_T0XY(ctx, rng)
            if recompose_T0XY(ctx, decompose_T0XY(ctx, u)) != u:
                ok_xy = rep.check(f"{p.label}: T0[X,Y] round trip", False, f"u={u}")
                break
        if ok_t:
            rep.check(f"{p.label}: T = sum T0 X^i round trip ({trials})", True)
        if ok_xy:
            rep.check(f"{p.label}: T0[X,Y] round trip ({trials})", True)
        try:
            decompose_T0XY(ctx, ctx.Xinv)
            rep.check(f"{p.label}: Xinv rejected", False, "Xinv was accepted")
        except NotInT0XY:
            rep.check(f"{p.label}: Xinv rejected", True)


# -- Harish-Chandra and the center ---------------------------------------------------------

def hc_generators_suite(rep: SuiteReport, pv=None, seed=0, trials=10, **_):
    rng = random.Random(seed)
    for p in _pvs(pv):
        ctx = TeeContext(p)
        rv = r_vars(p.n)
        r = Poly.gens(rv)
        shift = p.d * p.n / 4
        images = []
        for l in range(p.n + 1):
            g = gamma(bfunction(ctx.d_ell(l)), p.n, p.d)
            expected = Poly.const(1, rv)
            for ri in r:
                expected = expected * (ri + shift + l)
            images.append(g.poly)
            rep.check(f"{p.label}: gamma(D_{l})", g.poly == expected and g.is_symmetric, f"got {g}")
        # distinct coordinates: the Jacobian carries a Vandermonde factor
        point = [Fraction(x, 7) for x in rng.sample(range(-200, 200), len(rv))]
        det = jacobian_det(images, point)
        rep.check(f"{p.label}: Jacobian of gamma(D_l) nonsingular", det != 0, f"det = 0 at {point}")
        rep.check(f"{p.label}: gamma(E) = sigma0", gamma(bfunction(ctx.E), p.n, p.d).poly == sigma0(p.n))
        ok = True
        for _ in range(trials):
            u, v = random_t0(ctx, rng), random_t0(ctx, rng)
            lhs = gamma(bfunction(skew_mul(u, v)), p.n, p.d)
            rhs = gamma(bfunction(u), p.n, p.d) * gamma(bfunction(v), p.n, p.d)
            if lhs != rhs:
                ok = rep.check(f"{p.label}: gamma multiplicative", False, f"u={u}, v={v}")
                break
        if ok:
            rep.check(f"{p.label}: gamma multiplicative", True)


def center_suite(rep: SuiteReport, pv=None, seed=0, trials=20, **_):
    rng = random.Random(seed)
    for p in _pvs(pv):
        ctx = TeeContext(p)
        central_ok, noncentral_ok = True, True
        for _ in range(trials):
            z = ctx.t0(gamma_inverse(random_central(p.n, rng), p.n, p.d))
            if not is_central(ctx, z) or commutator(z, ctx.X) or commutator(z, ctx.Y):
                central_ok = rep.check(f"{p.label}: central elements commute with X and Y", False, f"z={z}")
                break
        for _ in range(trials):
            w = ctx.t0(gamma_inverse(random_noncentral(p.n, rng), p.n, p.d))
            if is_central(ctx, w) or not commutator(w, ctx.X):
                noncentral_ok = rep.check(f"{p.label}: non-invariant elements fail with X", False, f"w={w}")
                break
        if central_ok:
            rep.check(f"{p.label}: central elements commute with X and Y ({trials})", True)
        if noncentral_ok:
            rep.check(f"{p.label}: non-invariant elements fail with X ({trials})", True)
        rep.check(f"{p.label}: expansion over the center reassembles",
                  check_center_expansion(p, trials=min(trials, 10), seed=seed))


def tau_ideals_suite(rep: SuiteReport, pv=None, seed=0, trials=10, **_):
    rng = random.Random(seed)
    for p in _pvs(pv):
        ctx = TeeContext(p)
        ok = True
        for _ in range(trials):
            g = random_symmetric(p.n, rng, 3)
            pairs = tau_invariant_generators([g])
            back = Poly.zero(r_vars(p.n))
            for a, k in pairs:
                back = back + a.poly * sigma0(p.n) ** k
            if back != g or not all(is_tau_invariant(a.poly) for a, _ in pairs):
                ok = rep.check(f"{p.label}: tau-invariant generators", False, f"g={g}")
                break
        if ok:
            rep.check(f"{p.label}: tau-invariant generators ({trials})", True)
        ok = True
        for _ in range(trials):
            z = ctx.t0(gamma_inverse(random_central(p.n, rng), p.n, p.d))
            i = rng.randint(1, 3)
            if skew_mul(ctx.X ** i, z) != skew_mul(z, ctx.X ** i) or tau(z) != z:
                ok = rep.check(f"{p.label}: X^i g = g X^i for invariant g", False, f"g={z}")
                break
        if ok:
            rep.check(f"{p.label}: X^i g = g X^i for invariant g ({trials})", True)


# -- Smith algebras ------------------------------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def smith_context(n: int = 1, f: str | None = None, rng: random.Random | None = None) -> SmithContext:
    """Context from a text ``f`` in ``t``; other identifiers become ring variables."""
    if f is None:
        rng = rng or random.Random(0)
        ring = CoeffRing(("c",))
        t = Poly.var("t", ring.t_vars)
        c = Poly.var("c", ring.t_vars)
        f_poly = t ** 2 + c * t.scale(rng.randint(1, 3)) + rng.randint(-3, 3)
        return SmithContext(ring, n, f_poly)
    names = sorted({m for m in _IDENT.findall(f) if m != "t"})
    return SmithContext(CoeffRing(tuple(names)), n, f)


def smith_pbw_suite(rep: SuiteReport, seed=0, trials=100, n=None, f=None, **_):
    rng = random.Random(seed)
    ns = [n] if n is not None else [0, 1, 2]
    for nn in ns:
        ctx = smith_context(nn, f, rng)
        tag = f"n={nn}, f={ctx.f}"
        ok = True
        for _ in range(trials):
            w = random_word(rng, rng.randint(2, 6))
            left = rewrite_word_S(ctx, w, "leftmost")
            right = rewrite_word_S(ctx, w, "rightmost")
            if left != right or left != word_element(ctx, w):
                ok = rep.check(f"{tag}: confluence", False, f"word {w}")
                break
        if ok:
            rep.check(f"{tag}: confluence ({trials} words)", True)
        monos = [ctx.y ** i * ctx.x ** j * ctx.e ** k for i in range(3) for j in range(3) for k in range(3)]
        rep.check(f"{tag}: y^i x^j e^k independent", pbw_independent(monos, rng))
        ok = True
        for _ in range(20):
            coeffs = [rng.randint(-3, 3) for _ in range(rng.randint(1, 6))]
            t = Poly.var("t", ctx.ring.t_vars)
            pt = sum((t ** i).scale(c) for i, c in enumerate(coeffs))
            P, Ps = ctx.poly_in_e(pt), ctx.poly_in_e(pt.shift("t", nn + 1))
            if P * ctx.x != ctx.x * Ps or Ps * ctx.y != ctx.y * P:
                ok = rep.check(f"{tag}: P(e)x = xP(e+n+1)", False, f"P={pt}")
                break
        if ok:
            rep.check(f"{tag}: P(e)x = xP(e+n+1) and P(e+n+1)y = yP(e)", True)
        ok = True
        for _ in range(20):
            a = random_smith(ctx, rng)
            for w, comp in weight(a).items():
                if ctx.e * comp - comp * ctx.e != comp * (w * (nn + 1)):
                    ok = rep.check(f"{tag}: weight grading", False, f"a={a}")
                    break
            if not ok:
                break
            b = random_smith(ctx, rng)
            wa, wb = weight(a), weight(b)
            for w, comp in weight(a * b).items():
                expect = ctx.zero()
                for x, ca in wa.items():
                    if w - x in wb:
                        expect = expect + ca * wb[w - x]
                if comp != expect:
                    ok = rep.check(f"{tag}: weight additivity", False, f"a={a}, b={b}")
                    break
            if not ok:
                break
        if ok:
            rep.check(f"{tag}: weight grading", True)


def casimir_suite(rep: SuiteReport, seed=0, trials=50, n=None, f=None, **_):
    rng = random.Random(seed)
    ns = [n] if n is not None else [0, 1, 2]
    for nn in ns:
        ctx = smith_context(nn, f, rng)
        tag = f"n={nn}, f={ctx.f}"
        om = casimir(ctx)
        rep.check(f"{tag}: [Omega, x] = [Omega, y] = [Omega, e] = 0",
                  not (om * ctx.x - ctx.x * om) and not (om * ctx.y - ctx.y * om)
                  and not (om * ctx.e - ctx.e * om))
        rep.check(f"{tag}: Omega2 = 2 Omega1", casimir2(ctx) == om * 2)
        ok = True
        for _ in range(trials):
            a = random_smith(ctx, rng)
            if a * om != om * a:
                ok = rep.check(f"{tag}: Omega central", False, f"a={a}")
                break
        if ok:
            rep.check(f"{tag}: Omega central ({trials})", True)
        ok = True
        ring = ctx.ring
        for _ in range(20):
            t = Poly.var("t", ring.t_vars)
            fr = Poly.zero(ring.t_vars)
            for i in range(rng.randint(0, 4) + 1):
                fr = fr + ring.random_element(rng).embed(ring.t_vars) * t ** i
            u = solve_u(fr, nn)
            if difference(u, nn) != fr or u.partial_eval({"t": 0}):
                ok = rep.check(f"{tag}: solve_u", False, f"f={fr}")
                break
        if ok:
            rep.check(f"{tag}: u(t+n+1) - u(t) = f (20 random f)", True)


# -- isomorphism and oracle ----------------------------------------------------------------------

def iso_suite(rep: SuiteReport, pv=None, seed=0, trials=100, **_):
    for p in _pvs(pv):
        pres = build_u_xy(p)
        rep.check(f"{p.label}: u_XY(sigma0) = gamma(XY)", pres.evaluate_at_sigma0() == gamma_xy(p.n, p.d))
        ctx = TeeContext(p)
        f_xy = pres.u_xy.shift("t", p.n + 1) - pres.u_xy
        rv = r_vars(p.n)
        f_at = f_xy.substitute({"t": sigma0(p.n)}, rv)
        g_yx = gamma(bfunction(skew_mul(ctx.Y, ctx.X)), p.n, p.d).poly
        g_xy = gamma(bfunction(skew_mul(ctx.X, ctx.Y)), p.n, p.d).poly
        rep.check(f"{p.label}: f_XY(sigma0) = gamma(YX) - gamma(XY)", f_at == g_yx - g_xy)
        r = verify_iso(p, trials=trials, seed=seed)
        for name, ok in r.checks.items():
            detail = "; ".join(x["detail"] for x in r.failures if x["check"] == name)
            rep.check(f"{p.label}: {name}", ok, detail)


def oracle_suite(rep: SuiteReport, model=None, max_a=4, **_):
    models = [model] if model else ["det:2", "det:3", "quadratic:4", "quadratic:5", "quadratic:6"]
    for name in models:
        r = calibrate_and_check(parse_model(name), max_a)
        bad = ", ".join(str(tuple(x["a"])) for x in r.mismatches)
        rep.check(f"{name}: one constant c = {r.calibration} explains all cells |a| <= {max_a}",
                  r.passed, f"mismatch at {bad}")


SUITES: dict[str, Callable] = {
    "bfunction-y": bfunction_y_suite,
    "grading": grading_suite,
    "sl2": sl2_suite,
    "t0-commutative": t0_commutative_suite,
    "degree-growth": degree_growth_suite,
    "rais": rais_suite,
    "decompositions": decompositions_suite,
    "hc-generators": hc_generators_suite,
    "center": center_suite,
    "tau-ideals": tau_ideals_suite,
    "smith-pbw": smith_pbw_suite,
    "casimir": casimir_suite,
    "iso": iso_suite,
    "oracle": oracle_suite,
}


def run_suite(name: str, seed: int = 0, **params) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    params = {k: v for k, v in params.items() if v is not None}
    rep = SuiteReport(name, seed, {k: str(v) for k, v in params.items()})
    start = time.perf_counter()
    SUITES[name](rep, seed=seed, **params)
    rep.seconds = time.perf_counter() - start
    return rep


__all__ = ["SUITES", "SuiteReport", "run_suite", "smith_context"]
