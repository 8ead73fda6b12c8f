"""The quotient ``U(Z, u_XY, n)`` realized inside the torus model.

``Z`` is the ring of symmetric, shift-invariant polynomials in ``r``; it is
carried as a subring of ``Q[r0..rn]`` and pulled back to degree-0 torus
elements only when mapping into the model. ``u_XY`` is the polynomial in
``t`` over ``Z`` with ``u_XY(sigma0) = prod_i (r_i + d n / 4)``, the image of
``XY``. The map sends ``x -> X``, ``y -> Y``, ``e -> E``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .catalog import PVType, parse_pv
from .exact_poly import Poly
from .harish import (SymPoly, decompose_tau, eliminate_sigma0, gamma, gamma_inverse, is_symmetric,
                     is_tau_invariant, r_vars, recombine, sigma0)
from .samples import random_central, random_T0XY
from .smith import CoeffRing, SmithContext, SmithElement, UContext, UElement, casimir, smith_for_u
from .tee import TeeContext, bfunction, commutator, decompose_T0XY, skew_mul
from .torus import TorusElement


class IsoFailure(AssertionError):
    def __init__(self, check: str, detail: str):
        super().__init__(f"{check}: {detail}")
        self.check = check
        self.detail = detail


class CenterRing(CoeffRing):
    """Symmetric shift-invariant polynomials in ``r0..rn``."""

    def __init__(self, n: int, d):
        super().__init__(r_vars(n))
        self.n = n
        self.d = Fraction(d)

    def contains(self, p: Poly) -> bool:
        p = p.embed(self.vars)
        return is_symmetric(p) and is_tau_invariant(p)

    def element(self, value) -> Poly:
        p = super().element(value)
        if not self.contains(p):
            raise ValueError(f"{p} is not a symmetric shift invariant")
        return p

    def random_element(self, rng: random.Random, degree: int = 2, terms: int = 1) -> Poly:
        return random_central(self.n, rng, degree, terms)


@dataclass
class UxyPresentation:
    n: int
    d: Fraction
    alphas: list[SymPoly]
    u_xy: Poly  # in t, r0..rn

    def evaluate_at_sigma0(self) -> Poly:
        """Substitute ``t = r0 + ... + rn``."""
        rv = r_vars(self.n)
        return self.u_xy.substitute({"t": sigma0(self.n)}, rv)


def gamma_xy(n: int, d) -> Poly:
    rv = r_vars(n)
    shift = Fraction(d) * n / 4
    out = Poly.const(1, rv)
    for r in Poly.gens(rv):
        out = out * (r + shift)
    return out


def build_u_xy(pv: PVType | str) -> UxyPresentation:
    if isinstance(pv, str):
        pv = parse_pv(pv)
    n, d = pv.n, pv.d
    alphas = decompose_tau(gamma_xy(n, d))
    tv = ("t",) + r_vars(n)
    t = Poly.var("t", tv)
    u = Poly.zero(tv)
    for j, a in enumerate(alphas):
        u = u + a.poly.embed(tv) * t**j
    pres = UxyPresentation(n, d, alphas, u)
    if pres.evaluate_at_sigma0() != gamma_xy(n, d):
        raise IsoFailure("u_xy", "u_XY(sigma0) does not reproduce gamma(XY)")
    return pres


class IsoBridge:
    """Maps from ``U`` (and ``S``) over the center into the torus model."""

    def __init__(self, pv: PVType | str):
        self.tee = TeeContext(pv)
        self.pv = self.tee.pv
        self.n, self.d = self.pv.n, self.pv.d
        self.ring = CenterRing(self.n, self.d)
        self.presentation = build_u_xy(self.pv)
        self.uctx = UContext(self.ring, self.n, self.presentation.u_xy)

    @cached_property
    def sctx(self) -> SmithContext:
        return smith_for_u(self.uctx)

    def _coeff_image(self, p: Poly) -> TorusElement:
        """``P(e, r)`` with central ``r``-coefficients goes to ``(0, gamma^-1(P(sigma0, r)))``."""
        sym = eliminate_sigma0(p, "e")
        return self.tee.t0(gamma_inverse(sym, self.n, self.d))

    def phi(self, el: UElement) -> TorusElement:
        out = TorusElement.zero(self.n)
        for w, p in el.terms.items():
            c = self._coeff_image(p)
            if w >= 0:
                out = out + TorusElement(self.n, {w: c.part(0)})
            else:
                out = out + TorusElement(self.n, {w: self.tee.y_power_poly(-w) * c.part(0)})
        return out

    def phi_smith(self, el: SmithElement) -> TorusElement:
        """``x^j y^i P(e) -> X^j Y^i P(E)``."""
        out = TorusElement.zero(self.n)
        for (j, i), p in el.terms.items():
            out = out + self.tee.X ** j * self.tee.Y ** i * self._coeff_image(p)
        return out

    def canonical_monomials(self, bound: int) -> list[UElement]:
        """``y^l e^k`` and ``x^m e^k`` with ``power + k <= bound``."""
        out = []
        for w in range(-bound, bound + 1):
            for k in range(bound - abs(w) + 1):
                out.append(self.uctx.monomial(w, k))
        return out

    def random_element(self, rng: random.Random, terms: int = 2, max_pow: int = 2) -> UElement:
        out = self.uctx.zero()
        for _ in range(terms):
            c = self.ring.random_element(rng, 2)
            out = out + self.uctx.monomial(rng.randint(-max_pow, max_pow), rng.randint(0, 1), c)
        return out


@dataclass
class IsoReport:
    pv: str
    seed: int
    trials: int
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures and all(self.checks.values())

    def as_dict(self) -> dict:
        return {"pv": self.pv, "seed": self.seed, "trials": self.trials, "passed": self.passed,
                "checks": self.checks, "failures": self.failures, "seconds": round(self.seconds, 3)}


def verify_iso(pv: PVType | str, trials: int = 100, seed: int = 0, bound: int = 3,
               raise_on_failure: bool = False) -> IsoReport:
    """Relations, homomorphism on random pairs and an injectivity probe."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    start = time.perf_counter()
    bridge = IsoBridge(pv)
    tee, u, n = bridge.tee, bridge.uctx, bridge.n
    rep = IsoReport(bridge.pv.label, seed, trials)

    def fail(check, detail):
        rep.checks[check] = False
        rep.failures.append({"check": check, "detail": detail})
        if raise_on_failure:
            raise IsoFailure(check, detail)

    # relations among the images of x, y, e
    X, Y, E = bridge.phi(u.x), bridge.phi(u.y), bridge.phi(u.e)
    rel = {
        "phi(x) = X": X == tee.X,
        "phi(y) = Y": Y == tee.Y,
        "phi(e) = E": E == tee.E,
        "[E,X] = (n+1)X": commutator(E, X) == X.scale(n + 1),
        "[E,Y] = -(n+1)Y": commutator(E, Y) == Y.scale(-(n + 1)),
        "XY = u(E)": skew_mul(X, Y) == bridge.phi(u.poly_in_e(u.u)),
        "YX = u(E+n+1)": skew_mul(Y, X) == bridge.phi(u.poly_in_e(u.u.shift("t", n + 1))),
        "casimir maps to 0": not bridge.phi_smith(casimir(bridge.sctx)),
    }
    for name, ok in rel.items():
        rep.checks[name] = ok
        if not ok:
            fail(name, "relation does not hold in the torus model")

    # homomorphism
    rng = random.Random(seed)
    rep.checks["homomorphism"] = True
    for trial in range(trials):
        a, b = bridge.random_element(rng), bridge.random_element(rng)
        lhs = bridge.phi(a * b)
        rhs = skew_mul(bridge.phi(a), bridge.phi(b))
        if lhs != rhs:
            fail("homomorphism", f"trial {trial}: a={a}, b={b}")
            break

    # injectivity probe on canonical monomials
    monos = bridge.canonical_monomials(bound)
    images = [bridge.phi(m) for m in monos]
    ok = len(set(images)) == len(images) and all(images)
    rep.checks["injective on monomials"] = ok
    if not ok:
        fail("injective on monomials", f"repeated or zero image among {len(monos)} monomials")
    inside = True
    for m, img in zip(monos, images):
        try:
            decompose_T0XY(tee, img)
        except ValueError as exc:
            inside = False
            fail("image in polynomial part", f"{m}: {exc}")
            break
    rep.checks["image in polynomial part"] = inside
    rep.seconds = time.perf_counter() - start
    return rep


# -- canonical forms over the center ---------------------------------------------

def center_expansion(tee: TeeContext, u: TorusElement) -> dict:
    """Coefficients of ``u`` over the center: each degree-0 coefficient ``H`` of
    the polynomial-part decomposition becomes ``sum_i H_i E^i`` with central ``H_i``.

    Returns ``{"neg": [(i, [H_0, H_1, ...])], "pos": [...]}`` with the ``H_i``
    as shift-invariant ``SymPoly`` images.
    """
    parts = decompose_T0XY(tee, u)
    out = {}
    for side in ("neg", "pos"):
        out[side] = []
        for i, coeff in parts[side]:
            g = gamma(bfunction(coeff), tee.n, tee.d)
            out[side].append((i, decompose_tau(g)))
    return out


def reassemble(tee: TeeContext, expansion: dict) -> TorusElement:
    acc = TorusElement.zero(tee.n)
    for side, mono in (("neg", tee.Y), ("pos", tee.X)):
        for i, alphas in expansion[side]:
            coeff = TorusElement.zero(tee.n)
            for k, a in enumerate(alphas):
                if a:
                    if not a.is_tau_invariant:
                        raise IsoFailure("center expansion", f"coefficient {a} is not central")
                    coeff = coeff + tee.t0(gamma_inverse(a, tee.n, tee.d)) * tee.E ** k
            acc = acc + coeff * mono ** i
    return acc


def check_center_expansion(pv: PVType | str, trials: int = 20, seed: int = 0) -> bool:
    tee = TeeContext(pv)
    rng = random.Random(seed)
    for _ in range(trials):
        u = random_T0XY(tee, rng)
        if reassemble(tee, center_expansion(tee, u)) != u:
            return False
    return True


__all__ = ["CenterRing", "IsoBridge", "IsoFailure", "IsoReport", "UxyPresentation", "build_u_xy",
           "center_expansion", "check_center_expansion", "gamma_xy", "reassemble", "recombine",
           "verify_iso"]
