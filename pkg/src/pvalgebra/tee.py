"""The algebra generated by ``X``, ``Y``, ``Xinv`` and ``E`` inside the torus model.

``X`` is multiplication by the fundamental invariant, ``Y`` its dual
operator in derivatives, ``E`` the Euler operator. All four are fixed torus
elements once ``n`` and ``d`` are known:

    X = (1, 1),  Xinv = (-1, 1),  E = (0, b_E),  Y = (-1, b_Y)

with ``b_E = (n+1) X0 + n X1 + ... + Xn`` and
``b_Y = prod_j (X0 + ... + Xj + j d/2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import expr
from .catalog import PVType, parse_pv
from .exact_poly import Poly, divide_exact, NotDivisible
from .harish import NotSymmetric, a_vars, gamma, is_symmetric
from .torus import TorusElement, commutator, skew_mul, torus_vars


class WordError(ValueError):
    """Malformed word in the generator grammar."""


class NotHomogeneous(ValueError):
    pass


class MembershipFailure(ValueError):
    pass


class NotInT0XY(MembershipFailure):
    """A negative-degree part is not divisible by the matching power of ``b_Y``."""


@dataclass(frozen=True)
class BFunction:
    p: int
    poly: Poly  # in a0..an

    def __str__(self):
        return f"degree {self.p}: {self.poly}"


class TeeContext:
    """Generators and their b-function data for one prehomogeneous space."""

    def __init__(self, pv: PVType | str):
        if isinstance(pv, str):
            pv = parse_pv(pv)
        self.pv = pv
        self.n = pv.n
        self.d = pv.d
        self.vars = torus_vars(self.n)

    def __repr__(self):
        return f"TeeContext({self.pv.label})"

    # -- generators -------------------------------------------------------
    @cached_property
    def b_E(self) -> Poly:
        xs = Poly.gens(self.vars)
        return sum((x.scale(self.n + 1 - i) for i, x in enumerate(xs)), Poly.zero(self.vars))

    @cached_property
    def b_Y(self) -> Poly:
        xs = Poly.gens(self.vars)
        half = self.d / 2
        prod = Poly.const(1, self.vars)
        partial = Poly.zero(self.vars)
        for j, x in enumerate(xs):
            partial = partial + x
            prod = prod * (partial + j * half)
        return prod

    @cached_property
    def X(self) -> TorusElement:
        return TorusElement(self.n, {1: Poly.const(1, self.vars)})

    @cached_property
    def Xinv(self) -> TorusElement:
        return TorusElement(self.n, {-1: Poly.const(1, self.vars)})

    @cached_property
    def E(self) -> TorusElement:
        return TorusElement(self.n, {0: self.b_E})

    @cached_property
    def Y(self) -> TorusElement:
        return TorusElement(self.n, {-1: self.b_Y})

    def one(self) -> TorusElement:
        return TorusElement.scalar(self.n, 1)

    def const(self, c) -> TorusElement:
        return TorusElement.scalar(self.n, c)

    def t0(self, poly: Poly) -> TorusElement:
        """Degree-0 element with the given polynomial."""
        return TorusElement(self.n, {0: poly})

    def generator(self, name: str) -> TorusElement:
        try:
            return {"X": self.X, "Y": self.Y, "Xinv": self.Xinv, "E": self.E}[name]
        except KeyError:
            raise WordError(f"unknown generator {name!r}") from None

    def y_power_poly(self, i: int) -> Poly:
        """Polynomial of ``Y^i``: ``prod_{j<i} b_Y(X0 - j, ...)``."""
        return self._y_powers(i)

    def _y_powers(self, i):
        cache = self.__dict__.setdefault("_ycache", {0: Poly.const(1, self.vars)})
        top = max(cache)
        while top < i:
            cache[top + 1] = cache[top] * self.b_Y.shift("X0", -top)
            top += 1
        return cache[i]

    def d_ell(self, l: int) -> TorusElement:
        """``X^(1-l) Y X^l``, a degree-0 element with ``b = b_Y(a0 + l, ...)``."""
        return TorusElement(self.n, {0: self.b_Y.shift("X0", l)})

    def word(self, text: str) -> TorusElement:
        return evaluate_word(self, text)


# -- words ---------------------------------------------------------------------

def evaluate_word(ctx: TeeContext, text: str) -> TorusElement:
    """Evaluate a word over ``X``, ``Y``, ``Xinv``, ``E`` with rational scalars.

    Juxtaposition multiplies, ``[u, v]`` is the commutator and ``X^-k`` is
    ``Xinv^k``.
    """
    atoms = {"X": ctx.X, "Y": ctx.Y, "Xinv": ctx.Xinv, "E": ctx.E}

    def negative_power(base, k):
        if base == ctx.X:
            return ctx.Xinv ** k
        if base == ctx.Xinv:
            return ctx.X ** k
        raise WordError("negative powers are only defined for X and Xinv")

    try:
        return expr.evaluate(text, atoms, ctx.const, negative_power)
    except expr.ExprError as exc:
        raise WordError(str(exc)) from None


# -- grading and b-functions ---------------------------------------------------

def grade_project(u: TorusElement, p: int) -> TorusElement:
    return TorusElement(u.n, {p: u.parts[p]} if p in u.parts else {})


def bfunction(u: TorusElement) -> BFunction:
    if len(u.parts) > 1:
        raise NotHomogeneous(f"element has degrees {u.degrees()}")
    av = a_vars(u.n)
    if not u.parts:
        return BFunction(0, Poly.zero(av))
    (m, p), = u.parts.items()
    return BFunction(m, p.rename(av))


def tau(u: TorusElement) -> TorusElement:
    """Conjugation by ``X``: every polynomial gets ``X0 -> X0 - 1``."""
    return TorusElement(u.n, {m: p.shift("X0", -1) for m, p in u.parts.items()})


def tau_inv(u: TorusElement) -> TorusElement:
    return TorusElement(u.n, {m: p.shift("X0", 1) for m, p in u.parts.items()})


def hq_sequence(ctx: TeeContext, q: int) -> BFunction:
    """b-function of ``H_q`` where ``H_1 = [X, Y]`` and ``H_q = [X, [Y, H_{q-1}]]``."""
    if q < 1:
        raise ValueError("q must be at least 1")
    h = commutator(ctx.X, ctx.Y)
    for _ in range(q - 1):
        h = commutator(ctx.X, commutator(ctx.Y, h))
    return bfunction(h)


# -- membership ----------------------------------------------------------------

def _symmetric_image(ctx: TeeContext, poly: Poly) -> bool:
    return is_symmetric(gamma(poly, ctx.n, ctx.d, check=False).poly)


def is_in_T0(ctx: TeeContext, u: TorusElement) -> bool:
    if not u.parts:
        return True
    if set(u.parts) != {0}:
        return False
    return _symmetric_image(ctx, u.parts[0])


def is_central(ctx: TeeContext, u: TorusElement) -> bool:
    return is_in_T0(ctx, u) and not u.part(0).depends_on("X0")


def decompose_T(ctx: TeeContext, u: TorusElement) -> list[tuple[int, TorusElement]]:
    """``u = sum_i u_i X^i`` with each ``u_i`` of degree 0 in the symmetric part."""
    out = []
    for i in sorted(u.parts):
        coeff = ctx.t0(u.parts[i].shift("X0", -i))
        if not is_in_T0(ctx, coeff):
            raise MembershipFailure(f"coefficient of X^{i} is not in the degree-0 subalgebra: {coeff}")
        out.append((i, coeff))
    return out


def recompose_T(ctx: TeeContext, pieces) -> TorusElement:
    acc = TorusElement.zero(ctx.n)
    for i, c in pieces:
        acc = acc + skew_mul(c, ctx.X ** i if i >= 0 else ctx.Xinv ** (-i))
    return acc


def decompose_T0XY(ctx: TeeContext, u: TorusElement) -> dict:
    """``u = sum_{i>0} u_i Y^i + sum_{i>=0} v_i X^i``.

    Returns ``{"neg": [(i, u_i)], "pos": [(i, v_i)]}``.
    """
    neg, pos = [], []
    for i in sorted(u.parts):
        p = u.parts[i]
        if i >= 0:
            coeff = ctx.t0(p.shift("X0", -i))
            target = pos
        else:
            j = -i
            try:
                q = divide_exact(p, ctx.y_power_poly(j))
            except NotDivisible:
                raise NotInT0XY(f"degree {i} part is not divisible by the Y^{j} polynomial") from None
            coeff = ctx.t0(q.shift("X0", j))
            target = neg
            i = j
        if not is_in_T0(ctx, coeff):
            raise MembershipFailure(f"coefficient {coeff} is not in the degree-0 subalgebra")
        target.append((i, coeff))
    return {"neg": neg, "pos": pos}


def recompose_T0XY(ctx: TeeContext, parts: dict) -> TorusElement:
    acc = TorusElement.zero(ctx.n)
    for i, c in parts["neg"]:
        acc = acc + skew_mul(c, ctx.Y ** i)
    for i, c in parts["pos"]:
        acc = acc + skew_mul(c, ctx.X ** i)
    return acc


__all__ = [
    "BFunction", "MembershipFailure", "NotHomogeneous", "NotInT0XY", "NotSymmetric",
    "TeeContext", "WordError", "bfunction", "decompose_T", "decompose_T0XY",
    "evaluate_word", "grade_project", "hq_sequence", "is_central", "is_in_T0",
    "recompose_T", "recompose_T0XY", "tau", "tau_inv",
]
