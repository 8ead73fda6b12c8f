"""Brute-force ground truth on actual polynomials.

Differential operators with polynomial coefficients act on ``Q[x_1..x_k]``
for two concrete families: a split quadratic form and the ``m x m``
determinant. Applying ``Y`` to the cells ``Delta0^a0 Delta1^a1`` measures the
b-function directly, which is then compared with the closed form used by the
torus model up to a single fitted constant.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .catalog import PVType, builtin, quadratic
from .exact_poly import ContextMismatch, Poly
from .tee import TeeContext


class NotProportional(ArithmeticError):
    """``Y`` applied to a cell is not a scalar multiple of the lowered cell."""


class DiffOp:
    """``sum_alpha c_alpha(x) d^alpha`` with derivatives written to the right."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple, Poly] | None = None):
        self.vars = tuple(vars)
        self.terms: dict[tuple, Poly] = {}
        for alpha, c in (terms or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != len(self.vars) or min(alpha, default=0) < 0:
                raise ValueError(f"bad derivative exponent {alpha}")
            c = c if isinstance(c, Poly) else Poly.const(c, self.vars)
            if c.vars != self.vars:
                raise ContextMismatch(f"coefficient context {c.vars} != {self.vars}")
            if alpha in self.terms:
                c = self.terms.pop(alpha) + c
            if c:
                self.terms[alpha] = c

    @classmethod
    def constant(cls, symbol: Poly) -> "DiffOp":
        """``P(d)`` for a polynomial ``P`` written in the same variables."""
        return cls(symbol.vars, {e: Poly.const(c, symbol.vars) for e, c in symbol.terms.items()})

    @classmethod
    def euler(cls, vars: Sequence[str]) -> "DiffOp":
        """``sum_i x_i d_i``."""
        vars = tuple(vars)
        out = {}
        for i, v in enumerate(vars):
            alpha = tuple(int(j == i) for j in range(len(vars)))
            out[alpha] = Poly.var(v, vars)
        return cls(vars, out)

    def order(self) -> int:
        return max((sum(a) for a in self.terms), default=-1)

    def apply(self, p: Poly) -> Poly:
        if p.vars != self.vars:
            raise ContextMismatch(f"operator context {self.vars} != {p.vars}")
        cache = {(0,) * len(self.vars): p}

        def derived(alpha):
            if alpha in cache:
                return cache[alpha]
            i = max(j for j, k in enumerate(alpha) if k)
            lower = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]
            out = derived(lower).diff(self.vars[i])
            cache[alpha] = out
            return out

        acc = Poly.zero(self.vars)
        for alpha, c in self.terms.items():
            dp = derived(alpha)
            if dp:
                acc = acc + (c * dp if not c.is_constant() else dp.scale(c.constant_term()))
        return acc

    __call__ = apply

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for alpha, c in sorted(self.terms.items(), reverse=True):
            d = "*".join(f"d{v}" + (f"^{k}" if k > 1 else "") for v, k in zip(self.vars, alpha) if k)
            pieces.append(f"({c})" + (f"*{d}" if d else ""))
        return " + ".join(pieces)


@dataclass
class ConcreteModel:
    name: str
    pv: PVType
    vars: tuple[str, ...]
    delta0: Poly
    delta1: Poly
    y_op: DiffOp
    e_op: DiffOp
    calibration: Fraction | None = None

    def cell(self, a0: int, a1: int) -> Poly:
        return self.delta0 ** a0 * self.delta1 ** a1

    def formula(self, a0: int, a1: int) -> Fraction:
        """``b_Y`` of the torus model at ``(a0, a1, 0, ..., 0)``."""
        ctx = TeeContext(self.pv)
        point = [a0, a1] + [0] * (self.pv.n - 1) if self.pv.n >= 1 else [a0]
        return ctx.b_Y.evaluate(point)


def quadratic_model(k: int) -> ConcreteModel:
    """Split form ``x1 x2 + x3 x4 + ...`` (plus ``x_k^2`` for odd ``k``).

    ``Y`` is the dual form in the derivatives: the inverse of the Gram matrix
    turns each hyperbolic pair into ``4 d_i d_j`` and the square into ``d_k^2``.
    """
    if k < 3:
        raise ValueError("the quadratic model needs k >= 3")
    vars = tuple(f"x{i}" for i in range(1, k + 1))
    x = Poly.gens(vars)
    q = Poly.zero(vars)
    dual: dict[tuple, Fraction] = {}
    for i in range(0, k - 1, 2):
        q = q + x[i] * x[i + 1]
        alpha = [0] * k
        alpha[i] = alpha[i + 1] = 1
        dual[tuple(alpha)] = Fraction(4)
    if k % 2:
        q = q + x[k - 1] ** 2
        alpha = [0] * k
        alpha[k - 1] = 2
        dual[tuple(alpha)] = Fraction(1)
    y_op = DiffOp(vars, {a: Poly.const(c, vars) for a, c in dual.items()})
    return ConcreteModel(f"quadratic:{k}", quadratic(k), vars, q, x[0], y_op, DiffOp.euler(vars))


def _det(rows: Sequence[Sequence[Poly]], zero: Poly) -> Poly:
    m = len(rows)
    out = zero
    for perm in itertools.permutations(range(m)):
        sign = 1
        for i in range(m):
            for j in range(i + 1, m):
                if perm[i] > perm[j]:
                    sign = -sign
        term = rows[0][perm[0]]
        for i in range(1, m):
            term = term * rows[i][perm[i]]
        out = out + term if sign > 0 else out - term
    return out


def det_model(m: int) -> ConcreteModel:
    """``Delta0 = det`` on ``m x m`` matrices, ``Delta1`` the upper-left ``(m-1)``-minor,
    ``Y = det(d)``."""
    if not 2 <= m <= 3:
        raise ValueError("the determinant model is limited to 2 <= m <= 3")
    vars = tuple(f"x{i}{j}" for i in range(1, m + 1) for j in range(1, m + 1))
    g = Poly.gens(vars)
    rows = [[g[i * m + j] for j in range(m)] for i in range(m)]
    zero = Poly.zero(vars)
    delta0 = _det(rows, zero)
    delta1 = _det([r[:m - 1] for r in rows[:m - 1]], zero)
    return ConcreteModel(f"det:{m}", builtin("A", m), vars, delta0, delta1,
                         DiffOp.constant(delta0), DiffOp.euler(vars))


def parse_model(text: str) -> ConcreteModel:
    """``det:m`` or ``quadratic:k``."""
    name, _, size = text.partition(":")
    try:
        size = int(size)
    except ValueError:
        raise ValueError(f"model needs an integer size, got {text!r}") from None
    if name == "det":
        return det_model(size)
    if name in ("quadratic", "quad"):
        return quadratic_model(size)
    raise ValueError(f"unknown model {name!r}; expected det:m or quadratic:k")


def empirical_b(model: ConcreteModel, a: Sequence[int]) -> Fraction:
    """Scalar ``b`` with ``Y(Delta0^a0 Delta1^a1) = b * Delta0^(a0-1) Delta1^a1``."""
    a0, a1 = (list(a) + [0, 0])[:2]
    if a0 < 0 or a1 < 0:
        raise ValueError("cell exponents must be non-negative")
    image = model.y_op.apply(model.cell(a0, a1))
    if a0 == 0:
        if image:
            raise NotProportional(f"Y does not kill the harmonic cell a={tuple(a)}")
        return Fraction(0)
    target = model.cell(a0 - 1, a1)
    if not image:
        return Fraction(0)
    e, c = target.leading()
    b = image.terms.get(e, Fraction(0)) / c
    if image != target.scale(b):
        raise NotProportional(f"Y(cell {tuple(a)}) is not a multiple of the lowered cell")
    return b


def euler_check(model: ConcreteModel, a: Sequence[int]) -> bool:
    """``E(Delta0^a0 Delta1^a1) = ((n+1) a0 + n a1) Delta0^a0 Delta1^a1``."""
    a0, a1 = (list(a) + [0, 0])[:2]
    n = model.pv.n
    cell = model.cell(a0, a1)
    return model.e_op.apply(cell) == cell.scale((n + 1) * a0 + n * a1)


@dataclass
class CalibrationReport:
    model: str
    max_a: int
    calibration: Fraction | None
    rows: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.calibration is not None and all(r["match"] and r["euler"] for r in self.rows)

    @property
    def mismatches(self) -> list[dict]:
        return [r for r in self.rows if not (r["match"] and r["euler"])]

    def as_dict(self) -> dict:
        return {"model": self.model, "max_a": self.max_a, "passed": self.passed,
                "calibration": None if self.calibration is None else str(self.calibration),
                "rows": [{**r, "a": list(r["a"]), "empirical": str(r["empirical"]),
                          "predicted": str(r["predicted"])} for r in self.rows],
                "seconds": round(self.seconds, 3)}

    def table(self) -> str:
        lines = [f"model {self.model}  c = {self.calibration}",
                 f"{'a':>8}  {'empirical':>12}  {'c*b_Y(a)':>12}  match"]
        for r in self.rows:
            lines.append(f"{str(tuple(r['a'])):>8}  {str(r['empirical']):>12}  "
                         f"{str(r['predicted']):>12}  {'yes' if r['match'] and r['euler'] else 'NO'}")
        return "\n".join(lines)


def calibrate_and_check(model: ConcreteModel, max_a: int = 4, cells: Sequence | None = None) -> CalibrationReport:
    """Fit ``c`` on ``a = (1, 0)`` and check ``empirical_b(a) = c * b_Y(a)`` on
    every cell with ``a0 + a1 <= max_a`` (or on the given cells)."""
    if max_a < 2 and cells is None:
        raise ValueError("max_a must be at least 2")
    start = time.perf_counter()
    base = model.formula(1, 0)
    c = empirical_b(model, (1, 0)) / base if base else None
    model.calibration = c
    rep = CalibrationReport(model.name, max_a, c)
    if cells is None:
        cells = [(a0, s - a0) for s in range(max_a + 1) for a0 in range(s, -1, -1)]
    for a in cells:
        try:
            emp = empirical_b(model, a)
            proportional = True
        except NotProportional:
            emp, proportional = None, False
        pred = None if c is None else c * model.formula(*a)
        rep.rows.append({"a": tuple(a), "empirical": emp, "predicted": pred,
                         "match": proportional and emp == pred, "euler": euler_check(model, a)})
    rep.seconds = time.perf_counter() - start
    return rep


__all__ = ["CalibrationReport", "ConcreteModel", "DiffOp", "NotProportional", "calibrate_and_check",
           "det_model", "empirical_b", "euler_check", "parse_model", "quadratic_model"]
