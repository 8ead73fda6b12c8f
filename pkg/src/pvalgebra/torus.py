"""The extended Weyl algebra of the torus, ``C[t, 1/t, t d/dt] (x) C[X1..Xn]``.

An element is a finite map ``m -> P_m(X0, ..., Xn)``; the part ``(m, P)``
stands for ``t^m`` followed by ``P`` with ``X0`` acting as ``t d/dt``. The
product of two parts is

    (m, P) . (l, Q) = (m + l, P(X0 + l, X1, ..., Xn) Q).

Degrees are counted in units of the fundamental invariant (so ``X`` has
degree 1, not ``n + 1``).
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

from .exact_poly import ContextMismatch, Poly, parse, rational

JSON_VERSION = 1


def torus_vars(n: int) -> tuple[str, ...]:
    return tuple(f"X{i}" for i in range(n + 1))


class TorusElement:
    __slots__ = ("n", "vars", "parts", "_hash")

    def __init__(self, n: int, parts: Mapping[int, Poly] | None = None):
        self.n = n
        self.vars = torus_vars(n)
        clean = {}
        for m, p in (parts or {}).items():
            if not isinstance(p, Poly):
                p = Poly.const(p, self.vars)
            elif p.vars != self.vars:
                raise ContextMismatch(f"part in {p.vars}, expected {self.vars}")
            if p:
                clean[int(m)] = p
        self.parts = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def scalar(cls, n, c):
        return cls(n, {0: Poly.const(c, torus_vars(n))})

    @classmethod
    def monomial(cls, n, m: int, poly: Poly | str | int = 1):
        if isinstance(poly, str):
            poly = parse(poly, torus_vars(n))
        return cls(n, {m: poly})

    def poly(self, text: str) -> Poly:
        """Parse a polynomial in this element's variable context."""
        return parse(text, self.vars)

    # -- structure ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.parts

    def __bool__(self):
        return bool(self.parts)

    def degrees(self) -> list[int]:
        return sorted(self.parts)

    def part(self, m: int) -> Poly:
        return self.parts.get(m, Poly.zero(self.vars))

    def _check(self, other):
        if not isinstance(other, TorusElement):
            return TorusElement.scalar(self.n, other)
        if other.n != self.n:
            raise ContextMismatch(f"rank mismatch: n={self.n} vs n={other.n}")
        return other

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TorusElement.scalar(self.n, other)
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.n == other.n and self.parts == other.parts

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.parts.items())))
        return self._hash

    # -- linear structure -------------------------------------------------
    def __add__(self, other):
        other = self._check(other)
        out = dict(self.parts)
        for m, p in other.parts.items():
            out[m] = out[m] + p if m in out else p
        return TorusElement(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return TorusElement(self.n, {m: -p for m, p in self.parts.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c) -> "TorusElement":
        if isinstance(c, Poly):
            return TorusElement(self.n, {m: p * c for m, p in self.parts.items()})
        c = rational(c)
        return TorusElement(self.n, {m: p.scale(c) for m, p in self.parts.items()})

    # -- products ---------------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return skew_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined in general")
        result = TorusElement.scalar(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- text and JSON --------------------------------------------------------
    def __str__(self):
        if not self.parts:
            return "0"
        return " + ".join(f"t^{m} (*) [{self.parts[m]}]" for m in sorted(self.parts, reverse=True))

    def __repr__(self):
        return f"TorusElement(n={self.n}, {self})"

    def to_dict(self) -> dict:
        return {"version": JSON_VERSION, "n": self.n,
                "parts": [{"m": m, "poly": str(self.parts[m])} for m in sorted(self.parts)]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "TorusElement":
        if data.get("version") != JSON_VERSION:
            raise ValueError(f"unsupported serialization version {data.get('version')!r}")
        n = int(data["n"])
        vars = torus_vars(n)
        return cls(n, {int(p["m"]): parse(p["poly"], vars) for p in data["parts"]})

    @classmethod
    def from_json(cls, text: str) -> "TorusElement":
        return cls.from_dict(json.loads(text))


def skew_mul(u: TorusElement, v: TorusElement) -> TorusElement:
    """Shift-twisted product of two torus elements."""
    v = u._check(v)
    acc: dict[int, Poly] = {}
    for m, p in u.parts.items():
        for l, q in v.parts.items():
            term = (p.shift("X0", l) if l else p) * q
            key = m + l
            acc[key] = acc[key] + term if key in acc else term
    return TorusElement(u.n, acc)


def commutator(u: TorusElement, v: TorusElement) -> TorusElement:
    return skew_mul(u, v) - skew_mul(v, u)


def lemma_word(i: int, l: int, j: int, n: int = 0) -> TorusElement:
    """``(t d/dt)^i t^l (t d/dt)^j`` computed by the product and in closed form.

    The closed form is ``sum_p C(i, p) l^(i-p) (l, X0^(p+j))``; the two are
    compared and the product is returned.
    """
    if i < 0 or j < 0:
        raise ValueError("i and j must be non-negative")
    vars = torus_vars(n)
    x0 = Poly.var("X0", vars)
    left = TorusElement(n, {0: x0**i})
    right = TorusElement(n, {0: x0**j})
    prod = left * TorusElement(n, {l: Poly.const(1, vars)}) * right
    closed = Poly.zero(vars)
    for p in range(i + 1):
        closed = closed + (x0 ** (p + j)).scale(comb(i, p) * Fraction(l) ** (i - p))
    expected = TorusElement(n, {l: closed})
    if prod != expected:
        raise AssertionError(f"closed form mismatch: {prod} vs {expected}")
    return prod


def apply_to_cell(u: TorusElement, a: Iterable) -> list[tuple[tuple[Fraction, ...], Fraction]]:
    """Action on the abstract cell indexed by ``a``.

    Each part ``(m, P)`` sends the cell ``a`` to ``(a0 + m, a1, ...)`` with
    scalar ``P(a)``. Contributions landing on the same cell are merged; zero
    scalars are dropped.
    """
    a = tuple(rational(x) for x in a)
    if len(a) != u.n + 1:
        raise ValueError(f"cell index needs {u.n + 1} entries")
    out = []
    for m in sorted(u.parts):
        val = u.parts[m].evaluate(a)
        if val:
            out.append(((a[0] + m,) + a[1:], val))
    return out


def radial_restriction(u: TorusElement) -> TorusElement:
    """Set ``X1 = ... = Xn = 0``; the result lives in the ``n = 0`` model."""
    zeros = {f"X{i}": 0 for i in range(1, u.n + 1)}
    target = torus_vars(0)
    parts = {}
    for m, p in u.parts.items():
        q = p.partial_eval(zeros) if zeros else p
        parts[m] = Poly(target, {e[:1]: c for e, c in q.terms.items()})
    return TorusElement(0, parts)


# -- renderings ------------------------------------------------------------

def _stirling2(s: int) -> list[int]:
    """Row ``S(s, 0..s)`` of Stirling numbers of the second kind."""
    row = [1]
    for k in range(1, s + 1):
        new = [0] * (k + 1)
        for j in range(1, k + 1):
            new[j] = (row[j - 1] if j - 1 < len(row) else 0) + j * (row[j] if j < len(row) else 0)
        row = new
    return row


def euler_form(u: TorusElement) -> list[tuple[int, int, Poly]]:
    """Coefficients ``A_{r,s}(X1..Xn)`` with ``u = sum A_{r,s} t^r (t d/dt)^s``."""
    out = []
    rest = torus_vars(u.n)[1:]
    for m in sorted(u.parts):
        for s, coeff in sorted(u.parts[m].coeffs_in("X0").items()):
            out.append((m, s, _drop_x0(coeff, rest)))
    return out


def derivative_form(u: TorusElement) -> list[tuple[int, int, Poly]]:
    """Coefficients ``B_{r,s}(X1..Xn)`` with ``u = sum B_{r,s} t^r (d/dt)^s``.

    Uses ``(t d/dt)^s = sum_j S(s, j) t^j (d/dt)^j``.
    """
    acc: dict[tuple[int, int], Poly] = {}
    for m, s, coeff in euler_form(u):
        for j, st in enumerate(_stirling2(s)):
            if st:
                key = (m + j, j)
                term = coeff.scale(st)
                acc[key] = acc[key] + term if key in acc else term
    return [(r, s, acc[(r, s)]) for r, s in sorted(acc) if acc[(r, s)]]


def _drop_x0(p: Poly, rest):
    return Poly(rest, {e[1:]: c for e, c in p.terms.items()})


def render(u: TorusElement, style: str = "parts") -> str:
    """Text form: ``parts`` (default), ``euler`` or ``derivative``."""
    if style == "parts":
        return str(u)
    if style == "euler":
        rows, op = euler_form(u), "(t d/dt)"
    elif style == "derivative":
        rows, op = derivative_form(u), "(d/dt)"
    else:
        raise ValueError(f"unknown rendering {style!r}")
    if not rows:
        return "0"
    pieces = []
    for r, s, c in rows:
        coeff = str(c) if c.vars else str(c.constant_term())
        pieces.append(f"[{coeff}] t^{r} {op}^{s}")
    return " + ".join(pieces)
