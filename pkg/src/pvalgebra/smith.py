"""Generalized Smith algebras ``S(R, f, n)`` and their quotients ``U(R, u, n)``.

``S`` is generated over a commutative polynomial ring ``R`` by ``x``, ``y``,
``e`` with

    e x = x e + (n+1) x,   e y = y e - (n+1) y,   y x = x y + f(e).

Elements are kept in the normal form ``sum x^j y^i P_{j,i}(e)``, with the
``e`` powers folded into a polynomial in ``e`` and the ring variables. In
``U`` the products ``x y = u(e)`` and ``y x = u(e+n+1)`` collapse every
monomial to ``x^m P(e)`` or ``y^l P(e)``; an element is then a map from the
signed weight (``+m`` or ``-l``) to a polynomial.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import expr
from .exact_poly import ContextMismatch, Poly, parse, rational


class SmithContextError(ValueError):
    pass


class CoeffRing:
    """Polynomial ring over the rationals in the given commuting variables."""

    def __init__(self, vars: Sequence[str] = ()):
        self.vars = tuple(vars)
        for v in self.vars:
            if v in ("e", "t", "x", "y"):
                raise SmithContextError(f"ring variable name {v!r} is reserved")

    def __eq__(self, other):
        return isinstance(other, CoeffRing) and other.vars == self.vars

    def __hash__(self):
        return hash(self.vars)

    def __repr__(self):
        return f"CoeffRing({', '.join(self.vars) or 'Q'})"

    @property
    def e_vars(self):
        return ("e",) + self.vars

    @property
    def t_vars(self):
        return ("t",) + self.vars

    def element(self, value) -> Poly:
        if isinstance(value, Poly):
            return value.embed(self.vars)
        if isinstance(value, str):
            return parse(value, self.vars)
        return Poly.const(value, self.vars)

    def t_poly(self, value) -> Poly:
        """Polynomial in ``t`` over the ring."""
        if isinstance(value, str):
            return parse(value, self.t_vars)
        if isinstance(value, Poly):
            return value.embed(self.t_vars)
        return Poly.const(value, self.t_vars)

    def random_element(self, rng: random.Random, degree: int = 1, terms: int = 2) -> Poly:
        out = {}
        for _ in range(terms):
            e = tuple(rng.randint(0, degree) for _ in self.vars)
            out[e] = out.get(e, 0) + rng.randint(-3, 3)
        if not self.vars:
            return Poly.const(rng.randint(-3, 3), ())
        return Poly(self.vars, out)


def _t_to_e(p: Poly) -> Poly:
    return p.rename(("e",) + p.vars[1:])


def _e_to_t(p: Poly) -> Poly:
    return p.rename(("t",) + p.vars[1:])


def _shift_e(p: Poly, c) -> Poly:
    return p.shift("e", c) if c else p


# -- the polynomial u with u(t+n+1) - u(t) = f --------------------------------

def solve_u(f: Poly, n: int) -> Poly:
    """The solution ``u`` of ``u(t+n+1) - u(t) = f(t)`` with zero constant term.

    ``f`` is a polynomial in ``t`` (first variable) with ring coefficients.
    Works by peeling off the top ``t``-degree of the remainder.
    """
    if f.vars[:1] != ("t",):
        raise SmithContextError("f must be a polynomial whose first variable is t")
    step = n + 1
    if step <= 0:
        raise SmithContextError("n + 1 must be positive")
    t = Poly.var("t", f.vars)
    u = Poly.zero(f.vars)
    rest = f
    while rest:
        top = rest.degree_in("t")
        lead = rest.coeffs_in("t")[top]
        piece = lead * t ** (top + 1)
        piece = piece.scale(Fraction(1, (top + 1) * step))
        u = u + piece
        rest = rest - (piece.shift("t", step) - piece)
    return u


def difference(u: Poly, n: int) -> Poly:
    """``u(t+n+1) - u(t)``."""
    return u.shift("t", n + 1) - u


# -- S(R, f, n) ------------------------------------------------------------------

class SmithContext:
    def __init__(self, ring: CoeffRing, n: int, f, u=None):
        """``u`` optionally fixes the additive constant of the Casimir; it must
        satisfy ``u(t+n+1) - u(t) = f``. By default ``solve_u`` is used."""
        self.ring = ring
        self.n = n
        self.step = n + 1
        self.f = ring.t_poly(f)
        self.f_e = _t_to_e(self.f)
        self._yx: dict[tuple[int, int], dict[tuple[int, int], Poly]] = {}
        self._u = None
        if u is not None:
            u = ring.t_poly(u)
            if difference(u, n) != self.f:
                raise SmithContextError("u(t+n+1) - u(t) does not equal f")
            self._u = u

    def __eq__(self, other):
        return (isinstance(other, SmithContext) and self.ring == other.ring
                and self.n == other.n and self.f == other.f)

    def __hash__(self):
        return hash((self.ring, self.n, self.f))

    def __repr__(self):
        return f"SmithContext({self.ring!r}, n={self.n}, f={self.f})"

    @property
    def u(self) -> Poly:
        if self._u is None:
            self._u = solve_u(self.f, self.n)
        return self._u

    def zero(self) -> "SmithElement":
        return SmithElement(self, {})

    def scalar(self, c) -> "SmithElement":
        return SmithElement(self, {(0, 0): self._e_poly(c)})

    def _e_poly(self, c) -> Poly:
        if isinstance(c, Poly):
            return c.embed(self.ring.e_vars)
        return Poly.const(c, self.ring.e_vars)

    def monomial(self, j: int = 0, i: int = 0, k: int = 0, coeff=1) -> "SmithElement":
        """``coeff * x^j y^i e^k``."""
        e = Poly.var("e", self.ring.e_vars)
        return SmithElement(self, {(j, i): self._e_poly(coeff) * e**k})

    @property
    def x(self):
        return self.monomial(1, 0, 0)

    @property
    def y(self):
        return self.monomial(0, 1, 0)

    @property
    def e(self):
        return self.monomial(0, 0, 1)

    def poly_in_e(self, p: Poly) -> "SmithElement":
        """Embed a polynomial in ``t`` over the ring as ``p(e)``."""
        return SmithElement(self, {(0, 0): _t_to_e(self.ring.t_poly(p))})

    def yx_normal(self, i: int, j: int) -> dict[tuple[int, int], Poly]:
        """Normal form of ``y^i x^j`` as ``{(a, b): R(e)}`` meaning ``x^a y^b R(e)``."""
        key = (i, j)
        if key in self._yx:
            return self._yx[key]
        one = Poly.const(1, self.ring.e_vars)
        if i == 0 or j == 0:
            out = {(j, i): one}
        else:
            # y^i x^j = (y^(i-1) x^j) y + (y^(i-1) x^(j-1)) F_j(e)
            fj = Poly.zero(self.ring.e_vars)
            for s in range(j):
                fj = fj + _shift_e(self.f_e, s * self.step)
            out = {}
            for (a, b), r in self.yx_normal(i - 1, j).items():
                _acc(out, (a, b + 1), _shift_e(r, -self.step))
            if fj:
                for (a, b), r in self.yx_normal(i - 1, j - 1).items():
                    _acc(out, (a, b), r * fj)
        self._yx[key] = out
        return out

    def element(self, text: str) -> "SmithElement":
        return parse_smith(self, text)


def _acc(d, key, val):
    if not val:
        return
    if key in d:
        s = d[key] + val
        if s:
            d[key] = s
        else:
            del d[key]
    else:
        d[key] = val


class SmithElement:
    """Element of ``S(R, f, n)`` in the normal form ``sum x^j y^i P(e)``."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: SmithContext, terms: Mapping[tuple[int, int], Poly]):
        self.ctx = ctx
        self.terms = {k: v for k, v in terms.items() if v}

    def _check(self, other):
        if isinstance(other, SmithElement):
            if other.ctx != self.ctx:
                raise ContextMismatch("Smith elements from different contexts")
            return other
        return self.ctx.scalar(other)

    def pbw_terms(self) -> dict[tuple[int, int, int], Poly]:
        """Expanded map ``(j, i, k) -> ring element`` for ``x^j y^i e^k``."""
        out = {}
        for (j, i), p in self.terms.items():
            for k, c in p.coeffs_in("e").items():
                out[(j, i, k)] = Poly(self.ctx.ring.vars, {e[1:]: v for e, v in c.terms.items()})
        return out

    def __eq__(self, other):
        if not isinstance(other, SmithElement):
            other = self.ctx.scalar(other)
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        return SmithElement(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return SmithElement(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        return smith_mul(self, self._check(other))

    def __rmul__(self, other):
        return smith_mul(self._check(other), self)

    def __pow__(self, k: int):
        out = self.ctx.scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (j, i, k), c in sorted(self.pbw_terms().items(), key=lambda kv: (-sum(kv[0]), kv[0])):
            mono = "*".join(s for s in (_pw("x", j), _pw("y", i), _pw("e", k)) if s)
            coeff = str(c)
            if not mono:
                pieces.append(f"({coeff})" if len(c) > 1 else coeff)
            elif c == 1:
                pieces.append(mono)
            else:
                pieces.append(f"({coeff})*{mono}" if len(c) > 1 else f"{coeff}*{mono}")
        return _join(pieces)

    def __repr__(self):
        return f"SmithElement({self})"


def _join(pieces):
    text = pieces[0]
    for p in pieces[1:]:
        text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return text


def _pw(s, k):
    return "" if k == 0 else s if k == 1 else f"{s}^{k}"


def smith_mul(a: SmithElement, b: SmithElement) -> SmithElement:
    """Product in normal form.

    ``x^j1 y^i1 P(e) . x^j2 y^i2 Q(e)``: move ``P`` right past ``x^j2``,
    reorder ``y^i1 x^j2`` with the memoized table, then move the resulting
    ``e``-polynomial right past ``y^i2``.
    """
    if a.ctx != b.ctx:
        raise ContextMismatch("Smith elements from different contexts")
    ctx = a.ctx
    step = ctx.step
    out: dict = {}
    for (j1, i1), p in a.terms.items():
        for (j2, i2), q in b.terms.items():
            moved = _shift_e(p, (j2 - i2) * step) * q
            for (c, r), rpoly in ctx.yx_normal(i1, j2).items():
                _acc(out, (j1 + c, r + i2), _shift_e(rpoly, -i2 * step) * moved)
    return SmithElement(ctx, out)


def smith_commutator(a, b):
    return a * b - b * a


def weight(a: SmithElement) -> dict[int, SmithElement]:
    """Split by weight ``j - i`` of the normal-form monomials."""
    out: dict[int, dict] = {}
    for (j, i), p in a.terms.items():
        out.setdefault(j - i, {})[(j, i)] = p
    return {w: SmithElement(a.ctx, t) for w, t in sorted(out.items())}


def casimir(ctx: SmithContext) -> SmithElement:
    """``xy - u(e)``."""
    return ctx.x * ctx.y - ctx.poly_in_e(ctx.u)


def casimir2(ctx: SmithContext) -> SmithElement:
    """``xy + yx - u(e+n+1) - u(e)``, built independently of ``casimir``."""
    u = ctx.u
    return ctx.x * ctx.y + ctx.y * ctx.x - ctx.poly_in_e(u.shift("t", ctx.step)) - ctx.poly_in_e(u)


def parse_smith(ctx: SmithContext, text: str) -> SmithElement:
    """Words over ``x``, ``y``, ``e`` with ring variables and rational scalars."""
    atoms = {"x": ctx.x, "y": ctx.y, "e": ctx.e}
    for v in ctx.ring.vars:
        atoms[v] = ctx.scalar(Poly.var(v, ctx.ring.vars))
    return expr.evaluate(text, atoms, ctx.scalar)


# -- word rewriting (brute-force oracle) ------------------------------------------

Word = tuple[str, ...]


def _f_words(ctx: SmithContext) -> list[tuple[Word, Poly]]:
    return [(("e",) * k, _ring_part(c, ctx.ring))
            for k, c in ctx.f_e.coeffs_in("e").items()]


def _ring_part(c: Poly, ring: CoeffRing) -> Poly:
    return Poly(ring.vars, {e[1:]: v for e, v in c.terms.items()})


def _rewrite_rules_S(ctx: SmithContext):
    s = ctx.step
    one = Poly.const(1, ctx.ring.vars)
    fw = _f_words(ctx)
    return {
        ("e", "x"): [(("x", "e"), one), (("x",), one.scale(s))],
        ("e", "y"): [(("y", "e"), one), (("y",), one.scale(-s))],
        ("y", "x"): [(("x", "y"), one)] + fw,
    }


def _rewrite(words: dict[Word, Poly], rules, strategy: str, limit: int = 10**6):
    """Rewrite a linear combination of words until no rule applies."""
    words = {w: c for w, c in words.items() if c}
    done: dict[Word, Poly] = {}
    steps = 0
    while words:
        w, c = words.popitem()
        positions = [p for p in range(len(w) - 1) if (w[p], w[p + 1]) in rules]
        if not positions:
            _acc(done, w, c)
            continue
        p = positions[0] if strategy == "leftmost" else positions[-1]
        for rep, rc in rules[(w[p], w[p + 1])]:
            nw = w[:p] + rep + w[p + 2:]
            _acc(words, nw, c * rc)
        steps += 1
        if steps > limit:
            raise RuntimeError("rewriting did not terminate within the step limit")
    return done


def element_words(a: SmithElement) -> dict[Word, Poly]:
    out: dict = {}
    for (j, i, k), c in a.pbw_terms().items():
        _acc(out, ("x",) * j + ("y",) * i + ("e",) * k, c)
    return out


def words_to_smith(ctx: SmithContext, words: Mapping[Word, Poly]) -> SmithElement:
    """Read back normal-form words ``x^j y^i e^k``."""
    out: dict = {}
    e = Poly.var("e", ctx.ring.e_vars)
    for w, c in words.items():
        j, i, k = w.count("x"), w.count("y"), w.count("e")
        if w != ("x",) * j + ("y",) * i + ("e",) * k:
            raise ValueError(f"word {''.join(w)} is not in normal form")
        _acc(out, (j, i), c.embed(ctx.ring.e_vars) * e**k)
    return SmithElement(ctx, out)


def rewrite_product_S(ctx: SmithContext, a: SmithElement, b: SmithElement,
                      strategy: str = "leftmost") -> SmithElement:
    """Product by concatenating words and rewriting one redex at a time."""
    wa, wb = element_words(a), element_words(b)
    prod: dict = {}
    for u, cu in wa.items():
        for v, cv in wb.items():
            _acc(prod, u + v, cu * cv)
    return words_to_smith(ctx, _rewrite(prod, _rewrite_rules_S(ctx), strategy))


def rewrite_word_S(ctx: SmithContext, word: str, strategy: str = "leftmost") -> SmithElement:
    one = Poly.const(1, ctx.ring.vars)
    return words_to_smith(ctx, _rewrite({tuple(word): one}, _rewrite_rules_S(ctx), strategy))


def random_word(rng: random.Random, length: int, letters: str = "xye") -> str:
    return "".join(rng.choice(letters) for _ in range(length))


def word_element(ctx, word: str):
    """Product of single letters using the fast multiplication."""
    out = ctx.scalar(1)
    for ch in word:
        out = out * {"x": ctx.x, "y": ctx.y, "e": ctx.e}[ch]
    return out


def random_smith(ctx: SmithContext, rng: random.Random, terms: int = 3, max_pow: int = 2,
                 ring_degree: int = 1) -> SmithElement:
    out = ctx.zero()
    for _ in range(terms):
        c = ctx.ring.random_element(rng, ring_degree) if ctx.ring.vars else rng.randint(-3, 3)
        out = out + ctx.monomial(rng.randint(0, max_pow), rng.randint(0, max_pow),
                                 rng.randint(0, max_pow), c)
    return out


def pbw_independent(elements: Sequence[SmithElement], rng: random.Random | None = None) -> bool:
    """Linear independence over ``R`` of normal forms.

    The ring variables are specialized at a random rational point; full rank
    there implies independence over ``R``.
    """
    rng = rng or random.Random(0)
    if not elements:
        return True
    ring = elements[0].ctx.ring
    point = {v: Fraction(rng.randint(-50, 50), rng.randint(1, 7)) for v in ring.vars}
    rows, cols = [], {}
    for el in elements:
        row = {}
        for key, c in el.pbw_terms().items():
            val = c.evaluate(point) if ring.vars else c.constant_term()
            if val:
                row[cols.setdefault(key, len(cols))] = val
        rows.append(row)
    return _rank(rows, len(cols)) == len(rows)


def _rank(rows, ncols) -> int:
    mat = [[r.get(c, Fraction(0)) for c in range(ncols)] for r in rows]
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][c]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][c]:
                f = mat[r][c] / mat[rank][c]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


# -- U(R, u, n) ----------------------------------------------------------------------

class UContext:
    def __init__(self, ring: CoeffRing, n: int, u):
        self.ring = ring
        self.n = n
        self.step = n + 1
        self.u = ring.t_poly(u)
        self.u_e = _t_to_e(self.u)
        self._q: dict[int, Poly] = {0: Poly.const(1, ring.e_vars)}
        self._r: dict[int, Poly] = {0: Poly.const(1, ring.e_vars)}

    def __eq__(self, other):
        return (isinstance(other, UContext) and self.ring == other.ring
                and self.n == other.n and self.u == other.u)

    def __hash__(self):
        return hash((self.ring, self.n, self.u))

    def __repr__(self):
        return f"UContext({self.ring!r}, n={self.n}, u={self.u})"

    @property
    def f(self) -> Poly:
        return difference(self.u, self.n)

    def xy_power(self, c: int) -> Poly:
        """``x^c y^c = prod_{s<c} u(e - s(n+1))``."""
        while max(self._q) < c:
            top = max(self._q)
            self._q[top + 1] = self._q[top] * _shift_e(self.u_e, -top * self.step)
        return self._q[c]

    def yx_power(self, c: int) -> Poly:
        """``y^c x^c = prod_{1<=s<=c} u(e + s(n+1))``."""
        while max(self._r) < c:
            top = max(self._r)
            self._r[top + 1] = self._r[top] * _shift_e(self.u_e, (top + 1) * self.step)
        return self._r[c]

    def zero(self):
        return UElement(self, {})

    def scalar(self, c):
        if isinstance(c, Poly):
            c = c.embed(self.ring.e_vars)
        else:
            c = Poly.const(c, self.ring.e_vars)
        return UElement(self, {0: c})

    def monomial(self, w: int, k: int = 0, coeff=1):
        """``x^w e^k`` for ``w >= 0``, ``y^-w e^k`` for ``w < 0``."""
        base = self.scalar(coeff).terms.get(0)
        if base is None:
            return self.zero()
        return UElement(self, {w: base * Poly.var("e", self.ring.e_vars) ** k})

    @property
    def x(self):
        return self.monomial(1)

    @property
    def y(self):
        return self.monomial(-1)

    @property
    def e(self):
        return self.monomial(0, 1)

    def poly_in_e(self, p: Poly) -> "UElement":
        return UElement(self, {0: _t_to_e(self.ring.t_poly(p))})

    def element(self, text: str) -> "UElement":
        atoms = {"x": self.x, "y": self.y, "e": self.e}
        for v in self.ring.vars:
            atoms[v] = self.scalar(Poly.var(v, self.ring.vars))
        return expr.evaluate(text, atoms, self.scalar)


class UElement:
    """Canonical form ``sum_l y^l A_l(e) + sum_m x^m B_m(e)`` keyed by signed weight."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: UContext, terms: Mapping[int, Poly]):
        self.ctx = ctx
        self.terms = {w: p for w, p in terms.items() if p}

    def canonical_terms(self) -> dict[tuple[str, int, int], Poly]:
        """``("y", l, k)`` or ``("x", m, k)`` to ring coefficient."""
        out = {}
        for w, p in self.terms.items():
            side, power = ("x", w) if w >= 0 else ("y", -w)
            for k, c in p.coeffs_in("e").items():
                out[(side, power, k)] = _ring_part(c, self.ctx.ring)
        return out

    def _check(self, other):
        if isinstance(other, UElement):
            if other.ctx != self.ctx:
                raise ContextMismatch("U elements from different contexts")
            return other
        return self.ctx.scalar(other)

    def __eq__(self, other):
        if not isinstance(other, UElement):
            other = self.ctx.scalar(other)
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        return UElement(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return UElement(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        return u_mul(self, self._check(other))

    def __rmul__(self, other):
        return u_mul(self._check(other), self)

    def __pow__(self, k: int):
        out = self.ctx.scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (side, p, k), c in sorted(self.canonical_terms().items(),
                                      key=lambda kv: (kv[0][0] != "y", kv[0][1], kv[0][2])):
            mono = "*".join(s for s in (_pw(side, p), _pw("e", k)) if s)
            coeff = str(c)
            if not mono:
                pieces.append(f"({coeff})" if len(c) > 1 else coeff)
            elif c == 1:
                pieces.append(mono)
            else:
                pieces.append(f"({coeff})*{mono}" if len(c) > 1 else f"{coeff}*{mono}")
        return _join(pieces)

    def __repr__(self):
        return f"UElement({self})"


def _z_product(ctx: UContext, w1: int, w2: int) -> tuple[int, Poly]:
    """``z^w1 z^w2 = z^w P(e)`` where ``z^w`` is ``x^w`` or ``y^-w``."""
    if w1 >= 0 and w2 >= 0 or w1 <= 0 and w2 <= 0:
        return w1 + w2, Poly.const(1, ctx.ring.e_vars)
    if w1 > 0:  # x^a y^b
        a, b = w1, -w2
        if a >= b:
            return a - b, ctx.xy_power(b)
        return a - b, _shift_e(ctx.xy_power(a), -(b - a) * ctx.step)
    a, b = -w1, w2  # y^a x^b
    if a >= b:
        return b - a, ctx.yx_power(b)
    return b - a, _shift_e(ctx.yx_power(a), (b - a) * ctx.step)


def u_mul(a: UElement, b: UElement) -> UElement:
    """``z^w1 P(e) . z^w2 Q(e) = z^w1 z^w2 P(e + w2(n+1)) Q(e)``."""
    if a.ctx != b.ctx:
        raise ContextMismatch("U elements from different contexts")
    ctx = a.ctx
    out: dict = {}
    for w1, p in a.terms.items():
        for w2, q in b.terms.items():
            w, r = _z_product(ctx, w1, w2)
            _acc(out, w, r * _shift_e(p, w2 * ctx.step) * q)
    return UElement(ctx, out)


def _rewrite_rules_U(ctx: UContext):
    s = ctx.step
    one = Poly.const(1, ctx.ring.vars)
    u_words = [(("e",) * k, _ring_part(c, ctx.ring)) for k, c in ctx.u_e.coeffs_in("e").items()]
    u_shift = _shift_e(ctx.u_e, s)
    us_words = [(("e",) * k, _ring_part(c, ctx.ring)) for k, c in u_shift.coeffs_in("e").items()]
    return {
        ("e", "x"): [(("x", "e"), one), (("x",), one.scale(s))],
        ("e", "y"): [(("y", "e"), one), (("y",), one.scale(-s))],
        ("x", "y"): u_words,
        ("y", "x"): us_words,
    }


def words_to_u(ctx: UContext, words: Mapping[Word, Poly]) -> UElement:
    out: dict = {}
    e = Poly.var("e", ctx.ring.e_vars)
    for w, c in words.items():
        m, l, k = w.count("x"), w.count("y"), w.count("e")
        if m and l:
            raise ValueError(f"word {''.join(w)} is not canonical")
        head = ("x",) * m + ("y",) * l
        if w != head + ("e",) * k:
            raise ValueError(f"word {''.join(w)} is not canonical")
        _acc(out, m - l, c.embed(ctx.ring.e_vars) * e**k)
    return UElement(ctx, out)


def u_element_words(a: UElement) -> dict[Word, Poly]:
    out: dict = {}
    for (side, p, k), c in a.canonical_terms().items():
        _acc(out, (side,) * p + ("e",) * k, c)
    return out


def rewrite_product_U(ctx: UContext, a: UElement, b: UElement, strategy: str = "leftmost") -> UElement:
    wa, wb = u_element_words(a), u_element_words(b)
    prod: dict = {}
    for s, cs in wa.items():
        for v, cv in wb.items():
            _acc(prod, s + v, cs * cv)
    return words_to_u(ctx, _rewrite(prod, _rewrite_rules_U(ctx), strategy))


def rewrite_word_U(ctx: UContext, word: str, strategy: str = "leftmost") -> UElement:
    one = Poly.const(1, ctx.ring.vars)
    return words_to_u(ctx, _rewrite({tuple(word): one}, _rewrite_rules_U(ctx), strategy))


def random_u(ctx: UContext, rng: random.Random, terms: int = 3, max_pow: int = 2,
             ring_degree: int = 1) -> UElement:
    out = ctx.zero()
    for _ in range(terms):
        c = ctx.ring.random_element(rng, ring_degree) if ctx.ring.vars else rng.randint(-3, 3)
        out = out + ctx.monomial(rng.randint(-max_pow, max_pow), rng.randint(0, max_pow), c)
    return out


def project(uctx: UContext, a: SmithElement) -> UElement:
    """Image of a Smith element in the quotient by ``xy - u(e)``."""
    if a.ctx.ring != uctx.ring or a.ctx.n != uctx.n:
        raise ContextMismatch("projection between incompatible contexts")
    out = uctx.zero()
    for (j, i), p in a.terms.items():
        out = out + uctx.monomial(j) * uctx.monomial(-i) * UElement(uctx, {0: p})
    return out


def injectivity_probe(ctx: UContext, s: int, polys: Iterable[Poly], side: str = "x") -> bool:
    """``P -> x^s P(e)`` (or ``y^s P(e)``) sends the given polynomials to distinct nonzero forms."""
    seen = set()
    base = ctx.monomial(s if side == "x" else -s)
    for p in polys:
        img = base * ctx.poly_in_e(p)
        if not img:
            return False
        key = frozenset(img.terms.items())
        if key in seen:
            return False
        seen.add(key)
    return True


def smith_for_u(uctx: UContext) -> SmithContext:
    """The Smith algebra whose quotient is ``uctx``: ``f(t) = u(t+n+1) - u(t)``."""
    return SmithContext(uctx.ring, uctx.n, uctx.f, uctx.u)


__all__ = [
    "CoeffRing", "SmithContext", "SmithElement", "UContext", "UElement", "casimir", "casimir2",
    "difference", "injectivity_probe", "parse_smith", "pbw_independent", "project",
    "random_smith", "random_u", "random_word", "rational", "rewrite_product_S",
    "rewrite_product_U", "rewrite_word_S", "rewrite_word_U", "smith_commutator", "smith_for_u",
    "smith_mul", "solve_u", "u_mul", "weight", "word_element",
]
