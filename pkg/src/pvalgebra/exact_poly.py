"""Sparse multivariate polynomials over the rationals.

A :class:`Poly` lives in a *variable context*: an ordered tuple of names,
at most one of which may carry negative exponents (the Laurent variable).
Values are immutable; all arithmetic returns new objects.

>>> x0, x1 = Poly.gens(("X0", "X1"))
>>> str((x0 + 1) * (x0 - 1))
'X0^2 - 1'
>>> str((x0**2).shift("X0", 1))
'X0^2 + 2*X0 + 1'
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .kernels import affine_terms, diff_terms, mul_terms, shear_terms, shift_terms

Rational = Fraction

#: degree of the zero polynomial
NEG_INF = float("-inf")


class ContextMismatch(ValueError):
    """Operands live in different variable contexts."""


class NotDivisible(ArithmeticError):
    """Raised by :func:`divide_exact` when the divisor does not divide."""


def rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def _grlex_key(e):
    return (sum(e), e)


class Poly:
    __slots__ = ("vars", "terms", "laurent", "_hash")

    def __init__(self, vars: Iterable[str], terms: Mapping | None = None,
                 laurent: str | None = None):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise ValueError(f"duplicate variable names in {vars}")
        if laurent is not None and laurent not in vars:
            raise ValueError(f"Laurent variable {laurent!r} not in {vars}")
        li = vars.index(laurent) if laurent is not None else -1
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != len(vars):
                raise ValueError(f"exponent {e} does not match variables {vars}")
            for i, x in enumerate(e):
                if x < 0 and i != li:
                    raise ValueError(f"negative exponent on non-Laurent variable {vars[i]}")
            c = rational(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self.vars = vars
        self.laurent = laurent
        self.terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, vars, terms, laurent):
        p = object.__new__(cls)
        p.vars = vars
        p.terms = terms
        p.laurent = laurent
        p._hash = None
        return p

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, vars, laurent=None) -> "Poly":
        return cls._raw(tuple(vars), {}, laurent)

    @classmethod
    def const(cls, value, vars, laurent=None) -> "Poly":
        vars = tuple(vars)
        c = rational(value)
        return cls._raw(vars, {(0,) * len(vars): c} if c else {}, laurent)

    @classmethod
    def var(cls, name, vars, laurent=None) -> "Poly":
        vars = tuple(vars)
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls._raw(vars, {tuple(e): Fraction(1)}, laurent)

    @classmethod
    def gens(cls, vars, laurent=None) -> tuple["Poly", ...]:
        return tuple(cls.var(v, vars, laurent) for v in vars)

    # -- basic predicates -----------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vars != self.vars or other.laurent != self.laurent:
                raise ContextMismatch(f"{self.vars}/{self.laurent} vs {other.vars}/{other.laurent}")
            return other
        return Poly.const(other, self.vars, self.laurent)

    def same_context(self, other: "Poly") -> bool:
        return self.vars == other.vars and self.laurent == other.laurent

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.vars == other.vars and self.laurent == other.laurent and self.terms == other.terms
        try:
            c = rational(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.is_constant() and self.constant_term() == c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, self.laurent, frozenset(self.terms.items())))
        return self._hash

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(self.vars, out, self.laurent)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.vars, {e: -c for e, c in self.terms.items()}, self.laurent)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "Poly":
        c = rational(c)
        if not c:
            return Poly.zero(self.vars, self.laurent)
        return Poly._raw(self.vars, {e: v * c for e, v in self.terms.items()}, self.laurent)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except (TypeError, ValueError):
                return NotImplemented
        other = self._coerce(other)
        return Poly._raw(self.vars, mul_terms(self.terms, other.terms), self.laurent)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return divide_exact(self, other)
        return self.scale(1 / rational(other))

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) == 1 and self.laurent is not None:
                (e, c), = self.terms.items()
                li = self.vars.index(self.laurent)
                if all(x == 0 for i, x in enumerate(e) if i != li):
                    return Poly._raw(self.vars, {tuple(x * k for x in e): c**k}, self.laurent)
            raise ValueError("negative power of a non-unit")
        result = Poly.const(1, self.vars, self.laurent)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- structure -------------------------------------------------------
    def index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise KeyError(f"unknown variable {var!r}; context is {self.vars}") from None

    def degree_in(self, var: str):
        i = self.index(var)
        if not self.terms:
            return NEG_INF
        return max(e[i] for e in self.terms)

    def total_degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def leading(self):
        """Leading (exponent, coefficient) under graded lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def coeffs_in(self, var: str) -> dict[int, "Poly"]:
        """Collect by powers of ``var``; coefficients keep the full context."""
        i = self.index(var)
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            out.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: Poly._raw(self.vars, t, self.laurent) for k, t in out.items()}

    def depends_on(self, var: str) -> bool:
        i = self.index(var)
        return any(e[i] for e in self.terms)

    # -- transforms ------------------------------------------------------
    def shift(self, var: str, c) -> "Poly":
        """Substitute ``var -> var + c``."""
        i = self.index(var)
        if var == self.laurent:
            raise ValueError("cannot shift the Laurent variable")
        return Poly._raw(self.vars, shift_terms(self.terms, i, rational(c)), self.laurent)

    def shear(self, var: str, src: str, c=1) -> "Poly":
        """Substitute ``var -> var + c * src``."""
        i, j = self.index(var), self.index(src)
        if i == j:
            raise ValueError("shear needs two distinct variables")
        if var == self.laurent:
            raise ValueError("cannot shear the Laurent variable")
        return Poly._raw(self.vars, shear_terms(self.terms, i, j, rational(c)), self.laurent)

    def shift_all(self, offsets: Mapping[str, object]) -> "Poly":
        return self.affine([("shift", v, c) for v, c in offsets.items() if c])

    def affine(self, ops: Sequence[tuple]) -> "Poly":
        """Apply a sequence of ``("shift", var, c)`` and ``("shear", var, src, c)``
        substitutions, in order, in one pass over the terms."""
        raw = []
        for op in ops:
            i = self.index(op[1])
            if op[1] == self.laurent:
                raise ValueError("cannot move the Laurent variable")
            if op[0] == "shift":
                raw.append(("shift", i, rational(op[2])))
            elif op[0] == "shear":
                j = self.index(op[2])
                if i == j:
                    raise ValueError("shear needs two distinct variables")
                raw.append(("shear", i, j, rational(op[3])))
            else:
                raise ValueError(f"unknown substitution {op[0]!r}")
        if not raw:
            return self
        return Poly._raw(self.vars, affine_terms(self.terms, raw), self.laurent)

    def diff(self, var: str, k: int = 1) -> "Poly":
        return Poly._raw(self.vars, diff_terms(self.terms, self.index(var), k), self.laurent)

    def permute(self, perm: Sequence[int]) -> "Poly":
        """Exchange variable slots: slot ``i`` receives the exponent of slot ``perm[i]``."""
        return Poly._raw(self.vars, {tuple(e[j] for j in perm): c for e, c in self.terms.items()},
                         self.laurent)

    def rename(self, new_vars: Sequence[str], laurent: str | None = None) -> "Poly":
        new_vars = tuple(new_vars)
        if len(new_vars) != len(self.vars):
            raise ValueError("rename must preserve the number of variables")
        if laurent is None and self.laurent is not None:
            laurent = new_vars[self.vars.index(self.laurent)]
        return Poly._raw(new_vars, dict(self.terms), laurent)

    def embed(self, new_vars: Sequence[str], laurent: str | None = None) -> "Poly":
        """Re-express in a context containing every variable this poly uses."""
        new_vars = tuple(new_vars)
        pos = []
        for i, v in enumerate(self.vars):
            if v in new_vars:
                pos.append(new_vars.index(v))
            elif any(e[i] for e in self.terms):
                raise ContextMismatch(f"variable {v!r} missing from {new_vars}")
            else:
                pos.append(None)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(new_vars)
            for i, x in enumerate(e):
                if pos[i] is not None:
                    ne[pos[i]] = x
            out[tuple(ne)] = c
        return Poly(new_vars, out, laurent)

    def substitute(self, mapping: Mapping[str, "Poly"], vars=None, laurent=None) -> "Poly":
        """Compose: replace each variable by a polynomial of the target context.

        Variables absent from ``mapping`` are carried over by name. The target
        context defaults to that of the mapping values.
        """
        if vars is None:
            ref = next(iter(mapping.values()))
            vars, laurent = ref.vars, ref.laurent
        vars = tuple(vars)
        images = []
        for v in self.vars:
            if v in mapping:
                img = mapping[v]
                if not isinstance(img, Poly):
                    img = Poly.const(img, vars, laurent)
                images.append(img)
            else:
                images.append(Poly.var(v, vars, laurent))
        cache: list[dict[int, Poly]] = [{} for _ in images]
        width = len(images)

        def power(i, k):
            if k not in cache[i]:
                cache[i][k] = images[i] ** k
            return cache[i][k]

        def expand(terms, i):
            # sum over the exponent of variable i, recursing on the rest
            if i == width:
                (c,) = terms.values()
                return Poly.const(c, vars, laurent)
            groups: dict[int, dict] = {}
            for e, c in terms.items():
                groups.setdefault(e[i], {})[e] = c
            total = None
            for k, sub in groups.items():
                inner = expand(sub, i + 1)
                piece = inner * power(i, k) if k else inner
                total = piece if total is None else total + piece
            return total

        if not self.terms:
            return Poly.zero(vars, laurent)
        return expand(self.terms, 0)

    def evaluate(self, values) -> Fraction:
        """Evaluate at a point given as a mapping or a sequence in context order."""
        if isinstance(values, Mapping):
            point = [rational(values[v]) for v in self.vars]
        else:
            point = [rational(x) for x in values]
            if len(point) != len(self.vars):
                raise ValueError("point has wrong length")
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t *= x**k
            total += t
        return total

    def partial_eval(self, values: Mapping[str, object]) -> "Poly":
        """Fix some variables to rational values, keeping the context."""
        idx = {self.index(v): rational(x) for v, x in values.items()}
        out: dict = {}
        for e, c in self.terms.items():
            t = c
            ne = list(e)
            for i, x in idx.items():
                if e[i]:
                    t *= x ** e[i]
                ne[i] = 0
            if t:
                ne = tuple(ne)
                out[ne] = out.get(ne, 0) + t
        return Poly(self.vars, out, self.laurent)

    # -- text ------------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({str(self)!r}, vars={self.vars!r})"


# -- module-level operations, mirroring the method API ----------------------

def add(p: Poly, q: Poly) -> Poly:
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def shift(p: Poly, var: str, c) -> Poly:
    return p.shift(var, c)


def degree_in(p: Poly, var: str):
    return p.degree_in(var)


def divide_exact(p: Poly, q: Poly) -> Poly:
    """Exact quotient ``p / q`` or :class:`NotDivisible`.

    Uses leading-term reduction under graded lex order; if ``q`` divides
    ``p`` every intermediate remainder is again a multiple of ``q``, so a
    leading term not divisible by ``lt(q)`` certifies non-divisibility.
    """
    q = p._coerce(q)
    if not q.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if p.laurent is not None:
        li = p.vars.index(p.laurent)
        lo_p = min((e[li] for e in p.terms), default=0)
        lo_q = min(e[li] for e in q.terms)

        def lift(poly, by):
            return Poly._raw(poly.vars, {e[:li] + (e[li] - by,) + e[li + 1:]: c
                                         for e, c in poly.terms.items()}, None)

        quot = divide_exact(lift(p, lo_p), lift(q, lo_q))
        delta = lo_p - lo_q
        return Poly._raw(p.vars, {e[:li] + (e[li] + delta,) + e[li + 1:]: c
                                  for e, c in quot.terms.items()}, p.laurent)
    lq, cq = q.leading()
    rem = dict(p.terms)
    quot: dict = {}
    while rem:
        e = max(rem, key=_grlex_key)
        d = tuple(a - b for a, b in zip(e, lq))
        if any(x < 0 for x in d):
            raise NotDivisible(f"{q} does not divide {p}")
        c = rem[e] / cq
        quot[d] = c
        for qe, qc in q.terms.items():
            k = tuple(a + b for a, b in zip(d, qe))
            v = rem.get(k, 0) - c * qc
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return Poly._raw(p.vars, quot, p.laurent)


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        num, name, sym = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("sym", sym))
        pos = m.end()
    return out


class ParseError(ValueError):
    pass


def parse(text: str, vars: Sequence[str], laurent: str | None = None) -> Poly:
    """Parse the canonical rendering (and ordinary infix with parentheses).

    >>> str(parse("3/2*X0^2*X1 - 1", ("X0", "X1")))
    '3/2*X0^2*X1 - 1'
    """
    vars = tuple(vars)
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take(kind=None, val=None):
        nonlocal pos
        tok = peek()
        if tok[0] is None or (kind and tok[0] != kind) or (val and tok[1] != val):
            raise ParseError(f"unexpected {tok[1]!r} in {text!r}")
        pos += 1
        return tok

    def expr():
        sign = 1
        if peek() in (("sym", "-"), ("sym", "+")):
            sign = -1 if take()[1] == "-" else 1
        acc = term().scale(sign)
        while peek() in (("sym", "+"), ("sym", "-")):
            op = take()[1]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = power()
        while True:
            tok = peek()
            if tok == ("sym", "*"):
                take()
                acc = acc * power()
            elif tok == ("sym", "/"):
                take()
                d = power()
                if not d.is_constant() or d.is_zero():
                    raise ParseError("division only by nonzero constants")
                acc = acc.scale(1 / d.constant_term())
            elif tok[0] in ("num", "name") or tok == ("sym", "("):
                acc = acc * power()
            else:
                return acc

    def power():
        base = atom()
        if peek() == ("sym", "^"):
            take()
            neg = False
            if peek() == ("sym", "-"):
                take()
                neg = True
            k = take("num")[1]
            base = base ** (-k if neg else k)
        return base

    def atom():
        kind, val = peek()
        if kind == "num":
            take()
            return Poly.const(val, vars, laurent)
        if kind == "name":
            take()
            if val not in vars:
                raise ParseError(f"unknown variable {val!r}; expected one of {vars}")
            return Poly.var(val, vars, laurent)
        if (kind, val) == ("sym", "("):
            take()
            inner = expr()
            take("sym", ")")
            return inner
        raise ParseError(f"unexpected {val!r} in {text!r}")

    if not toks:
        raise ParseError("empty polynomial")
    result = expr()
    if pos != len(toks):
        raise ParseError(f"trailing input in {text!r}")
    return result

