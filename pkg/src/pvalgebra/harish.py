"""Symmetric polynomials in the ``r`` coordinates.

``r_i = a_0 + ... + a_i`` turns a b-function into a polynomial in
``r_0..r_n``; shifting by ``-rho`` gives the Harish-Chandra image, which is
``S_{n+1}``-symmetric exactly for degree-0 elements of the algebra. The
shift ``r_i -> r_i + 1`` on all coordinates at once is the action of
conjugation by ``X``; its invariants are the images of central elements.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exact_poly import ContextMismatch, Poly, rational


class NotSymmetric(ValueError):
    pass


def r_vars(n: int) -> tuple[str, ...]:
    return tuple(f"r{i}" for i in range(n + 1))


def a_vars(n: int) -> tuple[str, ...]:
    return tuple(f"a{i}" for i in range(n + 1))


def rho(n: int, d) -> tuple[Fraction, ...]:
    """``rho_i = (d/4)(2i - n)``."""
    q = rational(d) / 4
    return tuple(q * (2 * i - n) for i in range(n + 1))


def _rank_of(p: Poly) -> int:
    return len(p.vars) - 1


def _as_a(p: Poly) -> Poly:
    """Accept polynomials written in ``X0..Xn`` or ``a0..an``."""
    n = _rank_of(p)
    if p.vars == a_vars(n):
        return p
    if p.vars == tuple(f"X{i}" for i in range(n + 1)):
        return p.rename(a_vars(n))
    raise ContextMismatch(f"expected a- or X-variables, got {p.vars}")


def a_to_r(p: Poly) -> Poly:
    """Substitute ``a0 = r0`` and ``a_i = r_i - r_{i-1}``."""
    p = _as_a(p)
    n = _rank_of(p)
    rv = r_vars(n)
    return p.rename(rv).affine([("shear", rv[i], rv[i - 1], -1) for i in range(1, n + 1)])


def r_to_a(p: Poly) -> Poly:
    """Substitute ``r_i = a0 + ... + a_i``."""
    n = _rank_of(p)
    if p.vars != r_vars(n):
        raise ContextMismatch(f"expected r-variables, got {p.vars}")
    av = a_vars(n)
    return p.rename(av).affine([("shear", av[i], av[i - 1], 1) for i in range(n, 0, -1)])


def eliminate_sigma0(p: Poly, var: str) -> Poly:
    """Substitute ``var = r0 + ... + rn`` and drop ``var`` from the context."""
    k = p.index(var)
    p = p.affine([("shear", var, v, 1) for v in p.vars if v != var])
    rest = p.vars[:k] + p.vars[k + 1:]
    return Poly(rest, {e[:k] + e[k + 1:]: c for e, c in p.terms.items() if e[k] == 0})


def shift_r(p: Poly, offsets: Sequence) -> Poly:
    return p.shift_all({f"r{i}": c for i, c in enumerate(offsets)})


def is_symmetric(p: Poly) -> bool:
    """Invariance under every adjacent transposition ``r_i <-> r_{i+1}``."""
    k = len(p.vars)
    for i in range(k - 1):
        perm = list(range(k))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        if p.permute(perm) != p:
            return False
    return True


def tau_shift(p: Poly, k=1) -> Poly:
    """``P(r0 + k, ..., rn + k)``."""
    return shift_r(p, [k] * len(p.vars))


def is_tau_invariant(p: Poly) -> bool:
    return tau_shift(p) == p


def sigma0(n: int) -> Poly:
    return sum(Poly.gens(r_vars(n)), Poly.zero(r_vars(n)))


class SymPoly:
    """A polynomial in ``r0..rn`` with cached symmetry predicates."""

    __slots__ = ("n", "poly", "_sym", "_tau")

    def __init__(self, poly: Poly):
        n = _rank_of(poly)
        if poly.vars != r_vars(n):
            raise ContextMismatch(f"expected r-variables, got {poly.vars}")
        self.n = n
        self.poly = poly
        self._sym = None
        self._tau = None

    @classmethod
    def parse(cls, text: str, n: int) -> "SymPoly":
        from .exact_poly import parse
        return cls(parse(text, r_vars(n)))

    @property
    def is_symmetric(self) -> bool:
        if self._sym is None:
            self._sym = is_symmetric(self.poly)
        return self._sym

    @property
    def is_tau_invariant(self) -> bool:
        if self._tau is None:
            self._tau = is_tau_invariant(self.poly)
        return self._tau

    def _other(self, other):
        return other.poly if isinstance(other, SymPoly) else other

    def __add__(self, other):
        return SymPoly(self.poly + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return SymPoly(self.poly - self._other(other))

    def __neg__(self):
        return SymPoly(-self.poly)

    def __mul__(self, other):
        return SymPoly(self.poly * self._other(other))

    __rmul__ = __mul__

    def __pow__(self, k):
        return SymPoly(self.poly**k)

    def __eq__(self, other):
        if isinstance(other, SymPoly):
            return self.poly == other.poly
        return self.poly == other

    def __hash__(self):
        return hash(self.poly)

    def __bool__(self):
        return bool(self.poly)

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"SymPoly({self.poly})"


def gamma(b, n: int, d, check: bool = True) -> SymPoly:
    """Harish-Chandra image ``r -> b(r - rho)`` of a degree-0 b-function.

    ``b`` may be a bare polynomial in ``a``/``X`` variables or an object with
    ``p`` and ``poly`` attributes.
    """
    if hasattr(b, "poly") and hasattr(b, "p"):
        if b.p != 0:
            raise ValueError(f"gamma needs a degree-0 b-function, got degree {b.p}")
        b = b.poly
    a = _as_a(b)
    if _rank_of(a) != n:
        raise ContextMismatch(f"polynomial has rank {_rank_of(a)}, expected n={n}")
    rv = r_vars(n)
    ops = [("shear", rv[i], rv[i - 1], -1) for i in range(1, n + 1)]
    ops += [("shift", v, -x) for v, x in zip(rv, rho(n, d)) if x]
    img = SymPoly(a.rename(rv).affine(ops))
    if check and not img.is_symmetric:
        raise NotSymmetric(f"gamma image {img} is not symmetric")
    return img


def gamma_inverse(s, n: int, d, vars: str = "X") -> Poly:
    """Polynomial ``b`` in ``a`` (or ``X``) variables with ``gamma(b) = s``."""
    poly = s.poly if isinstance(s, SymPoly) else s
    if poly.vars != r_vars(n):
        raise ContextMismatch(f"expected r-variables for n={n}, got {poly.vars}")
    av = a_vars(n)
    ops = [("shift", v, x) for v, x in zip(av, rho(n, d)) if x]
    ops += [("shear", av[i], av[i - 1], 1) for i in range(n, 0, -1)]
    a = poly.rename(av).affine(ops)
    if vars == "X":
        return a.rename(tuple(f"X{i}" for i in range(n + 1)))
    return a


def decompose_tau(s, require_symmetric: bool = True) -> list[SymPoly]:
    """Write ``s = sum_i alpha_i sigma0^i`` with every ``alpha_i`` shift invariant.

    ``alpha_0`` is ``s`` restricted to the hyperplane ``sigma0 = 0`` and
    extended constantly along ``(1, ..., 1)``; the remainder is divisible by
    ``sigma0`` and the construction recurses on the quotient.
    """
    poly = s.poly if isinstance(s, SymPoly) else s
    n = _rank_of(poly)
    if require_symmetric and not is_symmetric(poly):
        raise NotSymmetric(f"{poly} is not symmetric")
    rv = r_vars(n)
    sig = sigma0(n)
    r = Poly.gens(rv)
    proj = {v: r[i] - sig.scale(Fraction(1, n + 1)) for i, v in enumerate(rv)}
    out = []
    rest = poly
    while rest:
        alpha = rest.substitute(proj, rv)
        out.append(SymPoly(alpha))
        rest = (rest - alpha) / sig
    return out or [SymPoly(Poly.zero(rv))]


def recombine(alphas: Sequence[SymPoly]) -> SymPoly:
    n = alphas[0].n
    sig = sigma0(n)
    acc = Poly.zero(r_vars(n))
    for a in reversed(alphas):
        acc = acc * sig + a.poly
    return SymPoly(acc)


def tau_invariant_generators(gens: Sequence) -> list[tuple[SymPoly, int]]:
    """Shift-invariant generators paired with their ``sigma0`` powers.

    Each input ``P`` equals ``sum alpha * sigma0^power`` over the pairs it
    contributes; both facts are asserted before returning.
    """
    out = []
    for g in gens:
        alphas = decompose_tau(g)
        pairs = [(a, i) for i, a in enumerate(alphas) if a]
        for a, _ in pairs:
            if not a.is_tau_invariant or not a.is_symmetric:
                raise AssertionError(f"generator {a} is not a symmetric shift invariant")
        poly = g.poly if isinstance(g, SymPoly) else g
        if recombine(alphas).poly != poly:
            raise AssertionError(f"decomposition of {poly} does not recombine")
        out.extend(pairs)
    return out


def center_split(b, n: int, d) -> tuple[SymPoly, SymPoly]:
    """Split ``gamma(b)`` as ``z + rest`` with ``z`` shift invariant and ``rest`` in ``sigma0 * C[r]``."""
    g = gamma(b, n, d)
    z = decompose_tau(g)[0]
    return z, g - z


def jacobian_det(polys: Sequence[Poly], point: Sequence) -> Fraction:
    """Exact Jacobian determinant of ``polys`` with respect to their variables at ``point``."""
    if not polys:
        return Fraction(1)
    vars = polys[0].vars
    if len(polys) != len(vars):
        raise ValueError("need as many polynomials as variables")
    rows = [[p.diff(v).evaluate(point) for v in vars] for p in polys]
    return _det(rows)


def _det(rows) -> Fraction:
    m = [list(map(Fraction, r)) for r in rows]
    size = len(m)
    det = Fraction(1)
    for c in range(size):
        piv = next((r for r in range(c, size) if m[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, size):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, size):
                    m[r][k] -= f * m[c][k]
    return det
