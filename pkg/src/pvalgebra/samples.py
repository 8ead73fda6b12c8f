"""Seeded random generators for the property checks."""

from __future__ import annotations

import random
from fractions import Fraction

from .exact_poly import Poly
from .harish import gamma_inverse, is_tau_invariant, r_vars, sigma0
from .tee import TeeContext
from .torus import TorusElement, torus_vars


def small_rational(rng: random.Random, bound: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 3))


def random_poly(vars, rng: random.Random, degree: int = 2, terms: int = 3) -> Poly:
    out = {}
    for _ in range(terms):
        left = degree
        e = []
        for _ in vars:
            k = rng.randint(0, left)
            e.append(k)
            left -= k
        rng.shuffle(e)
        out[tuple(e)] = small_rational(rng)
    return Poly(vars, out)


def random_torus(n: int, rng: random.Random, degrees=(-2, 2), parts: int = 2, degree: int = 2) -> TorusElement:
    vars = torus_vars(n)
    return TorusElement(n, {rng.randint(*degrees): random_poly(vars, rng, degree) for _ in range(parts)})


def power_sums(n: int, top: int, centered: bool = False) -> list[Poly]:
    """``p_k(r)`` for ``k = 1..top``, optionally of ``r - mean(r)``."""
    rv = r_vars(n)
    r = Poly.gens(rv)
    if centered:
        mean = sigma0(n).scale(Fraction(1, n + 1))
        r = tuple(x - mean for x in r)
    out = []
    for k in range(1, top + 1):
        out.append(sum((x**k for x in r), Poly.zero(rv)))
    return out


def _combine(basis, rng, degree, terms, n):
    rv = r_vars(n)
    acc = Poly.const(small_rational(rng), rv)
    for _ in range(terms):
        mono = Poly.const(small_rational(rng), rv)
        budget = degree
        while budget > 0:
            k = rng.randint(1, min(budget, len(basis)))
            mono = mono * basis[k - 1]
            budget -= k
            if rng.random() < 0.5:
                break
        acc = acc + mono
    return acc


def random_symmetric(n: int, rng: random.Random, degree: int = 3, terms: int = 2) -> Poly:
    """Random element of ``Q[r]^{S_{n+1}}`` as a polynomial in power sums."""
    return _combine(power_sums(n, max(degree, 1)), rng, degree, terms, n)


def random_central(n: int, rng: random.Random, degree: int = 3, terms: int = 2) -> Poly:
    """Random symmetric, shift-invariant polynomial (centered power sums ``k >= 2``)."""
    if n == 0:
        return Poly.const(small_rational(rng), r_vars(0))
    basis = power_sums(n, max(degree, 2), centered=True)
    basis[0] = basis[1]  # the centered first power sum vanishes
    return _combine(basis, rng, degree, terms, n)


def random_noncentral(n: int, rng: random.Random, degree: int = 3) -> Poly:
    """Symmetric but not shift invariant: a central part plus a nonzero multiple of ``sigma0``."""
    while True:
        p = random_central(n, rng, degree) + sigma0(n) * random_symmetric(n, rng, max(degree - 1, 0), 1)
        if not is_tau_invariant(p):
            return p


def random_t0(ctx: TeeContext, rng: random.Random, degree: int = 2) -> TorusElement:
    return ctx.t0(gamma_inverse(random_symmetric(ctx.n, rng, degree), ctx.n, ctx.d))


def random_T(ctx: TeeContext, rng: random.Random, span: int = 2, parts: int = 2, degree: int = 2) -> TorusElement:
    out = TorusElement.zero(ctx.n)
    for _ in range(parts):
        i = rng.randint(-span, span)
        xpow = ctx.X ** i if i >= 0 else ctx.Xinv ** (-i)
        out = out + random_t0(ctx, rng, degree) * xpow
    return out


def random_T0XY(ctx: TeeContext, rng: random.Random, span: int = 2, parts: int = 2, degree: int = 2) -> TorusElement:
    out = TorusElement.zero(ctx.n)
    for _ in range(parts):
        i = rng.randint(-span, span)
        mono = ctx.X ** i if i >= 0 else ctx.Y ** (-i)
        out = out + random_t0(ctx, rng, degree) * mono
    return out


def random_degree0_word(rng: random.Random, length: int = 4) -> str:
    """Word in the generators whose total degree is 0."""
    letters = []
    deg = 0
    for _ in range(length):
        ch = rng.choice(["X", "Y", "Xinv", "E"])
        letters.append(ch)
        deg += {"X": 1, "Y": -1, "Xinv": -1, "E": 0}[ch]
    while deg > 0:
        letters.insert(rng.randint(0, len(letters)), rng.choice(["Y", "Xinv"]))
        deg -= 1
    while deg < 0:
        letters.insert(rng.randint(0, len(letters)), "X")
        deg += 1
    return " ".join(letters)
