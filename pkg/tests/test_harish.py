import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pvalgebra.exact_poly import Poly, parse
from pvalgebra.harish import (NotSymmetric, SymPoly, a_to_r, a_vars, center_split, decompose_tau,
                              eliminate_sigma0, gamma, gamma_inverse, is_symmetric, is_tau_invariant,
                              jacobian_det, r_to_a, r_vars, recombine, rho, sigma0, tau_shift,
                              tau_invariant_generators)
from pvalgebra.samples import random_central, random_symmetric, random_t0
from pvalgebra.tee import TeeContext, bfunction, tau_inv
from pvalgebra.torus import skew_mul
from strategies import polys

R1 = r_vars(1)


def S(text, n):
    return SymPoly.parse(text, n)


def test_change_of_variables():
    for pv in ("A:2", "A:3", "A:4", "E7"):
        ctx = TeeContext(pv)
        assert a_to_r(ctx.b_E) == sigma0(ctx.n)
    assert a_to_r(Poly.var("a0", a_vars(2))) == Poly.var("r0", r_vars(2))
    assert a_to_r(Poly.var("a1", a_vars(1))) == parse("r1 - r0", R1)


@given(polys(a_vars(2), 3, 5))
def test_round_trip(p):
    assert r_to_a(a_to_r(p)) == p


def test_rho():
    assert rho(2, 2) == (-1, 0, 1)
    assert rho(1, 8) == (-2, 2)
    for n in range(1, 5):
        r = rho(n, Fraction(3, 2))
        assert sum(r) == 0
        assert all(r[i] == -r[n - i] for i in range(n + 1))


@pytest.mark.parametrize("pv", ["A:2", "A:3", "A:4", "C:3", "E7", "quadratic:5"])
def test_gamma_of_generators(pv):
    ctx = TeeContext(pv)
    n, d = ctx.n, ctx.d
    rs = Poly.gens(r_vars(n))
    for l in range(n + 1):
        expected = Poly.const(1, r_vars(n))
        for r in rs:
            expected = expected * (r + d * n / 4 + l)
        assert gamma(bfunction(ctx.d_ell(l)), n, d).poly == expected
        # before the rho shift: b_{D_l}(s) = prod (s0 + l + s1 + ... + si + i d/2)
        s = Poly.gens(a_vars(n))
        raw = Poly.const(1, a_vars(n))
        for i in range(n + 1):
            raw = raw * (sum(s[:i + 1], Poly.zero(a_vars(n))) + l + ctx.pv.half_d * i)
        assert bfunction(ctx.d_ell(l)).poly == raw
        assert ctx.d_ell(l) == ctx.X ** (1 - l if l <= 1 else 0) * ctx.Xinv ** max(l - 1, 0) * ctx.Y * ctx.X ** l
    assert gamma(bfunction(ctx.E), n, d).poly == sigma0(n)


def test_gamma_rejects():
    ctx = TeeContext("A:3")
    with pytest.raises(NotSymmetric):
        gamma(Poly.var("X1", ctx.X.vars), 2, 2)
    with pytest.raises(ValueError):
        gamma(bfunction(ctx.Y), 2, 2)


def test_symmetry_examples():
    assert is_symmetric(sigma0(3))
    assert not is_symmetric(Poly.var("r0", R1))
    assert SymPoly(gamma(bfunction(TeeContext("A:3").word("XY")), 2, 2).poly).is_symmetric


def test_tau_shift_examples():
    assert tau_shift(sigma0(2)) == sigma0(2) + 3
    p = parse("r0 - r1", R1)
    assert tau_shift(p) == p and is_tau_invariant(p)


@pytest.mark.parametrize("pv", ["A:2", "A:3", "E7"])
def test_tau_through_gamma(pv):
    ctx = TeeContext(pv)
    rng = random.Random(1)
    for _ in range(10):
        u = random_t0(ctx, rng)
        lhs = gamma(bfunction(tau_inv(u)), ctx.n, ctx.d).poly
        assert lhs == tau_shift(gamma(bfunction(u), ctx.n, ctx.d).poly)


def test_decompose_tau_examples():
    assert decompose_tau(sigma0(2)) == [0, 1]
    got = decompose_tau(parse("r0^2 + r1^2", R1))
    assert got == [parse("1/2*(r0 - r1)^2", R1), 0, Fraction(1, 2)]
    inv = parse("(r0 - r1)^2 + 3", R1)
    assert decompose_tau(inv) == [inv]
    with pytest.raises(NotSymmetric):
        decompose_tau(parse("r0", R1))


@settings(max_examples=25)
@given(st.integers(1, 3), st.integers(0, 10**6))
def test_decompose_tau_properties(n, seed):
    s = random_symmetric(n, random.Random(seed), 4, 3)
    alphas = decompose_tau(s)
    assert recombine(alphas).poly == s
    assert all(a.is_tau_invariant and a.is_symmetric for a in alphas)
    z = random_central(n, random.Random(seed), 3)
    assert decompose_tau(z) == [z] if z else True
    shifted = decompose_tau(z * sigma0(n))
    assert shifted[0] == 0


def test_tau_invariant_generators_examples():
    sig = sigma0(1)
    assert [(a.poly, k) for a, k in tau_invariant_generators([sig**2])] == [(Poly.const(1, R1), 2)]
    d = parse("r0 - r1", R1)
    assert [(a.poly, k) for a, k in tau_invariant_generators([d**2])] == [(d**2, 0)]
    with pytest.raises(NotSymmetric):
        tau_invariant_generators([d])
    assert [(a.poly, k) for a, k in tau_invariant_generators([d**2 * sig])] == [(d**2, 1)]


def test_center_split_examples():
    ctx = TeeContext("A:3")
    z, rest = center_split(bfunction(ctx.E), 2, 2)
    assert z == 0 and rest == sigma0(2)
    z, rest = center_split(bfunction(ctx.const(7)), 2, 2)
    assert z == 7 and rest == 0
    g = gamma(bfunction(ctx.word("XY")), 2, 2)
    z, rest = center_split(bfunction(ctx.word("XY")), 2, 2)
    assert z == decompose_tau(g)[0] and z + rest == g
    assert (rest.poly / sigma0(2)) * sigma0(2) == rest.poly


@pytest.mark.parametrize("pv", ["A:2", "A:3", "A:4", "C:4", "E7"])
def test_gamma_multiplicative(pv):
    ctx = TeeContext(pv)
    rng = random.Random(3)
    for _ in range(10):
        u, v = random_t0(ctx, rng), random_t0(ctx, rng)
        assert gamma(bfunction(skew_mul(u, v)), ctx.n, ctx.d) == \
            gamma(bfunction(u), ctx.n, ctx.d) * gamma(bfunction(v), ctx.n, ctx.d)


@pytest.mark.parametrize("pv", ["A:2", "A:3", "A:4", "E7"])
def test_gamma_inverse(pv):
    ctx = TeeContext(pv)
    s = random_symmetric(ctx.n, random.Random(0), 3)
    b = gamma_inverse(s, ctx.n, ctx.d)
    assert gamma(b, ctx.n, ctx.d).poly == s
    assert gamma_inverse(s, ctx.n, ctx.d, vars="a").vars == a_vars(ctx.n)


def test_jacobian():
    rs = Poly.gens(r_vars(2))
    assert jacobian_det(list(rs), [1, 2, 3]) == 1
    e = [sigma0(2), rs[0] * rs[1] + rs[0] * rs[2] + rs[1] * rs[2], rs[0] * rs[1] * rs[2]]
    # elementary symmetric: Jacobian is the Vandermonde product
    assert jacobian_det(e, [1, 2, 4]) == (1 - 2) * (1 - 4) * (2 - 4)
    assert jacobian_det(e, [1, 1, 4]) == 0


def test_eliminate_sigma0():
    vars = ("e",) + R1
    p = parse("e^2 + r0*e + 1", vars)
    s = sigma0(1)
    r0 = Poly.var("r0", R1)
    assert eliminate_sigma0(p, "e") == s * s + r0 * s + 1
