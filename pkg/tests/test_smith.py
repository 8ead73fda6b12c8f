import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pvalgebra.exact_poly import ContextMismatch, Poly, parse
from pvalgebra.smith import (CoeffRing, SmithContext, SmithContextError, UContext, casimir, casimir2,
                             difference, injectivity_probe, pbw_independent, project, random_smith,
                             random_u, random_word, rewrite_product_S, rewrite_product_U,
                             rewrite_word_S, rewrite_word_U, smith_for_u, solve_u, weight, word_element)

Q = CoeffRing(())
RC = CoeffRing(("c",))


def ctx_for(n, f="t^2 + c*t + 1"):
    return SmithContext(RC, n, f)


def test_defining_relations():
    for n in (0, 1, 2):
        s = ctx_for(n)
        assert s.y * s.x == s.x * s.y + s.poly_in_e(s.f)
        assert s.e * s.x == s.x * s.e + s.x * (n + 1)
        assert s.e * s.y == s.y * s.e - s.y * (n + 1)


def test_normal_form_text():
    s = SmithContext(Q, 2, "t^2 + 1")
    assert str(s.element("y x")) == "e^2 + x*y + 1"
    assert str(s.element("e x")) == "x*e + 3*x"
    assert str(s.zero()) == "0"


@pytest.mark.parametrize("n", [0, 1, 2])
@settings(max_examples=20)
@given(coeffs=st.lists(st.integers(-4, 4), min_size=1, max_size=6))
def test_move_polynomials_past_generators(n, coeffs):
    s = ctx_for(n)
    t = Poly.var("t", RC.t_vars)
    p = sum((t**i).scale(c) for i, c in enumerate(coeffs))
    P, Ps = s.poly_in_e(p), s.poly_in_e(p.shift("t", n + 1))
    assert P * s.x == s.x * Ps
    assert Ps * s.y == s.y * P


def test_solve_u_examples():
    t = Poly.var("t", Q.t_vars)
    assert solve_u(t, 0) == (t * (t - 1)).scale(parse("1/2", ()).constant_term())
    c = Poly.var("c", RC.t_vars)
    for n in (0, 1, 2):
        assert solve_u(c, n) == c * Poly.var("t", RC.t_vars) * parse(f"1/{n + 1}", RC.t_vars)
    assert solve_u(Poly.zero(Q.t_vars), 3) == 0
    with pytest.raises(SmithContextError):
        solve_u(Poly.var("c", ("c", "t")), 1)


@settings(max_examples=30)
@given(n=st.integers(0, 3), seed=st.integers(0, 10**6))
def test_solve_u_round_trip(n, seed):
    rng = random.Random(seed)
    t = Poly.var("t", RC.t_vars)
    f = sum((RC.random_element(rng).embed(RC.t_vars) * t**i for i in range(rng.randint(1, 5))),
            Poly.zero(RC.t_vars))
    u = solve_u(f, n)
    assert difference(u, n) == f
    assert u.partial_eval({"t": 0}) == 0


def test_explicit_u_checked():
    with pytest.raises(SmithContextError):
        SmithContext(Q, 1, "t", u="t^2")
    s = SmithContext(Q, 1, "t", u="t^2/4 - t/2 + 5")
    assert casimir(s) == s.x * s.y - s.poly_in_e(s.u)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_casimir(n):
    s = ctx_for(n)
    om = casimir(s)
    for g in (s.x, s.y, s.e):
        assert g * om == om * g
    assert casimir2(s) == om * 2
    rng = random.Random(n)
    for _ in range(20):
        a = random_smith(s, rng)
        assert a * om == om * a


def test_weight_examples():
    s = ctx_for(1)
    assert list(weight(s.x)) == [1]
    assert list(weight(s.x * s.y)) == [0]
    assert list(weight(s.element("x x y e"))) == [1]
    assert list(weight(s.element("y x"))) == [0]


@settings(max_examples=20)
@given(seed=st.integers(0, 10**6))
def test_weight_is_grading(seed):
    rng = random.Random(seed)
    s = ctx_for(rng.randint(0, 2))
    a, b = random_smith(s, rng), random_smith(s, rng)
    for w, comp in weight(a).items():
        assert s.e * comp - comp * s.e == comp * (w * s.step)
    wa, wb = weight(a), weight(b)
    prod = weight(a * b)
    for w in set(prod) | {x + y for x in wa for y in wb}:
        expect = s.zero()
        for x, ca in wa.items():
            if w - x in wb:
                expect = expect + ca * wb[w - x]
        assert prod.get(w, s.zero()) == expect


@settings(max_examples=40)
@given(seed=st.integers(0, 10**6))
def test_confluence(seed):
    rng = random.Random(seed)
    s = ctx_for(rng.randint(0, 2))
    w = random_word(rng, rng.randint(1, 7))
    left = rewrite_word_S(s, w, "leftmost")
    assert left == rewrite_word_S(s, w, "rightmost")
    assert left == word_element(s, w)


def test_rewrite_product_matches_fast_product():
    rng = random.Random(5)
    s = ctx_for(1)
    for _ in range(10):
        a, b = random_smith(s, rng, terms=2), random_smith(s, rng, terms=2)
        assert rewrite_product_S(s, a, b, "rightmost") == a * b


def test_pbw_monomials_independent():
    s = ctx_for(1)
    monos = [s.y**i * s.x**j * s.e**k for i in range(3) for j in range(3) for k in range(3)]
    assert pbw_independent(monos)
    assert not pbw_independent(monos + [s.x * s.y - s.y * s.x])


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        ctx_for(1).x * ctx_for(2).x
    with pytest.raises(SmithContextError):
        CoeffRing(("e",))


# -- the quotient U -----------------------------------------------------------------

def test_quotient_relations():
    for n in (0, 1, 2):
        u = UContext(RC, n, "t^2 + c*t")
        assert u.x * u.y == u.poly_in_e(u.u)
        assert u.y * u.x == u.poly_in_e(u.u.shift("t", n + 1))
        q2 = u.u * u.u.shift("t", -(n + 1))
        assert u.x * u.x * u.y * u.y == u.poly_in_e(q2)
        for strategy in ("leftmost", "rightmost"):
            assert rewrite_word_U(u, "xxyy", strategy) == u.poly_in_e(q2)


@settings(max_examples=30)
@given(seed=st.integers(0, 10**6))
def test_quotient_confluence(seed):
    rng = random.Random(seed)
    u = UContext(RC, rng.randint(0, 2), "t^2 + c*t + 2")
    w = random_word(rng, rng.randint(1, 7))
    left = rewrite_word_U(u, w, "leftmost")
    assert left == rewrite_word_U(u, w, "rightmost") == word_element(u, w)
    a, b = random_u(u, rng, terms=2), random_u(u, rng, terms=2)
    assert rewrite_product_U(u, a, b) == a * b


@settings(max_examples=20)
@given(seed=st.integers(0, 10**6))
def test_quotient_associative(seed):
    rng = random.Random(seed)
    u = UContext(RC, rng.randint(0, 2), "t^3 - c*t")
    a, b, c = (random_u(u, rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)


@settings(max_examples=20)
@given(seed=st.integers(0, 10**6))
def test_projection_multiplicative(seed):
    rng = random.Random(seed)
    u = UContext(RC, rng.randint(0, 2), "t^2 + c*t - 1")
    s = smith_for_u(u)
    a, b = random_smith(s, rng), random_smith(s, rng)
    assert project(u, a * b) == project(u, a) * project(u, b)
    assert not project(u, casimir(s))


def test_canonical_form_keys():
    u = UContext(Q, 1, "t^2")
    assert (u.poly_in_e(Poly.var("t", Q.t_vars))).canonical_terms() == {("x", 0, 1): Poly.const(1, ())}
    assert u.monomial(2).canonical_terms() == {("x", 2, 0): Poly.const(1, ())}
    assert u.monomial(-3, 1).canonical_terms() == {("y", 3, 1): Poly.const(1, ())}


def test_injectivity_probes():
    u = UContext(RC, 1, "t^2 + c*t")
    rng = random.Random(0)
    t = Poly.var("t", RC.t_vars)
    polys = []
    while len(polys) < 20:
        p = sum((t**i).scale(rng.randint(-3, 3)) for i in range(5))
        if p and p not in polys:
            polys.append(p)
    for s in range(4):
        assert injectivity_probe(u, s, polys, "x")
        assert injectivity_probe(u, s, polys, "y")
    assert not injectivity_probe(u, 1, [t, t])
