from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pvalgebra.exact_poly import (NEG_INF, ContextMismatch, NotDivisible, Poly, ParseError, add,
                                  degree_in, divide_exact, mul, parse, rational, shift)
from strategies import nonzero_polys, polys, rationals

V = ("X0", "X1")
x0, x1 = Poly.gens(V)


def P(text, vars=V, laurent=None):
    return parse(text, vars, laurent)


def test_rational_normalizes():
    assert rational("6/4") == Fraction(3, 2)
    assert rational(Fraction(0, 5)).denominator == 1


def test_add_examples():
    assert add(x0, -x0) == 0
    assert not add(x0, -x0).terms
    assert add(x0**2 + 1, x0) == P("X0^2 + X0 + 1")
    assert add(x0.scale(Fraction(1, 2)), x0.scale(Fraction(1, 2))) == x0


def test_mul_examples():
    assert mul(x0 + 1, x0 - 1) == x0**2 - 1
    t = Poly.var("t", ("t",), laurent="t")
    assert t * t**-1 == 1
    assert mul(Poly.zero(V), x0 + x1) == 0


def test_shift_examples():
    assert shift(x0**2, "X0", 1) == x0**2 + 2 * x0 + 1
    assert shift(x0 * x1, "X0", -1) == x0 * x1 - x1
    p = P("3/2*X0^2*X1 - 1")
    assert shift(p, "X0", 0) == p


def test_shift_errors():
    with pytest.raises(KeyError):
        x0.shift("X7", 1)
    t = Poly.var("t", ("t", "X0"), laurent="t")
    with pytest.raises(ValueError):
        t.shift("t", 1)


def test_divide_examples():
    assert divide_exact(x0**2 - 1, x0 - 1) == x0 + 1
    with pytest.raises(NotDivisible):
        divide_exact(x0**2 + 1, x0)
    p = P("X0*X1 + 2")
    assert divide_exact(p, Poly.const(1, V)) == p
    with pytest.raises(ZeroDivisionError):
        divide_exact(p, Poly.zero(V))


def test_divide_laurent():
    vars = ("t", "c")
    t, c = Poly.gens(vars, laurent="t")
    assert divide_exact(t**-2 * (t + c), t**-1) == t**-1 * (t + c)


def test_degree_in_examples():
    assert degree_in(x0**3 * x1 + x0, "X0") == 3
    assert degree_in(x1**2, "X0") == 0
    assert degree_in(Poly.zero(V), "X0") == NEG_INF
    with pytest.raises(KeyError):
        degree_in(x0, "Z")


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        x0 + Poly.var("a0", ("a0", "a1"))


def test_canonical_text():
    p = P("3/2*X0^2*X1 - 1")
    assert str(p) == "3/2*X0^2*X1 - 1"
    assert str(Poly.zero(V)) == "0"
    assert str(P("-X1 + X0^2")) == "X0^2 - X1"


def test_parse_errors():
    with pytest.raises(ParseError):
        P("X0 +")
    with pytest.raises(ParseError):
        P("Z^2")


def test_negative_exponent_rejected_outside_laurent():
    with pytest.raises(ValueError):
        Poly(V, {(-1, 0): 1})


def test_substitute_and_evaluate():
    p = P("X0^2 + X0*X1")
    q = p.substitute({"X0": x1 + 1}, V)
    assert q == (x1 + 1) ** 2 + (x1 + 1) * x1
    assert p.evaluate([2, 3]) == 10
    assert p.evaluate({"X0": 1, "X1": Fraction(1, 2)}) == Fraction(3, 2)


def test_affine_matches_sequential():
    p = P("X0^3*X1 - 2*X1^2 + 5")
    ops = [("shift", "X0", 2), ("shear", "X1", "X0", -1), ("shift", "X1", Fraction(1, 3))]
    seq = p.shift("X0", 2).shear("X1", "X0", -1).shift("X1", Fraction(1, 3))
    assert p.affine(ops) == seq
    with pytest.raises(ValueError):
        p.affine([("shear", "X0", "X0", 1)])
    with pytest.raises(ValueError):
        p.affine([("rotate", "X0", 1)])


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert p - p == 0


@given(polys(), rationals, rationals)
def test_shift_composes(p, a, b):
    assert p.shift("X0", a).shift("X0", b) == p.shift("X0", a + b)


@given(polys(), nonzero_polys())
def test_divide_inverts_mul(p, q):
    assert divide_exact(p * q, q) == p


@given(polys())
def test_text_round_trip(p):
    assert P(str(p)) == p


@given(polys(), rationals, st.sampled_from([("X0", "X1"), ("X1", "X0")]))
def test_shear_is_substitution(p, c, pair):
    var, src = pair
    g = dict(zip(V, Poly.gens(V)))
    assert p.shear(var, src, c) == p.substitute({var: g[var] + g[src].scale(c)}, V)
