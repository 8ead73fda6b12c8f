from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pvalgebra.exact_poly import ContextMismatch, Poly, parse
from pvalgebra.tee import TeeContext
from pvalgebra.torus import (TorusElement, apply_to_cell, commutator, derivative_form, euler_form,
                             lemma_word, radial_restriction, render, skew_mul, torus_vars)
from strategies import polys

V1 = torus_vars(1)


def T(n, parts):
    return TorusElement(n, {m: parse(p, torus_vars(n)) if isinstance(p, str) else p for m, p in parts.items()})


def elements(n=1, max_deg=2):
    part = polys(torus_vars(n), max_deg, 3)
    return st.dictionaries(st.integers(-2, 2), part, max_size=3).map(lambda d: TorusElement(n, d))


def test_skew_mul_examples():
    b = parse("X0^2 + X0*X1 + 3", V1)
    assert T(1, {1: "1"}) * T(1, {-1: b}) == T(1, {0: b})
    assert T(1, {-1: b}) * T(1, {1: "1"}) == T(1, {0: b.shift("X0", 1)})
    p, q = parse("X0 + X1", V1), parse("X1^2 - 2", V1)
    assert T(1, {0: p}) * T(1, {0: q}) == T(1, {0: p * q})


def test_rank_mismatch():
    with pytest.raises(ContextMismatch):
        skew_mul(TorusElement.scalar(1, 1), TorusElement.scalar(2, 1))


def test_commutator_examples():
    for pv in ("A:2", "A:3", "A:4"):
        ctx = TeeContext(pv)
        assert commutator(ctx.E, ctx.X) == ctx.X.scale(ctx.n + 1)
        assert not commutator(ctx.Y, ctx.Y)
        assert not commutator(T(ctx.n, {0: ctx.b_E}), T(ctx.n, {0: ctx.b_Y}))


def test_lemma_word_examples():
    assert lemma_word(1, 2, 0) == T(0, {2: "X0 + 2"})
    assert lemma_word(0, 3, 2) == T(0, {3: "X0^2"})
    assert lemma_word(2, 0, 1) == T(0, {0: "X0^3"})


def _operator_on_power(i, l, j, s):
    """``(t d/dt)^i t^l (t d/dt)^j`` applied to ``t^s`` gives ``s^j (s+l)^i t^(s+l)``."""
    return Fraction(s) ** j * Fraction(s + l) ** i


def test_lemma_word_grid_against_operator():
    for i in range(5):
        for j in range(5):
            for l in range(-4, 5):
                u = lemma_word(i, l, j)
                for s in (-3, 0, 2, 5):
                    expected = _operator_on_power(i, l, j, s)
                    got = apply_to_cell(u, [s])
                    assert got == ([((Fraction(s + l),), expected)] if expected else [])
                closed = sum((parse("X0", torus_vars(0)) ** (p + j)).scale(comb(i, p) * l ** (i - p))
                             for p in range(i + 1))
                assert u == TorusElement(0, {l: closed})


def test_apply_to_cell_examples():
    ctx = TeeContext("A:3")
    assert apply_to_cell(ctx.X, [2, 1, 0]) == [((3, 1, 0), 1)]
    a = [2, 1, 0]
    assert apply_to_cell(ctx.E, a) == [(tuple(Fraction(x) for x in a), ctx.b_E.evaluate(a))]
    assert apply_to_cell(TorusElement.zero(2), a) == []


def _compose(u, v, a):
    out = {}
    for cell, s in apply_to_cell(v, a):
        for cell2, s2 in apply_to_cell(u, cell):
            out[cell2] = out.get(cell2, 0) + s * s2
    return sorted((c, s) for c, s in out.items() if s)


@given(elements(), elements(), elements())
def test_associative(u, v, w):
    assert (u * v) * w == u * (v * w)


@given(elements(), elements(), st.tuples(st.integers(-4, 6), st.integers(-4, 6)))
def test_faithful_on_cells(u, v, a):
    assert sorted(apply_to_cell(u * v, a)) == _compose(u, v, a)


@given(elements(n=2), elements(n=2))
def test_radial_restriction_multiplicative(u, v):
    assert radial_restriction(u * v) == radial_restriction(u) * radial_restriction(v)


def test_radial_generators():
    for pv in ("A:2", "A:3", "C:3", "E7"):
        ctx = TeeContext(pv)
        x0 = Poly.var("X0", torus_vars(0))
        b = Poly.const(1, torus_vars(0))
        for j in range(ctx.n + 1):
            b = b * (x0 + ctx.pv.half_d * j)
        assert radial_restriction(ctx.Y) == TorusElement(0, {-1: b})
        assert radial_restriction(ctx.E) == TorusElement(0, {0: x0.scale(ctx.n + 1)})
        assert radial_restriction(ctx.X) == TorusElement(0, {1: 1})


def test_rais_operator():
    for m in (2, 3, 4, 5):
        x0 = Poly.var("X0", torus_vars(0))
        op = TorusElement.scalar(0, 1)
        for j in range(2, m + 1):
            op = op * TorusElement(0, {0: x0 + j})
        op = op * TorusElement(0, {-1: x0})  # d/dt
        assert radial_restriction(TeeContext(f"A:{m}").Y) == op


def test_renderings():
    u = T(0, {-1: "X0^2"})  # t^-1 (t d/dt)^2 = d/dt + t d^2/dt^2
    assert euler_form(u) == [(-1, 2, Poly.const(1, ()))]
    assert [(r, s, c.constant_term()) for r, s, c in derivative_form(u)] == [(0, 1, 1), (1, 2, 1)]
    assert render(u) == "t^-1 (*) [X0^2]"
    assert "(d/dt)^2" in render(u, "derivative")
    with pytest.raises(ValueError):
        render(u, "matrix")


@given(elements(n=2))
def test_json_round_trip(u):
    assert TorusElement.from_json(u.to_json()) == u
    assert u.to_dict()["version"] == 1


def test_json_version_checked():
    with pytest.raises(ValueError):
        TorusElement.from_dict({"version": 99, "n": 0, "parts": []})


def test_text_form():
    assert str(T(1, {1: "1", 0: "X0"})) == "t^1 (*) [1] + t^0 (*) [X0]"
    assert str(TorusElement.zero(1)) == "0"
