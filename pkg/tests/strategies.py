"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from pvalgebra.exact_poly import Poly

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
nonzero_rationals = rationals.filter(bool)


def polys(vars=("X0", "X1"), max_deg=3, max_terms=4):
    exps = st.tuples(*[st.integers(0, max_deg) for _ in vars])
    return st.dictionaries(exps, rationals, max_size=max_terms).map(lambda t: Poly(vars, t))


def nonzero_polys(vars=("X0", "X1"), max_deg=3, max_terms=4):
    return polys(vars, max_deg, max_terms).filter(bool)
