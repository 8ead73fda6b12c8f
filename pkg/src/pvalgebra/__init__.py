"""Exact computations with invariant differential operators on prehomogeneous
spaces of commutative parabolic type, realized in a torus Weyl algebra."""

from .catalog import CATALOG, CatalogError, Family, PVType, builtin, custom, parse_pv, quadratic
from .exact_poly import ContextMismatch, NotDivisible, Poly, divide_exact, parse
from .harish import (NotSymmetric, SymPoly, a_to_r, center_split, decompose_tau, gamma, gamma_inverse,
                     r_to_a, rho, tau_invariant_generators)
from .iso import IsoBridge, build_u_xy, verify_iso
from .kernels import BACKEND
from .oracle import DiffOp, NotProportional, calibrate_and_check, det_model, empirical_b, quadratic_model
from .smith import (CoeffRing, SmithContext, SmithElement, UContext, UElement, casimir, casimir2,
                    solve_u, weight)
from .tee import (BFunction, MembershipFailure, NotHomogeneous, NotInT0XY, TeeContext, bfunction,
                  decompose_T, decompose_T0XY, evaluate_word, hq_sequence, is_central, is_in_T0, tau)
from .torus import TorusElement, apply_to_cell, commutator, lemma_word, radial_restriction, skew_mul

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BFunction", "CATALOG", "CatalogError", "CoeffRing", "ContextMismatch", "DiffOp",
    "Family", "IsoBridge", "MembershipFailure", "NotDivisible", "NotHomogeneous", "NotInT0XY",
    "NotProportional", "NotSymmetric", "PVType", "Poly", "SmithContext", "SmithElement", "SymPoly",
    "TeeContext", "TorusElement", "UContext", "UElement", "a_to_r", "apply_to_cell", "bfunction",
    "build_u_xy", "builtin", "calibrate_and_check", "casimir", "casimir2", "center_split",
    "commutator", "custom", "decompose_T", "decompose_T0XY", "decompose_tau", "det_model",
    "divide_exact", "empirical_b", "evaluate_word", "gamma", "gamma_inverse", "hq_sequence",
    "is_central", "is_in_T0", "lemma_word", "parse", "parse_pv", "quadratic", "quadratic_model",
    "r_to_a", "radial_restriction", "rho", "skew_mul", "solve_u", "tau", "tau_invariant_generators",
    "verify_iso", "weight",
]
