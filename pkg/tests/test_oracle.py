from fractions import Fraction

import pytest

from pvalgebra.exact_poly import ContextMismatch, Poly
from pvalgebra.oracle import (DiffOp, NotProportional, calibrate_and_check, det_model, empirical_b,
                              euler_check, parse_model, quadratic_model)


def test_diffop_basics():
    vars = ("x1", "x2")
    x1, x2 = Poly.gens(vars)
    d1 = DiffOp(vars, {(1, 0): 1})
    assert d1(x1**2) == x1.scale(2)
    assert d1.order() == 1
    assert DiffOp(vars).order() == -1
    eul = DiffOp.euler(vars)
    for m in range(5):
        p = x1**m * x2
        assert eul(p) == p.scale(m + 1)
    with pytest.raises(ValueError):
        DiffOp(vars, {(1,): 1})
    with pytest.raises(ContextMismatch):
        d1(Poly.var("y", ("y",)))


def test_cayley_two_by_two():
    model = det_model(2)
    y = model.y_op
    assert y(model.delta0) == Poly.const(2, model.vars)
    for s in range(1, 5):
        assert empirical_b(model, (s, 0)) == s * (s + 1)


def test_cayley_three_by_three_at_one():
    model = det_model(3)
    assert empirical_b(model, (1, 0)) == 6
    assert empirical_b(model, (0, 2)) == 0


def test_quadratic_cells():
    model = quadratic_model(4)
    assert empirical_b(model, (0, 3)) == 0
    # c * b_Y(1, 1) = 4 * 1 * (2 + 1)
    assert empirical_b(model, (1, 1)) == 12
    assert model.formula(1, 1) == 3


def test_not_proportional():
    model = quadratic_model(4)
    model.y_op = DiffOp(model.vars, {(1, 0, 0, 0): 1})
    with pytest.raises(NotProportional):
        empirical_b(model, (1, 0))
    model = quadratic_model(4)
    model.delta1 = Poly.var("x1", model.vars) * Poly.var("x2", model.vars)
    with pytest.raises(NotProportional):
        empirical_b(model, (0, 1))


@pytest.mark.parametrize("m", [2, 3])
def test_det_calibration(m):
    rep = calibrate_and_check(det_model(m), 4)
    assert rep.passed, rep.table()
    assert rep.calibration == 1
    assert len(rep.rows) == 15


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_quadratic_calibration(k):
    rep = calibrate_and_check(quadratic_model(k), 4)
    assert rep.passed, rep.table()
    assert rep.calibration == 4
    assert rep.as_dict()["calibration"] == "4"


def test_euler_degrees():
    model = det_model(3)
    assert euler_check(model, (1, 2))
    model = quadratic_model(5)
    assert euler_check(model, (2, 1))


def test_calibration_detects_wrong_operator():
    model = quadratic_model(4)
    model.y_op = DiffOp(model.vars, {(1, 1, 0, 0): 4})
    rep = calibrate_and_check(model, 3)
    assert not rep.passed
    assert rep.mismatches


def test_parse_model_errors():
    assert parse_model("det:2").name == "det:2"
    assert parse_model("quadratic:5").calibration is None
    for bad in ("det", "det:x", "cube:3", "det:4", "quadratic:2"):
        with pytest.raises(ValueError):
            parse_model(bad)
    with pytest.raises(ValueError):
        calibrate_and_check(det_model(2), 1)
    with pytest.raises(ValueError):
        empirical_b(det_model(2), (-1, 0))


def test_custom_cells():
    rep = calibrate_and_check(det_model(2), cells=[(3, 1)])
    assert rep.passed and rep.rows[0]["empirical"] == Fraction(3 * 5)
