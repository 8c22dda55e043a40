"""
Test the dual-number arithmetic.
"""
import pytest

from app.autodiff import ArithOp, DualNumber, lift_arithmetic, track_kinks
from app.autodiff.dual import clamp, dabs, dpow
from app.core.exceptions import ArithmeticFault


def test_lifted_primitives():
    test_cases = [
        (ArithOp.MUL, (DualNumber(3, 1), DualNumber(4, 0)), DualNumber(12, 4)),
        (ArithOp.MAX, (DualNumber(2, 1), DualNumber(5, 0)), DualNumber(5, 0)),
        (ArithOp.MAX, (DualNumber(2, 1), DualNumber(2, 0)), DualNumber(2, 1)),
        (ArithOp.MIN, (DualNumber(2, 0), DualNumber(2, 1)), DualNumber(2, 0)),
        (ArithOp.ADD, (DualNumber(1, 2), 3.0), DualNumber(4, 2)),
        (ArithOp.SUB, (DualNumber(1, 2), DualNumber(3, 1)), DualNumber(-2, 1)),
        (ArithOp.DIV, (DualNumber(6, 1), DualNumber(2, 0)), DualNumber(3, 0.5)),
        (ArithOp.NEG, (DualNumber(1, 2),), DualNumber(-1, -2)),
        (ArithOp.ABS, (DualNumber(-3, 1),), DualNumber(3, -1)),
        (ArithOp.EXP, (DualNumber(0, 2),), DualNumber(1, 2)),
        (ArithOp.INDICATOR, (DualNumber(2, 1), DualNumber(2, 5)), DualNumber(1, 0)),
        (ArithOp.INDICATOR, (DualNumber(2, 1), DualNumber(3, 0)), DualNumber(0, 0)),
    ]
    for op, args, expected in test_cases:
        assert lift_arithmetic(op, *args) == expected, op


def test_lift_by_name():
    assert lift_arithmetic("pow", DualNumber(3, 1), 2) == DualNumber(9, 6)
    assert lift_arithmetic("clamp", DualNumber(1.5, 1), 0, 1) == DualNumber(1, 0)


def test_operator_overloads():
    x = DualNumber.variable(2.0)
    y = 3.0 * x * x - 1.0 / x + 4.0
    assert y.value == pytest.approx(15.5)
    assert y.derivative == pytest.approx(12.25)


def test_division_by_zero():
    with pytest.raises(ArithmeticFault):
        lift_arithmetic(ArithOp.DIV, DualNumber(1, 0), DualNumber(0, 1))


def test_overflow_is_an_error():
    with pytest.raises(ArithmeticFault):
        lift_arithmetic(ArithOp.EXP, DualNumber(1000.0, 0))
    with pytest.raises(ArithmeticFault):
        DualNumber(1e308, 0) * 10.0


def test_pow_special_points():
    assert dpow(DualNumber(0.0, 1.0), 2.0) == DualNumber(0.0, 0.0)
    assert dpow(DualNumber(0.0, 0.0), 0.5) == DualNumber(0.0, 0.0)
    with pytest.raises(ArithmeticFault):
        dpow(DualNumber(0.0, 1.0), 0.5)
    with pytest.raises(ArithmeticFault):
        dpow(DualNumber(-1.0, 0.0), 2.0)


def test_abs_tie_keeps_derivative():
    assert dabs(DualNumber(0.0, 1.0)) == DualNumber(0.0, 1.0)


def test_kink_tracking():
    with track_kinks() as margins:
        lift_arithmetic(ArithOp.MIN, DualNumber(2.0, 0), DualNumber(2.5, 0))
        clamp(DualNumber(0.25, 1), 0.0, 1.0)
    assert margins[0] == pytest.approx(0.5)
    assert min(margins) == pytest.approx(0.25)

    # nothing is recorded outside a tracking block
    with track_kinks() as outer:
        pass
    lift_arithmetic(ArithOp.MAX, DualNumber(0, 0), DualNumber(1, 0))
    assert outer == []
