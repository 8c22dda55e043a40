"""
Forward-mode dual numbers.

A DualNumber carries a value and the derivative with respect to the single
variable seeded for the current pass. All primitives used by the semantics
are lifted here; min/max select the first argument on ties.
"""
from __future__ import annotations

import math
from enum import Enum
from typing import Callable, Dict, Union

from app.autodiff.kinks import record_branch
from app.core.exceptions import ArithmeticFault

Real = Union[int, float]


class ArithOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"
    NEG = "neg"
    MIN = "min"
    MAX = "max"
    EXP = "exp"
    ABS = "abs"
    POW = "pow"
    CLAMP = "clamp"
    INDICATOR = "indicator"


class DualNumber:
    """Immutable (value, derivative) pair."""

    __slots__ = ("value", "derivative")

    def __init__(self, value: float, derivative: float = 0.0):
        self.value = value
        self.derivative = derivative

    @classmethod
    def constant(cls, value: Real) -> "DualNumber":
        return cls(float(value), 0.0)

    @classmethod
    def variable(cls, value: Real) -> "DualNumber":
        return cls(float(value), 1.0)

    def __repr__(self) -> str:
        return f"DualNumber({self.value!r}, {self.derivative!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DualNumber):
            return NotImplemented
        return self.value == other.value and self.derivative == other.derivative

    def __hash__(self) -> int:
        return hash((self.value, self.derivative))

    def __add__(self, other: Union["DualNumber", Real]) -> "DualNumber":
        return add(self, as_dual(other))

    def __radd__(self, other: Real) -> "DualNumber":
        return add(as_dual(other), self)

    def __sub__(self, other: Union["DualNumber", Real]) -> "DualNumber":
        return sub(self, as_dual(other))

    def __rsub__(self, other: Real) -> "DualNumber":
        return sub(as_dual(other), self)

    def __mul__(self, other: Union["DualNumber", Real]) -> "DualNumber":
        return mul(self, as_dual(other))

    def __rmul__(self, other: Real) -> "DualNumber":
        return mul(as_dual(other), self)

    def __truediv__(self, other: Union["DualNumber", Real]) -> "DualNumber":
        return div(self, as_dual(other))

    def __rtruediv__(self, other: Real) -> "DualNumber":
        return div(as_dual(other), self)

    def __neg__(self) -> "DualNumber":
        return negate(self)


def as_dual(x: Union[DualNumber, Real]) -> DualNumber:
    if isinstance(x, DualNumber):
        return x
    return DualNumber(float(x), 0.0)


def _checked(value: float, derivative: float, op: str) -> DualNumber:
    if not (math.isfinite(value) and math.isfinite(derivative)):
        raise ArithmeticFault(f"Non-finite result in {op}: value={value}, derivative={derivative}")
    return DualNumber(value, derivative)


def add(a: DualNumber, b: DualNumber) -> DualNumber:
    return _checked(a.value + b.value, a.derivative + b.derivative, "add")


def sub(a: DualNumber, b: DualNumber) -> DualNumber:
    return _checked(a.value - b.value, a.derivative - b.derivative, "sub")


def mul(a: DualNumber, b: DualNumber) -> DualNumber:
    return _checked(a.value * b.value, a.value * b.derivative + a.derivative * b.value, "mul")


def div(a: DualNumber, b: DualNumber) -> DualNumber:
    if b.value == 0.0:
        raise ArithmeticFault("Division by zero")
    return _checked(
        a.value / b.value,
        (a.derivative * b.value - a.value * b.derivative) / (b.value * b.value),
        "div",
    )


def negate(a: DualNumber) -> DualNumber:
    return DualNumber(-a.value, -a.derivative)


def dmin(a: DualNumber, b: DualNumber) -> DualNumber:
    record_branch(a.value - b.value)
    return a if a.value <= b.value else b


def dmax(a: DualNumber, b: DualNumber) -> DualNumber:
    record_branch(a.value - b.value)
    return a if a.value >= b.value else b


def dexp(a: DualNumber) -> DualNumber:
    try:
        e = math.exp(a.value)
    except OverflowError:
        raise ArithmeticFault(f"exp overflow at {a.value}") from None
    return _checked(e, e * a.derivative, "exp")


def dabs(a: DualNumber) -> DualNumber:
    record_branch(a.value)
    if a.value >= 0.0:
        return a
    return DualNumber(-a.value, -a.derivative)


def dpow(a: DualNumber, exponent: float) -> DualNumber:
    """a**exponent for a >= 0 and a constant exponent > 0."""
    if a.value < 0.0:
        raise ArithmeticFault(f"pow of negative base {a.value}")
    if exponent < 1.0:
        record_branch(a.value)
    try:
        value = a.value ** exponent
        if a.value == 0.0:
            if a.derivative == 0.0 or exponent > 1.0:
                derivative = 0.0
            elif exponent == 1.0:
                derivative = a.derivative
            else:
                raise ArithmeticFault(f"pow with exponent {exponent} is not differentiable at 0")
        else:
            derivative = exponent * a.value ** (exponent - 1.0) * a.derivative
    except OverflowError:
        raise ArithmeticFault(f"pow overflow at {a.value}**{exponent}") from None
    return _checked(value, derivative, "pow")


def clamp(a: DualNumber, lo: float, hi: float) -> DualNumber:
    return dmax(dmin(a, DualNumber(hi, 0.0)), DualNumber(lo, 0.0))


def indicator(a: DualNumber, b: DualNumber) -> DualNumber:
    """[a = b]: exact equality of values, derivative 0."""
    record_branch(a.value - b.value)
    return DualNumber(1.0 if a.value == b.value else 0.0, 0.0)


_OPS: Dict[ArithOp, Callable[..., DualNumber]] = {
    ArithOp.ADD: add,
    ArithOp.SUB: sub,
    ArithOp.MUL: mul,
    ArithOp.DIV: div,
    ArithOp.NEG: negate,
    ArithOp.MIN: dmin,
    ArithOp.MAX: dmax,
    ArithOp.EXP: dexp,
    ArithOp.ABS: dabs,
    ArithOp.POW: dpow,
    ArithOp.CLAMP: clamp,
    ArithOp.INDICATOR: indicator,
}


def lift_arithmetic(op: Union[ArithOp, str], *args: Union[DualNumber, Real]) -> DualNumber:
    """
    Apply a lifted primitive by name.

    Dual arguments may be given as plain reals (treated as constants); the
    constant parameters of pow (exponent) and clamp (bounds) stay plain.
    """
    op = ArithOp(op)
    if op is ArithOp.POW:
        base, exponent = args
        return dpow(as_dual(base), float(exponent))
    if op is ArithOp.CLAMP:
        x, lo, hi = args
        return clamp(as_dual(x), float(lo), float(hi))
    return _OPS[op](*(as_dual(a) for a in args))
