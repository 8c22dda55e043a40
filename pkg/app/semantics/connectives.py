"""
Conjunction and negation operators of the six semantics.

Every operator works on DualNumbers; called with plain reals it returns a
plain float, so the same code serves evaluation, differentiation and the
connective-level property audit.
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from app.autodiff.dual import DualNumber, as_dual, clamp, dexp, dmax, dmin, dpow
from app.autodiff.kinks import record_branch
from app.core.exceptions import ConfigError, DomainViolationError
from app.schemas import StlBranch

Value = Union[DualNumber, float]

ZERO = DualNumber(0.0, 0.0)
ONE = DualNumber(1.0, 0.0)

# |A_min| below this is treated as exactly zero by the STL case split.
STL_ZERO_SNAP = 1e-12
EXP_CLAMP = 700.0


def _plain(*args: Value) -> bool:
    return not any(isinstance(a, DualNumber) for a in args)


def _out(result: DualNumber, plain: bool) -> Value:
    return result.value if plain else result


def _unit(x: DualNumber, op: str) -> DualNumber:
    if not 0.0 <= x.value <= 1.0:
        raise DomainViolationError(f"{op} expects values in [0,1], got {x.value}")
    return x


# DL2

def dl2_and_dual(a: DualNumber, b: DualNumber) -> DualNumber:
    if a.value < 0.0 or b.value < 0.0:
        raise DomainViolationError(f"DL2 conjunction expects values >= 0, got {a.value}, {b.value}")
    return a + b


def dl2_and(a: Value, b: Value) -> Value:
    return _out(dl2_and_dual(as_dual(a), as_dual(b)), _plain(a, b))


# Fuzzy t-norms

def goedel_and_dual(a: DualNumber, b: DualNumber) -> DualNumber:
    return dmin(_unit(a, "goedel_and"), _unit(b, "goedel_and"))


def lukasiewicz_and_dual(a: DualNumber, b: DualNumber) -> DualNumber:
    a, b = _unit(a, "lukasiewicz_and"), _unit(b, "lukasiewicz_and")
    return dmax(a + b - 1.0, ZERO)


def yager_and_dual(a: DualNumber, b: DualNumber, p: float) -> DualNumber:
    a, b = _unit(a, "yager_and"), _unit(b, "yager_and")
    norm = dpow(dpow(1.0 - a, p) + dpow(1.0 - b, p), 1.0 / p)
    return dmax(1.0 - norm, ZERO)


def product_and_dual(a: DualNumber, b: DualNumber) -> DualNumber:
    return _unit(a, "product_and") * _unit(b, "product_and")


def goedel_and(a: Value, b: Value) -> Value:
    return _out(goedel_and_dual(as_dual(a), as_dual(b)), _plain(a, b))


def lukasiewicz_and(a: Value, b: Value) -> Value:
    return _out(lukasiewicz_and_dual(as_dual(a), as_dual(b)), _plain(a, b))


def yager_and(a: Value, b: Value, p: float = 2.0) -> Value:
    if p < 1.0:
        raise ConfigError(f"Yager exponent must be >= 1, got {p}")
    return _out(yager_and_dual(as_dual(a), as_dual(b), p), _plain(a, b))


def product_and(a: Value, b: Value) -> Value:
    return _out(product_and_dual(as_dual(a), as_dual(b)), _plain(a, b))


def fuzzy_not_dual(a: DualNumber) -> DualNumber:
    return 1.0 - _unit(a, "fuzzy_not")


def fuzzy_not(a: Value) -> Value:
    return _out(fuzzy_not_dual(as_dual(a)), _plain(a))


# STL

@dataclass(frozen=True)
class StlEvalTrace:
    conjunct_values: Tuple[float, ...]
    a_min: float
    a_tilde: Tuple[float, ...]
    branch: StlBranch
    clamped: bool = False


def _clip_exponent(x: DualNumber, hits: List[bool]) -> DualNumber:
    if -EXP_CLAMP <= x.value <= EXP_CLAMP:
        return x
    hits.append(True)
    return clamp(x, -EXP_CLAMP, EXP_CLAMP)


def stl_and_dual(
    values: Sequence[DualNumber], nu: float, literal: bool = False
) -> Tuple[DualNumber, StlEvalTrace]:
    if len(values) < 2:
        raise ConfigError(f"STL conjunction needs at least 2 conjuncts, got {len(values)}")
    if nu <= 0.0:
        raise ConfigError(f"STL nu must be > 0, got {nu}")

    a_min = values[0]
    for v in values[1:]:
        a_min = dmin(a_min, v)
    conjuncts = tuple(v.value for v in values)

    record_branch(a_min.value)
    if abs(a_min.value) < STL_ZERO_SNAP:
        trace = StlEvalTrace(conjuncts, a_min.value, tuple(0.0 for _ in values), StlBranch.ZERO)
        return ZERO, trace

    a_tilde = [(v - a_min) / a_min for v in values]
    hits: List[bool] = []
    num, den = ZERO, ZERO
    if a_min.value < 0.0:
        branch = StlBranch.NEG
        for t in a_tilde:
            weight = dexp(_clip_exponent(nu * t, hits))
            num = num + a_min * dexp(_clip_exponent(t, hits)) * weight
            den = den + weight
    else:
        branch = StlBranch.POS
        for v, t in zip(values, a_tilde):
            weight = dexp(_clip_exponent(-nu * t, hits))
            num = num + (a_min if literal else v) * weight
            den = den + weight

    trace = StlEvalTrace(conjuncts, a_min.value, tuple(t.value for t in a_tilde), branch, bool(hits))
    return num / den, trace


def stl_and(values: Sequence[Value], nu: float = 1.0, literal: bool = False) -> Tuple[Value, StlEvalTrace]:
    result, trace = stl_and_dual([as_dual(v) for v in values], nu, literal)
    return _out(result, _plain(*values)), trace


def stl_not(a: Value) -> Value:
    return -a
