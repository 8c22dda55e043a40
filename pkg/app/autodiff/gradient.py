"""
Gradients of compiled losses: exact forward mode, central differences, kink distance.
"""
import logging
import math
from typing import Dict, Iterable, Optional, Tuple

from app.autodiff.dual import DualNumber
from app.autodiff.kinks import track_kinks
from app.core.exceptions import ConfigError, UnboundVariableError
from app.logic.env import Env
from app.semantics.compiler import CompiledLoss, eval_loss, evaluate_dual
from app.semantics.oracles import constant_env

logger = logging.getLogger(__name__)

Gradient = Dict[str, float]


def grad(loss: CompiledLoss, env: Env, wrt: Optional[Iterable[str]] = None) -> Tuple[float, Gradient]:
    """
    Value and partial derivatives, one forward pass per variable.

    `wrt` restricts differentiation to a subset of the loss' free variables.
    With no variables the value comes from a single constant pass.
    """
    names = sorted(loss.variables if wrt is None else set(wrt))
    base = constant_env(env)
    if not names:
        return evaluate_dual(loss, base).value, {}

    value = 0.0
    gradient: Gradient = {}
    for name in names:
        if name not in env:
            raise UnboundVariableError(name)
        seeded = dict(base)
        seeded[name] = DualNumber(float(env[name]), 1.0)
        result = evaluate_dual(loss, seeded)
        value = result.value
        gradient[name] = result.derivative
    return value, gradient


def finite_diff_grad(loss: CompiledLoss, env: Env, h: float) -> Gradient:
    """Central differences (f(x+h) - f(x-h)) / 2h per free variable."""
    if not h > 0:
        raise ConfigError(f"Finite-difference step must be > 0, got {h}")

    gradient: Gradient = {}
    for name in sorted(loss.variables):
        if name not in env:
            raise UnboundVariableError(name)
        up = dict(env)
        down = dict(env)
        up[name] = env[name] + h
        down[name] = env[name] - h
        gradient[name] = (eval_loss(loss, up) - eval_loss(loss, down)) / (2.0 * h)
    return gradient


def kink_margin(loss: CompiledLoss, env: Env) -> float:
    """Smallest distance to a branch switch met while evaluating; inf if none."""
    with track_kinks() as margins:
        evaluate_dual(loss, constant_env(env))
    return min(margins, default=math.inf)
