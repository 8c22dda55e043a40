"""
Compile formulas into losses and evaluate them.
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Union

from app.autodiff.dual import DualNumber
from app.core.exceptions import DomainViolationError
from app.logic.env import Env
from app.logic.formula import Formula
from app.logic.interpret import free_vars
from app.schemas import AtomOracle, SemanticsId, SemanticsParams
from app.semantics.base import BaseSemantics
from app.semantics.connectives import StlEvalTrace
from app.semantics.oracles import DualEnv, constant_env
from app.semantics.registry import default_oracle, get_semantics

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompiledLoss:
    """A formula bound to one semantics, its parameters and its atom oracle."""
    semantics: SemanticsId
    params: SemanticsParams
    oracle: AtomOracle
    nnf_root: Formula

    @property
    def impl(self) -> BaseSemantics:
        return get_semantics(self.semantics)

    @property
    def variables(self) -> FrozenSet[str]:
        return free_vars(self.nnf_root)


def compile_loss(
    f: Formula,
    s: Union[SemanticsId, str],
    params: Optional[SemanticsParams] = None,
    oracle: Optional[AtomOracle] = None,
) -> CompiledLoss:
    """
    Bind a formula to a semantics.

    DL2 converts to negation normal form and rejects negated conjunctions;
    the other semantics keep the formula shape. Without an explicit oracle
    the semantics' default is used.
    """
    semantics = get_semantics(s)
    params = params or SemanticsParams()
    oracle = oracle or default_oracle(semantics.id)
    semantics.check_oracle(oracle)
    root = semantics.prepare(f)
    logger.debug(f"Compiled formula under {semantics.name} with oracle {oracle.mode.value}")
    return CompiledLoss(semantics=semantics.id, params=params, oracle=oracle, nnf_root=root)


compile = compile_loss


def evaluate_dual(
    loss: CompiledLoss, denv: DualEnv, traces: Optional[List[StlEvalTrace]] = None
) -> DualNumber:
    return loss.impl.evaluate(loss.nnf_root, denv, loss.params, loss.oracle, traces)


def eval_loss(loss: CompiledLoss, env: Env) -> float:
    value = evaluate_dual(loss, constant_env(env)).value
    domain = loss.impl.domain
    if not domain.contains(value):
        raise DomainViolationError(f"{loss.semantics.value} loss {value} outside [{domain.lo}, {domain.hi}]")
    return value


def stl_trace(loss: CompiledLoss, env: Env) -> List[StlEvalTrace]:
    """Traces of every STL conjunction in evaluation order; empty for other semantics."""
    traces: List[StlEvalTrace] = []
    if loss.semantics is SemanticsId.STL:
        evaluate_dual(loss, constant_env(env), traces)
    return traces
