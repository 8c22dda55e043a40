"""
Atom translations: DL2's own atom rules and the oracle used by fuzzy and STL semantics.
"""
from typing import Mapping

from app.autodiff.dual import DualNumber, dabs, dexp, dmax, indicator
from app.autodiff.kinks import record_branch
from app.core.exceptions import UnboundVariableError
from app.logic.env import Env
from app.logic.formula import Atom, Predicate, Term, Var
from app.schemas import AtomOracle, OracleMode

DualEnv = Mapping[str, DualNumber]

ZERO = DualNumber(0.0, 0.0)


def term_dual(term: Term, denv: DualEnv) -> DualNumber:
    if isinstance(term, Var):
        try:
            return denv[term.name]
        except KeyError:
            raise UnboundVariableError(term.name) from None
    return DualNumber(term.value, 0.0)


def constant_env(env: Env) -> dict:
    return {name: DualNumber(float(value), 0.0) for name, value in env.items()}


def dl2_atom_dual(atom: Atom, denv: DualEnv, xi: float) -> DualNumber:
    lhs = term_dual(atom.lhs, denv)
    rhs = term_dual(atom.rhs, denv)
    if atom.predicate is Predicate.LE:
        if atom.negated:
            # not(l <= r) is l > r: zero only when r < l strictly
            return dmax(rhs - lhs, ZERO) + xi * indicator(lhs, rhs)
        return dmax(lhs - rhs, ZERO)

    equal = indicator(lhs, rhs)
    if atom.negated:
        return xi * (1.0 - equal)
    return xi * equal


def dl2_atom(atom: Atom, env: Env, xi: float = 1.0) -> float:
    return dl2_atom_dual(atom, constant_env(env), xi).value


def _crisp(atom: Atom, denv: DualEnv) -> DualNumber:
    lhs = term_dual(atom.lhs, denv)
    rhs = term_dual(atom.rhs, denv)
    record_branch(lhs.value - rhs.value)
    if atom.predicate is Predicate.LE:
        holds = lhs.value <= rhs.value
    else:
        holds = lhs.value != rhs.value
    return DualNumber(1.0 if holds else 0.0, 0.0)


def _graded(atom: Atom, denv: DualEnv, scale: float) -> DualNumber:
    lhs = term_dual(atom.lhs, denv)
    rhs = term_dual(atom.rhs, denv)
    if atom.predicate is Predicate.LE:
        # 1 - max(l - r, 0)/s never exceeds 1, so only the lower clamp can bind
        return dmax(1.0 - dmax(lhs - rhs, ZERO) / scale, ZERO)
    return 1.0 - dexp(-dabs(lhs - rhs) / scale)


def _robustness(atom: Atom, denv: DualEnv) -> DualNumber:
    lhs = term_dual(atom.lhs, denv)
    rhs = term_dual(atom.rhs, denv)
    if atom.predicate is Predicate.LE:
        return rhs - lhs
    return dabs(lhs - rhs)


def atom_oracle_dual(atom: Atom, denv: DualEnv, oracle: AtomOracle) -> DualNumber:
    if oracle.mode is OracleMode.ROBUSTNESS:
        value = _robustness(atom, denv)
        return -value if atom.negated else value

    if oracle.mode is OracleMode.GRADED:
        value = _graded(atom, denv, oracle.scale)
    else:
        value = _crisp(atom, denv)
    return 1.0 - value if atom.negated else value


def atom_oracle_eval(atom: Atom, env: Env, oracle: AtomOracle) -> float:
    return atom_oracle_dual(atom, constant_env(env), oracle).value
