"""
Classical boolean interpretation and free-variable collection.
"""
from typing import FrozenSet

from app.core.exceptions import UnboundVariableError
from app.logic.env import Env
from app.logic.formula import Atom, Conj, Formula, Predicate, Term, Var


def term_value(term: Term, env: Env) -> float:
    if isinstance(term, Var):
        try:
            return env[term.name]
        except KeyError:
            raise UnboundVariableError(term.name) from None
    return term.value


def atom_holds(atom: Atom, env: Env) -> bool:
    lhs = term_value(atom.lhs, env)
    rhs = term_value(atom.rhs, env)
    holds = lhs <= rhs if atom.predicate is Predicate.LE else lhs != rhs
    return holds != atom.negated


def interpret_bool(f: Formula, env: Env) -> bool:
    if isinstance(f, Atom):
        return atom_holds(f, env)
    if isinstance(f, Conj):
        # Evaluate every child so unbound variables surface regardless of order.
        values = [interpret_bool(c, env) for c in f.children]
        return all(values) != f.negated
    return not interpret_bool(f.child, env)


def free_vars(f: Formula) -> FrozenSet[str]:
    if isinstance(f, Atom):
        return frozenset(t.name for t in (f.lhs, f.rhs) if isinstance(t, Var))
    if isinstance(f, Conj):
        return frozenset().union(*(free_vars(c) for c in f.children))
    return free_vars(f.child)
