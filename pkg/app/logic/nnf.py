"""
Negation normal form.

Negations are pushed onto atoms as the `negated` flag. The language has no
disjunction, so a negated conjunction cannot be rewritten; it is kept as a
conjunction with `negated=True` and each semantics decides whether it can
evaluate it.
"""
from dataclasses import replace

from app.logic.formula import Atom, Conj, Formula, Neg


def to_nnf(f: Formula) -> Formula:
    return _nnf(f, negate=False)


def _nnf(f: Formula, negate: bool) -> Formula:
    if isinstance(f, Neg):
        return _nnf(f.child, not negate)
    if isinstance(f, Atom):
        return replace(f, negated=f.negated != negate)
    children = tuple(_nnf(c, negate=False) for c in f.children)
    return Conj(children, nary=f.nary, negated=f.negated != negate)


def is_nnf(f: Formula) -> bool:
    """True when no Neg node remains."""
    if isinstance(f, Neg):
        return False
    if isinstance(f, Atom):
        return True
    return all(is_nnf(c) for c in f.children)


def has_negated_conj(f: Formula) -> bool:
    if isinstance(f, Neg):
        return has_negated_conj(f.child)
    if isinstance(f, Atom):
        return False
    return f.negated or any(has_negated_conj(c) for c in f.children)
