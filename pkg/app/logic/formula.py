"""
AST of the constraint language: terms, atoms, n-ary conjunction, negation.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class Predicate(str, Enum):
    LE = "<="
    NEQ = "!="


@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __post_init__(self) -> None:
        if not IDENT_RE.fullmatch(self.name):
            raise ValueError(f"Invalid variable name '{self.name}'")


@dataclass(frozen=True, slots=True)
class Const:
    value: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise ValueError(f"Constants must be finite, got {self.value}")


Term = Union[Var, Const]


@dataclass(frozen=True, slots=True)
class Atom:
    """Comparison between two terms. `negated` is only ever set by to_nnf."""
    predicate: Predicate
    lhs: Term
    rhs: Term
    negated: bool = False


@dataclass(frozen=True, slots=True)
class Conj:
    """
    Conjunction of M >= 2 ordered children.

    `nary` records the `andM(...)` spelling; `and(a, b)` stays binary and is
    never flattened. `negated` marks a negation to_nnf could not push down.
    """
    children: Tuple["Formula", ...]
    nary: bool = False
    negated: bool = False

    def __post_init__(self) -> None:
        if len(self.children) < 2:
            raise ValueError(f"Conjunction needs at least 2 children, got {len(self.children)}")
        if not self.nary and len(self.children) != 2:
            raise ValueError("Binary and() takes exactly 2 children; use andM for more")


@dataclass(frozen=True, slots=True)
class Neg:
    child: "Formula"


Formula = Union[Atom, Conj, Neg]


def var(name: str) -> Var:
    return Var(name)


def const(value: float) -> Const:
    return Const(float(value))


def le(lhs: Term, rhs: Term) -> Atom:
    return Atom(Predicate.LE, lhs, rhs)


def neq(lhs: Term, rhs: Term) -> Atom:
    return Atom(Predicate.NEQ, lhs, rhs)


def conj(*children: Formula) -> Conj:
    return Conj(tuple(children))


def conj_m(*children: Formula) -> Conj:
    return Conj(tuple(children), nary=True)


def neg(child: Formula) -> Neg:
    return Neg(child)


def _format_term(term: Term) -> str:
    if isinstance(term, Var):
        return term.name
    return repr(term.value)


def pretty_print(f: Formula) -> str:
    """Canonical DSL text; parse_formula(pretty_print(f)) == f for parsed formulas."""
    if isinstance(f, Atom):
        text = f"{_format_term(f.lhs)} {f.predicate.value} {_format_term(f.rhs)}"
        return f"not({text})" if f.negated else text
    if isinstance(f, Conj):
        keyword = "andM" if f.nary else "and"
        text = f"{keyword}({', '.join(pretty_print(c) for c in f.children)})"
        return f"not({text})" if f.negated else text
    return f"not({pretty_print(f.child)})"
