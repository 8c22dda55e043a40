"""
Constraint language: AST, parser, negation normal form, boolean semantics.
"""
from .env import Env, load_env, make_env
from .formula import (
    Atom,
    Conj,
    Const,
    Formula,
    Neg,
    Predicate,
    Term,
    Var,
    conj,
    conj_m,
    const,
    le,
    neg,
    neq,
    pretty_print,
    var,
)
from .interpret import free_vars, interpret_bool
from .nnf import to_nnf
from .parser import load_formula, parse_formula

__all__ = [
    "Atom",
    "Conj",
    "Const",
    "Env",
    "Formula",
    "Neg",
    "Predicate",
    "Term",
    "Var",
    "conj",
    "conj_m",
    "const",
    "free_vars",
    "interpret_bool",
    "le",
    "load_env",
    "load_formula",
    "make_env",
    "neg",
    "neq",
    "parse_formula",
    "pretty_print",
    "to_nnf",
    "var",
]
