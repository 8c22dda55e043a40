"""
Differentiable-logic semantics: connectives, atom oracles and the formula compiler.
"""
from .base import BaseSemantics
from .compiler import CompiledLoss, compile_loss, eval_loss, evaluate_dual, stl_trace
from .connectives import (
    StlEvalTrace,
    dl2_and,
    fuzzy_not,
    goedel_and,
    lukasiewicz_and,
    product_and,
    stl_and,
    stl_not,
    yager_and,
)
from .oracles import atom_oracle_eval, dl2_atom
from .registry import DOMAINS, default_oracle, domain_true, get_semantics

__all__ = [
    "BaseSemantics",
    "CompiledLoss",
    "DOMAINS",
    "StlEvalTrace",
    "atom_oracle_eval",
    "compile_loss",
    "default_oracle",
    "dl2_and",
    "dl2_atom",
    "domain_true",
    "eval_loss",
    "evaluate_dual",
    "fuzzy_not",
    "get_semantics",
    "goedel_and",
    "lukasiewicz_and",
    "product_and",
    "stl_and",
    "stl_not",
    "stl_trace",
    "yager_and",
]
