"""
Random formulas and environments shared by the property-based tests.
"""
from typing import Dict, List

import numpy as np
from hypothesis import strategies as st

from app.logic.formula import Atom, Conj, Const, Formula, Neg, Predicate, Var

VARIABLES = ("a", "b", "c", "d")

GRID = st.integers(-3, 3).map(float)


def terms(constants: st.SearchStrategy = GRID) -> st.SearchStrategy:
    return st.one_of(st.sampled_from(VARIABLES).map(Var), constants.map(Const))


def atoms(constants: st.SearchStrategy = GRID) -> st.SearchStrategy:
    return st.builds(Atom, st.sampled_from(list(Predicate)), terms(constants), terms(constants))


def _conjunctions(children: st.SearchStrategy) -> st.SearchStrategy:
    return st.one_of(
        st.tuples(children, children).map(Conj),
        st.lists(children, min_size=3, max_size=4).map(lambda cs: Conj(tuple(cs), nary=True)),
    )


def formulas(constants: st.SearchStrategy = GRID, negation: bool = True) -> st.SearchStrategy:
    """
    Formulas over VARIABLES. With negation=False, negation only appears
    directly above atoms (the fragment DL2 can translate).
    """
    leaves = atoms(constants)
    if negation:
        return st.recursive(leaves, lambda children: st.one_of(_conjunctions(children), children.map(Neg)),
                            max_leaves=8)
    return st.recursive(st.one_of(leaves, leaves.map(Neg)), _conjunctions, max_leaves=8)


def envs(values: st.SearchStrategy = GRID) -> st.SearchStrategy:
    return st.fixed_dictionaries({name: values for name in VARIABLES})


def atoms_of(f: Formula) -> List[Atom]:
    if isinstance(f, Atom):
        return [f]
    if isinstance(f, Conj):
        return [a for c in f.children for a in atoms_of(c)]
    return atoms_of(f.child)


# numpy-driven generators for suites that need many accepted samples

def random_atom(rng: np.random.Generator) -> Atom:
    lhs = Var(VARIABLES[int(rng.integers(len(VARIABLES)))])
    if rng.random() < 0.5:
        rhs = Var(VARIABLES[int(rng.integers(len(VARIABLES)))])
    else:
        rhs = Const(float(rng.integers(-3, 4)))
    predicate = Predicate.LE if rng.random() < 0.7 else Predicate.NEQ
    return Atom(predicate, lhs, rhs)


def random_formula(rng: np.random.Generator, depth: int = 4, negation: bool = True) -> Formula:
    if depth == 0 or rng.random() < 0.35:
        atom = random_atom(rng)
        if not negation and rng.random() < 0.3:
            return Neg(atom)
        return atom
    roll = rng.random()
    if negation and roll < 0.2:
        return Neg(random_formula(rng, depth - 1, negation))
    if roll < 0.6:
        return Conj((random_formula(rng, depth - 1, negation), random_formula(rng, depth - 1, negation)))
    m = int(rng.integers(3, 5))
    return Conj(tuple(random_formula(rng, depth - 1, negation) for _ in range(m)), nary=True)


def random_env(rng: np.random.Generator, lo: float = -5.0, hi: float = 5.0) -> Dict[str, float]:
    return {name: float(rng.uniform(lo, hi)) for name in VARIABLES}
