"""
Test negation normal form and the boolean interpretation.
"""
import pytest
from formula_gen import envs, formulas
from hypothesis import given
from hypothesis import strategies as st

from app.core.exceptions import ConfigError, UnboundVariableError
from app.logic import Atom, Conj, Predicate, free_vars, interpret_bool, parse_formula, to_nnf
from app.logic.env import load_env, make_env
from app.logic.nnf import has_negated_conj, is_nnf


def test_to_nnf_examples():
    assert to_nnf(parse_formula("not(not(x <= 3))")) == parse_formula("x <= 3")

    negated = to_nnf(parse_formula("not(x <= 3)"))
    assert isinstance(negated, Atom)
    assert negated.predicate is Predicate.LE
    assert negated.negated

    marked = to_nnf(parse_formula("not(and(a <= b, c <= d))"))
    assert isinstance(marked, Conj)
    assert marked.negated
    assert not any(c.negated for c in marked.children)
    assert has_negated_conj(marked)
    assert is_nnf(marked)


def test_interpret_bool_examples():
    test_cases = [
        ("x <= 3", {"x": 2}, True),
        ("and(x <= 3, x != 2)", {"x": 2}, False),
        ("not(x != 2)", {"x": 2}, True),
        ("andM(x <= 3, y <= 3, x != y)", {"x": 1, "y": 2}, True),
    ]
    for text, env, expected in test_cases:
        assert interpret_bool(parse_formula(text), env) is expected, text


def test_unbound_variable():
    with pytest.raises(UnboundVariableError):
        interpret_bool(parse_formula("and(x <= 3, y <= 3)"), {"x": 0.0})


def test_free_vars():
    assert free_vars(parse_formula("x <= 3")) == {"x"}
    assert free_vars(parse_formula("and(x <= y, y != z)")) == {"x", "y", "z"}
    assert free_vars(parse_formula("1 <= 2")) == frozenset()


def test_make_env():
    assert make_env({"x": 3, "y": -0.5}) == {"x": 3.0, "y": -0.5}

    test_cases = [
        {"x": "3"},
        {"x": True},
        {"x": float("inf")},
        {"x": 10 ** 400},
        {"1x": 0.0},
    ]
    for bindings in test_cases:
        with pytest.raises(ConfigError):
            make_env(bindings)


def test_load_env_rejects_huge_integers(tmp_path):
    path = tmp_path / "env.json"
    path.write_text('{"x": ' + "9" * 400 + "}", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_env(str(path))


@given(formulas(), envs())
def test_nnf_preserves_truth(f, env):
    nnf = to_nnf(f)
    assert is_nnf(nnf)
    assert interpret_bool(nnf, env) == interpret_bool(f, env)
    assert free_vars(nnf) == free_vars(f)


@given(st.lists(formulas(), min_size=2, max_size=5), envs(), st.data())
def test_conjunction_is_order_independent(children, env, data):
    permuted = data.draw(st.permutations(children))
    original = Conj(tuple(children), nary=True)
    reordered = Conj(tuple(permuted), nary=True)
    assert interpret_bool(original, env) == interpret_bool(reordered, env)
    assert interpret_bool(original, env) == all(interpret_bool(c, env) for c in children)
