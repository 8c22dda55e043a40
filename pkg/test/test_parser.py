"""
Test the constraint parser functionality.
"""
import pytest
from formula_gen import formulas
from hypothesis import given
from hypothesis import strategies as st

from app.core.exceptions import ArityError, ParseError, UnknownPredicateError
from app.logic import Atom, Conj, Const, Neg, Predicate, Var, load_formula, parse_formula, pretty_print


def test_parse_examples():
    test_cases = [
        ("x <= 3.0", Atom(Predicate.LE, Var("x"), Const(3.0))),
        (
            "and(x <= 0, not(x != 1))",
            Conj((Atom(Predicate.LE, Var("x"), Const(0.0)), Neg(Atom(Predicate.NEQ, Var("x"), Const(1.0))))),
        ),
        ("1 <= 2", Atom(Predicate.LE, Const(1.0), Const(2.0))),
        ("y1<=-2.5e-1", Atom(Predicate.LE, Var("y1"), Const(-0.25))),
        (
            "andM(a <= b, c <= d, e <= f)",
            Conj(
                (
                    Atom(Predicate.LE, Var("a"), Var("b")),
                    Atom(Predicate.LE, Var("c"), Var("d")),
                    Atom(Predicate.LE, Var("e"), Var("f")),
                ),
                nary=True,
            ),
        ),
    ]

    for text, expected in test_cases:
        assert parse_formula(text) == expected, text


def test_binary_and_is_not_flattened():
    f = parse_formula("and(a <= 0, and(b <= 0, c <= 0))")
    assert len(f.children) == 2
    assert not f.nary
    assert isinstance(f.children[1], Conj)


def test_comments_and_whitespace():
    text = "# keep x small\nand(\n  x <= 3,   # upper\n  x != 0\n)\n"
    assert parse_formula(text) == parse_formula("and(x <= 3, x != 0)")


@pytest.mark.parametrize(
    "text, error",
    [
        ("and(a <= b)", ArityError),
        ("andM(a <= b)", ArityError),
        ("and(a <= b, b <= c, c <= d)", ArityError),
        ("x < 3", UnknownPredicateError),
        ("x == 3", UnknownPredicateError),
        ("or(a <= b, b <= c)", UnknownPredicateError),
        ("and(a <= b, b <= c", ParseError),
        ("x <=", ParseError),
        ("x <= 3 y", ParseError),
        ("x <= $", ParseError),
        ("", ParseError),
    ],
)
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_formula(text)


def test_error_position():
    with pytest.raises(ParseError) as excinfo:
        parse_formula("and(x <= 1,\n    y <= )")
    assert excinfo.value.line == 2
    assert excinfo.value.column == 10
    assert "line 2" in str(excinfo.value)


def test_load_formula(tmp_path):
    path = tmp_path / "constraint.dlc"
    path.write_text("not(x <= 0)\n", encoding="utf-8")
    assert load_formula(str(path)) == Neg(Atom(Predicate.LE, Var("x"), Const(0.0)))

    with pytest.raises(ParseError):
        load_formula(str(tmp_path / "missing.dlc"))


@given(formulas(constants=st.floats(allow_nan=False, allow_infinity=False)))
def test_pretty_print_round_trip(f):
    assert parse_formula(pretty_print(f)) == f
