"""
Recursive-descent parser for the constraint DSL.

    formula := atom | "and(" formula "," formula ")"
             | "andM(" formula ("," formula)+ ")" | "not(" formula ")"
    atom    := term ("<=" | "!=") term
    term    := IDENT | NUMBER
"""
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

from app.core.exceptions import ArityError, ParseError, UnknownPredicateError
from app.logic.formula import Atom, Conj, Const, Formula, Neg, Predicate, Term, Var

logger = logging.getLogger(__name__)

KEYWORDS = {"and", "andM", "not"}

TOKEN_SPEC = [
    ("NUMBER", r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"),
    ("IDENT", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("OP", r"<=|!=|>=|==|<|>|="),
    ("LPAREN", r"\("),
    ("RPAREN", r"\)"),
    ("COMMA", r","),
    ("NEWLINE", r"\n"),
    ("SKIP", r"[ \t\r]+"),
    ("COMMENT", r"#[^\n]*"),
    ("MISMATCH", r"."),
]
TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in TOKEN_SPEC))


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    line, line_start = 1, 0
    for match in TOKEN_RE.finditer(text):
        kind = match.lastgroup
        value = match.group()
        column = match.start() - line_start + 1
        if kind == "NEWLINE":
            line += 1
            line_start = match.end()
            continue
        if kind in ("SKIP", "COMMENT"):
            continue
        if kind == "MISMATCH":
            raise ParseError(f"Unexpected character {value!r}", line, column)
        tokens.append(Token(kind, value, line, column))
    tokens.append(Token("EOF", "", line, len(text) - line_start + 1))
    return tokens


class Parser:
    """Single-use parser over a token list."""

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    def _peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def _advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _expect(self, kind: str, what: str) -> Token:
        token = self._peek()
        if token.kind != kind:
            found = token.text or "end of input"
            raise ParseError(f"Expected {what}, found {found!r}", token.line, token.column)
        return self._advance()

    def parse(self) -> Formula:
        formula = self._formula()
        trailing = self._peek()
        if trailing.kind != "EOF":
            raise ParseError(f"Unexpected trailing input {trailing.text!r}", trailing.line, trailing.column)
        return formula

    def _formula(self) -> Formula:
        token = self._peek()
        if token.kind == "IDENT" and self._peek(1).kind == "LPAREN":
            if token.text not in KEYWORDS:
                raise UnknownPredicateError(f"Unknown connective '{token.text}'", token.line, token.column)
            self._advance()
            self._advance()
            if token.text == "not":
                child = self._formula()
                self._expect("RPAREN", "')'")
                return Neg(child)
            return self._conjunction(token)
        return self._atom()

    def _conjunction(self, keyword: Token) -> Conj:
        children = [self._formula()]
        while self._peek().kind == "COMMA":
            self._advance()
            children.append(self._formula())
        closing = self._peek()
        if closing.kind != "RPAREN":
            raise ParseError(f"Expected ',' or ')', found {closing.text or 'end of input'!r}", closing.line, closing.column)
        self._advance()

        if len(children) < 2:
            raise ArityError(f"{keyword.text}() needs at least 2 conjuncts, got {len(children)}", keyword.line, keyword.column)
        nary = keyword.text == "andM"
        if not nary and len(children) != 2:
            raise ArityError(f"and() takes exactly 2 conjuncts, got {len(children)}; use andM", keyword.line, keyword.column)
        return Conj(tuple(children), nary=nary)

    def _atom(self) -> Atom:
        lhs = self._term()
        op = self._peek()
        if op.kind != "OP":
            raise ParseError(f"Expected '<=' or '!=', found {op.text or 'end of input'!r}", op.line, op.column)
        if op.text not in (Predicate.LE.value, Predicate.NEQ.value):
            raise UnknownPredicateError(f"Unknown predicate '{op.text}'", op.line, op.column)
        self._advance()
        rhs = self._term()
        return Atom(Predicate(op.text), lhs, rhs)

    def _term(self) -> Term:
        token = self._peek()
        if token.kind == "IDENT":
            self._advance()
            return Var(token.text)
        if token.kind == "NUMBER":
            self._advance()
            try:
                return Const(float(token.text))
            except ValueError as e:
                raise ParseError(str(e), token.line, token.column) from e
        raise ParseError(f"Expected a variable or number, found {token.text or 'end of input'!r}", token.line, token.column)


def parse_formula(text: str) -> Formula:
    """Parse DSL text into a Formula."""
    return Parser(text).parse()


def load_formula(path: str, encoding: Optional[str] = "utf-8") -> Formula:
    """Read and parse a constraint file."""
    try:
        text = Path(path).read_text(encoding=encoding)
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"Cannot read formula file {path}: {e}") from e
    formula = parse_formula(text)
    logger.debug(f"Parsed formula from {path}")
    return formula
