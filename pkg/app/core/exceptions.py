"""
Exceptions for the differentiable-logic compiler.

Every error carries the CLI exit code it maps to.
"""
from typing import Any, Optional


class DLCError(Exception):
    """Base exception for all compiler errors."""
    exit_code: int = 3


class ParseError(DLCError):
    """Raised when constraint text does not conform to the grammar."""
    exit_code = 2

    def __init__(self, message: str, line: int = 0, column: int = 0):
        if line:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class ArityError(ParseError):
    """Raised when a conjunction has the wrong number of children."""
    pass


class UnknownPredicateError(ParseError):
    """Raised for comparisons or connectives outside the language."""
    pass


class ConfigError(DLCError):
    """Raised when parameters or input files are invalid."""
    exit_code = 3


class UnboundVariableError(DLCError):
    """Raised when a formula mentions a variable the environment lacks."""
    exit_code = 3

    def __init__(self, name: str):
        super().__init__(f"Unbound variable '{name}'")
        self.name = name


class NNFUnsupportedError(DLCError):
    """Raised when DL2 meets a negated conjunction."""
    exit_code = 3


class OracleMismatchError(DLCError):
    """Raised when the atom oracle does not fit the semantics."""
    exit_code = 3


class DomainViolationError(DLCError):
    """Raised when a connective receives a value outside its domain."""
    exit_code = 3


class ArithmeticFault(DLCError):
    """Raised on division by zero or a non-finite intermediate result."""
    exit_code = 3


class DivergenceError(DLCError):
    """Raised when training produces a non-finite loss."""
    exit_code = 4

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report
