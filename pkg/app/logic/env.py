"""
Variable environments: a mapping from variable name to a finite real.
"""
import json
import math
from pathlib import Path
from typing import Any, Dict, Mapping

from app.core.exceptions import ConfigError, ParseError
from app.logic.formula import IDENT_RE

Env = Mapping[str, float]


def make_env(bindings: Mapping[str, Any]) -> Dict[str, float]:
    """Validate names and values, returning a plain float dict."""
    env: Dict[str, float] = {}
    for name, value in bindings.items():
        if not isinstance(name, str) or not IDENT_RE.fullmatch(name):
            raise ConfigError(f"Invalid variable name {name!r}")
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"Value for '{name}' must be a number, got {value!r}")
        try:
            number = float(value)
        except OverflowError:
            raise ConfigError(f"Value for '{name}' is too large for a float") from None
        if not math.isfinite(number):
            raise ConfigError(f"Value for '{name}' must be finite, got {value}")
        env[name] = number
    return env


def load_env(path: str) -> Dict[str, float]:
    """Load an env file: a JSON object mapping variable names to numbers."""
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise ParseError(f"Cannot read env file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"Env file {path} is not valid JSON: {e.msg}", e.lineno, e.colno) from e

    if not isinstance(raw, dict):
        raise ConfigError(f"Env file {path} must contain a JSON object")
    return make_env(raw)
