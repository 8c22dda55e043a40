"""
Context-local recording of distances to non-differentiable switching points.

Branching primitives (min/max selection, abs, indicators, clamps, the STL
case split, crisp oracles) call `record_branch` with how far their input is
from the switch. Nothing is recorded unless `track_kinks()` is active, and
the recorder is a context variable, so concurrent evaluations never share it.
"""
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator, List, Optional

_margins: ContextVar[Optional[List[float]]] = ContextVar("kink_margins", default=None)


def record_branch(margin: float) -> None:
    margins = _margins.get()
    if margins is not None:
        margins.append(abs(margin))


@contextmanager
def track_kinks() -> Iterator[List[float]]:
    margins: List[float] = []
    token = _margins.set(margins)
    try:
        yield margins
    finally:
        _margins.reset(token)
