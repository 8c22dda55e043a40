"""
Forward-mode automatic differentiation.

`app.autodiff.gradient` depends on the semantics compiler and is imported
on its own.
"""
from .dual import ArithOp, DualNumber, lift_arithmetic
from .kinks import record_branch, track_kinks

__all__ = ["ArithOp", "DualNumber", "lift_arithmetic", "record_branch", "track_kinks"]
