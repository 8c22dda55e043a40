"""
Differentiable-logic constraint compiler.
"""
__version__ = "0.1.0"
