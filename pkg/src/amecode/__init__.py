"""Exact verification toolkit for the four-qutrit perfect tensor, the
three-qutrit distance-2 code, their symmetry groups, and the associated
invariant theory, plus a floating-point norm-minimization module."""

__version__ = "0.1.0"
