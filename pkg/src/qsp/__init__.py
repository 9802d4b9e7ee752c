"""Exact computer algebra for the coideal subalgebra U_q'(gl2 x gl2) inside U_q(gl4)."""

__version__ = "0.1.0"
