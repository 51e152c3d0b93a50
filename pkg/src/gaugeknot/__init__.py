"""Exact-arithmetic engine for the gauge-parametrized trigonometric
R-matrix of U_q[gl(2|1)] and the knot invariants of its spectral limits."""

__version__ = "0.1.0"
