"""Dirichlet L-functions, their a-points, and numerical checks of explicit
formulas for sums of L'(rho_a, chi) X^{rho_a} over a-points."""

__version__ = "0.1.0"
