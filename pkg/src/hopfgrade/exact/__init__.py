"""Exact arithmetic: rationals, cyclotomic fields, polynomials, linear algebra."""

from fractions import Fraction as Rational

from .cyclotomic import Cyclotomic, cyclotomic_polynomial, cyclotomic_reduce, euler_phi
from .linalg import (
    Matrix,
    NoSolution,
    coordinates_in,
    det,
    kernel,
    mat_rank,
    rref,
    smith_diagonalize,
    solve_integer_congruences,
    solve_linear,
    solve_mod,
    span_basis,
)
from .poly import MPoly, RatFunc, monomials_up_to, poly_gcd, poly_sqrt

__all__ = [
    "Rational",
    "Cyclotomic",
    "cyclotomic_polynomial",
    "cyclotomic_reduce",
    "euler_phi",
    "Matrix",
    "NoSolution",
    "coordinates_in",
    "det",
    "kernel",
    "mat_rank",
    "rref",
    "smith_diagonalize",
    "solve_integer_congruences",
    "solve_linear",
    "solve_mod",
    "span_basis",
    "MPoly",
    "RatFunc",
    "monomials_up_to",
    "poly_gcd",
    "poly_sqrt",
]
