"""Exact arithmetic over Q, Q[t], Q(t) and Q[x, y]."""

from .poly import Poly, poly_gcd, poly_xgcd, poly_lcm, yun_squarefree, qpoly, SquareFree
from .ratfunc import RatFunc, rf, is_square_in_K, lueroth_degree
from .bipoly import BiPoly, resultant, discriminant_y
from .linalg import (
    Matrix,
    NoSolution,
    NotAnEmbeddingAction,
    mat_solve,
    hom_eval,
    charpoly,
    rank,
    rref,
    kernel,
    row_space_equal,
)
from .smith import smith_invariant_factors, invariant_factors_of, char_matrix
from .parse import parse_bipoly, parse_ratfunc, ParseError

__all__ = [
    "Poly", "poly_gcd", "poly_xgcd", "poly_lcm", "yun_squarefree", "qpoly", "SquareFree",
    "RatFunc", "rf", "is_square_in_K", "lueroth_degree",
    "BiPoly", "resultant", "discriminant_y",
    "Matrix", "NoSolution", "NotAnEmbeddingAction", "mat_solve", "hom_eval", "charpoly",
    "rank", "rref", "kernel", "row_space_equal",
    "smith_invariant_factors", "invariant_factors_of", "char_matrix",
    "parse_bipoly", "parse_ratfunc", "ParseError",
]
