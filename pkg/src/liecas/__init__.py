"""liecas: exact computer algebra for finite-dimensional Lie algebras.

Structure constants, Chevalley-Eilenberg cohomology, symplectic forms and
the Lie algebra index, left-symmetric products, Lagrangian extensions and
their restricted cohomology -- all over exact rational / rational-function
coefficients, with a CLI front end (``liecas``).
"""

from .scalars import MPoly, RatFunc, Rational, ScalarError, scalar, var
from .parsing import ParseError, parse_scalar
from .linalg import Matrix, char_poly, det_bareiss, invert, kernel_basis, pfaffian, rank_bareiss, solve_linear

__all__ = [
    "MPoly",
    "RatFunc",
    "Rational",
    "ScalarError",
    "ParseError",
    "Matrix",
    "scalar",
    "var",
    "parse_scalar",
    "char_poly",
    "det_bareiss",
    "invert",
    "kernel_basis",
    "pfaffian",
    "rank_bareiss",
    "solve_linear",
]
