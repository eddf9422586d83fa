"""Exact tools for a hidden symmetry of Littlewood-Richardson coefficients.

The piecewise-linear involution f_mu on Z^n, its birational ancestor f_u
over an arbitrary semifield, Schur Laurent polynomials, and the sweeps
that check c^omega_{alpha,mu} = c^{phi(omega)}_{beta,mu}.
"""

from .laurent import LaurentPoly, NotDivisible
from .lr import LRQuery, lr_coeff, lr_family, lr_via_R, verify_main_theorem
from .semifield import QPLUS, TROPICAL, MinTropical, PositiveRationals, Semifield
from .symmetric import expand_in_schur_basis, schur_laurent
from .tropical import PhiParams, TropicalContext, f_mu, phi, phi_inverse, phi_trace
from .tuples import IntTuple, Snake, enumerate_R, parse_tuple

__all__ = [
    "IntTuple", "Snake", "enumerate_R", "parse_tuple",
    "Semifield", "PositiveRationals", "MinTropical", "QPLUS", "TROPICAL",
    "LaurentPoly", "NotDivisible", "schur_laurent", "expand_in_schur_basis",
    "TropicalContext", "PhiParams", "f_mu", "phi", "phi_inverse", "phi_trace",
    "LRQuery", "lr_coeff", "lr_family", "lr_via_R", "verify_main_theorem",
]
