"""Exact arithmetic for the rational symmetry groups of Fermat-type forms.

The package realizes one algebraic picture at three sizes of symmetry group:

- the infinite rational rotation-reflection group of x^2 + y^2 = 1 and its
  hyperbolic twin for x^2 - y^2 = 1, each parametrized by one projective
  rational and acting transitively on the curve's rational points;
- the finite monomial groups preserving x_1^k + ... + x_n^k for k >= 3,
  whose orbits through (1, 0) contain no new rational points;
- exhaustive bounded-height searches and exact iteration that check both
  pictures numerically without a single floating-point operation.

Everything is Fraction or cyclotomic arithmetic; every solver verifies its
own answer before returning, and the audit module re-derives each identity
by an independent route.
"""

from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial, euler_phi
from .errors import InvalidArgumentError, ResourceLimitError
from .rationals import (
    INF,
    Infinity,
    Mat2,
    ProjectiveRational,
    height,
    rational,
)

__version__ = "0.1.0"

__all__ = [
    "CyclotomicNumber",
    "INF",
    "Infinity",
    "InvalidArgumentError",
    "Mat2",
    "ProjectiveRational",
    "ResourceLimitError",
    "__version__",
    "cyclotomic_polynomial",
    "euler_phi",
    "height",
    "rational",
]
