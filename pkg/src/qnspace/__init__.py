"""Exact symbolic kernel for a q-deformed n-space.

Coordinates x1..xn with x_i x_j = q^(j-i) x_j x_i (x1 invertible), their
Hopf structure, the twisted-derivation operator algebra, the bicovariant
first-order differential calculus, and the right-invariant forms with their
vector fields.  All arithmetic is exact over Laurent polynomials in q with
rational coefficients.
"""

from .calculus import Form, delta_left, delta_right, exterior_d, push_coeff_right
from .hopf import antipode, coproduct, counit, tau
from .invariants import (apply_vector_field, decompose_maurer_cartan,
                         degree_scale, maurer_cartan, maurer_cartan_basis)
from .operators import Operator, derive, sigma
from .parsing import ParseError, parse, parse_scalar
from .qspace import Element, swap_scalar, total_degree
from .scalar import LaurentScalar
from .tensors import Tensor

__version__ = "0.1.0"

__all__ = [
    "Element", "Form", "LaurentScalar", "Operator", "ParseError", "Tensor",
    "antipode", "apply_vector_field", "coproduct", "counit",
    "decompose_maurer_cartan", "degree_scale", "delta_left", "delta_right",
    "derive", "exterior_d", "maurer_cartan", "maurer_cartan_basis", "parse",
    "parse_scalar", "push_coeff_right", "sigma", "swap_scalar", "tau",
    "total_degree", "__version__",
]
