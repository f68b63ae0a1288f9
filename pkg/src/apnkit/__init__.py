"""Exact-arithmetic toolkit for power maps x -> x^d over GF(p^n).

Computes differential uniformity, checks the Hermite-Dickson criterion
for the derivative (x+1)^d - x^d, and generates the known APN exponent
families in characteristic 3 and 5.
"""

from .diffspec import (
    DifferentialSpectrum,
    ExponentClass,
    apn_search,
    cyclotomic_coset,
    delta,
    hermite_dickson_is_permutation,
    is_apn,
    is_permutation_derivative,
    spectrum,
    symbolic_power_reduce,
)
from .errors import (
    ApnKitError,
    InvariantError,
    NoSolutionError,
    NotInvertibleError,
    ParameterError,
    ResourceError,
)
from .ffield import FieldElement, FieldSpec, build_field
from .numth import (
    DigitVector,
    HermiteReport,
    exact_binomial,
    hermite_coefficient,
    lucas_binomial,
    mod_inverse,
    p_adic_digits,
)

__version__ = "0.1.0"
