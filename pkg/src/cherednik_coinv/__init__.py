"""Rational Cherednik algebras of G(r,p,n), non-symmetric Jack polynomials,
and the coinvariant ring with its descent basis, in exact arithmetic."""

from .cherednik import AlgebraContext, TWeight, casimir_h, dunkl, tweight_of, z_op
from .coinv import (descent_basis, flag_major_genfun, hilbert_series, invariant_generators,
                    normal_form, verify_decomposition)
from .exactfield import CyclotomicNumber, ParameterSet, zeta
from .jack import JackRecord, expected_weight, jack_f
from .polyring import Polynomial
from .reflgroup import ColoredPermutation, descent_data, enumerate_reflections

__version__ = "0.1.0"

__all__ = [
    "AlgebraContext", "ColoredPermutation", "CyclotomicNumber", "JackRecord", "ParameterSet",
    "Polynomial", "TWeight", "casimir_h", "descent_basis", "descent_data", "dunkl",
    "enumerate_reflections", "expected_weight", "flag_major_genfun", "hilbert_series",
    "invariant_generators", "jack_f", "normal_form", "tweight_of", "verify_decomposition",
    "z_op", "zeta",
]
