"""Supersingular polynomials of rank-2 Drinfeld modules and the tower they certify."""
from .drinfeld import DrinfeldModule, c_coeff, is_supersingular, j_invariant, normal_form, phi_of, pp_coeffs
from .errors import SupersingularError
from .field import FFElement, FieldTower, UPoly, build_tower
from .ssformula import H_explicit, H_lambda, SsPolynomial, property_suite, ss_count_by_j
from .towercert import genus_X0Tn, omega_compute, ratio_table, splitting_step

__version__ = "0.1.0"

__all__ = [
    "DrinfeldModule", "c_coeff", "is_supersingular", "j_invariant", "normal_form", "phi_of",
    "pp_coeffs", "SupersingularError", "FFElement", "FieldTower", "UPoly", "build_tower",
    "H_explicit", "H_lambda", "SsPolynomial", "property_suite", "ss_count_by_j",
    "genus_X0Tn", "omega_compute", "ratio_table", "splitting_step",
]
