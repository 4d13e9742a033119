"""Exact Stirling, tanh and Lah number triangles, their inverse relations,
the associated polynomial families, and cumulant matching of shifted-gamma
and negative binomial distributions."""

from .errors import DomainError, IntegrityError, UsageError
from .series import Family, PowerSeries, bernoulli, family_egf
from .triangles import entry, lah_explicit, row
from .conversions import RULES, convert_entry, corollary_sum, m1_identity, orthogonality_check
from .polynomials import Polynomial, entry_via_poly, lah_poly, stirling_poly, tanh_poly
from .cumulants import NegBinParams, ShiftedGammaParams, match_nb_to_sg, match_sg_to_nb

__version__ = "0.1.0"

__all__ = [
    "DomainError", "IntegrityError", "UsageError",
    "Family", "PowerSeries", "bernoulli", "family_egf",
    "entry", "lah_explicit", "row",
    "RULES", "convert_entry", "corollary_sum", "m1_identity", "orthogonality_check",
    "Polynomial", "entry_via_poly", "lah_poly", "stirling_poly", "tanh_poly",
    "NegBinParams", "ShiftedGammaParams", "match_nb_to_sg", "match_sg_to_nb",
]
