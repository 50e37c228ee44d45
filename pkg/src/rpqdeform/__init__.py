"""Exact (R,p,q)-deformed numbers, Rogers-Szego and Hermite polynomials, and ladder algebras."""
from .deformations import (
    IdentityReport,
    Kind,
    Params,
    Scheme,
    binomial,
    factorial,
    number,
    verify_binomial_identities,
    verify_number_identities,
    verify_reductions,
    verify_theorem_premises,
)
from .errors import RpqError
from .exactnum import LaurentPoly2, RationalFunction2, evaluate
from .hermite import UPoly, hermite_cosine_form, hermite_from_rs, hermite_recurrence
from .oscillator import (
    LadderAction,
    apply_ladder,
    check_general_algebra,
    check_scheme_algebra,
    matrix_rep,
)
from .qcalculus import ZPoly, pq_derivative, rpq_derivative
from .rogers_szego import RsFamily, rs_direct, rs_recurrence

__version__ = "0.1.0"

__all__ = [
    "IdentityReport", "Kind", "LadderAction", "LaurentPoly2", "Params", "RationalFunction2",
    "RpqError", "RsFamily", "Scheme", "UPoly", "ZPoly", "apply_ladder", "binomial",
    "check_general_algebra", "check_scheme_algebra", "evaluate", "factorial",
    "hermite_cosine_form", "hermite_from_rs", "hermite_recurrence", "matrix_rep", "number",
    "pq_derivative", "rpq_derivative", "rs_direct", "rs_recurrence",
    "verify_binomial_identities", "verify_number_identities", "verify_reductions",
    "verify_theorem_premises",
]
