"""Exact symbolic toolkit for log symplectic Poisson structures.

Polynomial Poisson calculus (Schouten bracket, Pfaffian, modular vector field,
ellipticity), Groebner-basis ideal queries (Milnor numbers, dimension, rank
modulo an ideal) and the Chern-class / degree bookkeeping for Fano fourfolds.
"""

from .errors import BudgetExceeded, InputError, LogSympError, MathematicalNegative
from .polyring import VariableContext, Polynomial, parse_poly, partial_derivative, quasi_degree, exact_divide
from .multivector import Multivector, wedge, schouten, contract_exact, pfaffian, divergence, volume
from .ideals import (
    INFINITE,
    Budget,
    MonomialOrder,
    GroebnerBasis,
    groebner,
    normal_form,
    krull_dimension,
    quotient_dimension,
    milnor_number,
    rank_leq_mod_ideal,
)
from .poisson import (
    E6,
    E7,
    E8,
    PoissonStructure,
    from_brackets,
    jacobi_obstruction,
    degeneracy_divisor,
    modular_field,
    is_log_tangent,
    ellipticity_report,
    classify_singularity,
    normal_form_structure,
)

__all__ = [
    "BudgetExceeded",
    "InputError",
    "LogSympError",
    "MathematicalNegative",
    "VariableContext",
    "Polynomial",
    "parse_poly",
    "partial_derivative",
    "quasi_degree",
    "exact_divide",
    "Multivector",
    "wedge",
    "schouten",
    "contract_exact",
    "pfaffian",
    "divergence",
    "volume",
    "INFINITE",
    "Budget",
    "MonomialOrder",
    "GroebnerBasis",
    "groebner",
    "normal_form",
    "krull_dimension",
    "quotient_dimension",
    "milnor_number",
    "rank_leq_mod_ideal",
    "E6",
    "E7",
    "E8",
    "PoissonStructure",
    "from_brackets",
    "jacobi_obstruction",
    "degeneracy_divisor",
    "modular_field",
    "is_log_tangent",
    "ellipticity_report",
    "classify_singularity",
    "normal_form_structure",
    "__version__",
]

__version__ = "0.1.0"
