"""
Núcleo de aritmética exata: racionais, polinômios, funções racionais,
expansões de Laurent e resíduos.
"""

from .errors import (
    KNCError,
    ArithmeticDomainError,
    ConfigValidationError,
    WeightMismatchError,
    ResidueTheoremViolation,
    ReconstructionError,
    WindowTooSmallError,
    NotBoundedError,
    PropertyViolation,
)
from .rat import Rat, RiemannPoint, INFINITY, to_rat, parse_rat, format_rat, parse_point, format_point
from .poly import Poly
from .ratfunc import RatFunc, ORDER_OF_ZERO, order_at, rat_func_arith
from .laurent import LaurentSlice, clear_expansion_cache, laurent_coeffs, residue_1form, residue_of_product
from .reports import CheckRecord, CheckReport

__all__ = [
    "KNCError",
    "ArithmeticDomainError",
    "ConfigValidationError",
    "WeightMismatchError",
    "ResidueTheoremViolation",
    "ReconstructionError",
    "WindowTooSmallError",
    "NotBoundedError",
    "PropertyViolation",
    "Rat",
    "RiemannPoint",
    "INFINITY",
    "to_rat",
    "parse_rat",
    "format_rat",
    "parse_point",
    "format_point",
    "Poly",
    "RatFunc",
    "ORDER_OF_ZERO",
    "order_at",
    "rat_func_arith",
    "LaurentSlice",
    "clear_expansion_cache",
    "laurent_coeffs",
    "residue_1form",
    "residue_of_product",
    "CheckRecord",
    "CheckReport",
]
