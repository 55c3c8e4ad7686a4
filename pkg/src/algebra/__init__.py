"""
Operações de A, L, F^λ e D¹, tabelas de constantes de estrutura e
verificação da quase-graduação.
"""

from .operations import (
    FUNCTION_WEIGHT,
    VECTOR_WEIGHT,
    D1Element,
    multiply_forms,
    lie_derivative,
    vf_bracket,
    d1_bracket,
)
from .tables import OpKind, StructureTable, structure_table, apply_operation, boundary_coefficient_check
from .identities import (
    sample_indices,
    all_indices,
    jacobi_check,
    antisymmetry_check,
    leibniz_check,
    lie_module_check,
)

__all__ = [
    "FUNCTION_WEIGHT",
    "VECTOR_WEIGHT",
    "D1Element",
    "multiply_forms",
    "lie_derivative",
    "vf_bracket",
    "d1_bracket",
    "OpKind",
    "StructureTable",
    "structure_table",
    "apply_operation",
    "boundary_coefficient_check",
    "sample_indices",
    "all_indices",
    "jacobi_check",
    "antisymmetry_check",
    "leibniz_check",
    "lie_module_check",
]
