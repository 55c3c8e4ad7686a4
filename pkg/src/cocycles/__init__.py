"""
Cocíclos de A, L e D¹: geométricos, cobordos, propriedades, localidade,
nível zero e decomposição de cocíclos limitados.
"""

from .cycles import CycleSpec, SEPARATING, parse_cycle
from .connections import (
    AffConn,
    ProjConn,
    affine_connection_default,
    projective_connection_default,
    connection_transform_check,
    schwarzian,
)
from .evaluator import (
    CocycleEvaluator,
    CocycleKind,
    Provenance,
    bilinear_from_basis,
    linear_combination,
    zero_cocycle,
)
from .geometric import (
    gamma_function,
    gamma_vector,
    gamma_mixing,
    geometric_cocycle,
    separating_cocycle,
    point_cocycles,
)
from .coboundary import CoboundaryData, coboundary_value, coboundary_cocycle
from .checks import CocycleProperty, check_cocycle_properties, default_samples
from .locality import (
    LocalityReport,
    level_pairs,
    locality_scan,
    connection_locality_check,
    finiteness_check,
)
from .level_zero import LevelZeroParameters, extract_level_zero, level_zero_formula_check
from .decomposition import (
    DecompositionResult,
    decompose_bounded,
    split_d1_cocycle,
    extend_function_cocycle_to_d1,
    absorb_into_connection,
    absorption_check,
    independence_matrix,
    independence_check,
    synthetic_cocycle,
    decomposition_roundtrip_check,
    non_geometric_function_form,
    function_property_equivalence_check,
    single_in_point_check,
)
from .witnesses import separating_witnesses, separating_witness_check, growth_witness_check

__all__ = [
    "CycleSpec",
    "SEPARATING",
    "parse_cycle",
    "AffConn",
    "ProjConn",
    "affine_connection_default",
    "projective_connection_default",
    "connection_transform_check",
    "schwarzian",
    "CocycleEvaluator",
    "CocycleKind",
    "Provenance",
    "bilinear_from_basis",
    "linear_combination",
    "zero_cocycle",
    "gamma_function",
    "gamma_vector",
    "gamma_mixing",
    "geometric_cocycle",
    "separating_cocycle",
    "point_cocycles",
    "CoboundaryData",
    "coboundary_value",
    "coboundary_cocycle",
    "CocycleProperty",
    "check_cocycle_properties",
    "default_samples",
    "LocalityReport",
    "level_pairs",
    "locality_scan",
    "connection_locality_check",
    "finiteness_check",
    "LevelZeroParameters",
    "extract_level_zero",
    "level_zero_formula_check",
    "DecompositionResult",
    "decompose_bounded",
    "split_d1_cocycle",
    "extend_function_cocycle_to_d1",
    "absorb_into_connection",
    "absorption_check",
    "independence_matrix",
    "independence_check",
    "synthetic_cocycle",
    "decomposition_roundtrip_check",
    "non_geometric_function_form",
    "function_property_equivalence_check",
    "single_in_point_check",
    "separating_witnesses",
    "separating_witness_check",
    "growth_witness_check",
]
