"""
Formas de peso λ em P¹ com pontos marcados: configurações, base graduada
f^λ_{n,p}, pareamento de Krichever–Novikov e graduação invertida.
"""

from .marked_config import MarkedConfig, validate_config, ensure_valid
from .form import Form, BasisIndex, OrderPrescription, format_form
from .basis import (
    KNBasis,
    Coefficients,
    get_basis,
    order_prescription,
    basis_element,
    kn_pairing,
    expand_in_basis,
    dual_basis_element,
    expansion_support,
)
from .inverted import MobiusMap, InvertedConfig, inverted_config, transport_form, inverted_grading_report

__all__ = [
    "MarkedConfig",
    "validate_config",
    "ensure_valid",
    "Form",
    "BasisIndex",
    "OrderPrescription",
    "format_form",
    "KNBasis",
    "Coefficients",
    "get_basis",
    "order_prescription",
    "basis_element",
    "kn_pairing",
    "expand_in_basis",
    "dual_basis_element",
    "expansion_support",
    "MobiusMap",
    "InvertedConfig",
    "inverted_config",
    "transport_form",
    "inverted_grading_report",
]
