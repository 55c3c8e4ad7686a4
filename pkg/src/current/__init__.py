"""
Álgebras de correntes multipontuais g ⊗ A e suas extensões centrais.
"""

from .lie import FinDimLie
from .current import (
    CurrentElement,
    ExtendedElement,
    CurrentCocycle,
    current_bracket,
    extended_bracket,
    sample_current_triples,
    all_current_triples,
    jacobi_check,
    current_cocycle_check,
    psi_form,
    reductive_counterexample,
)

__all__ = [
    "FinDimLie",
    "CurrentElement",
    "ExtendedElement",
    "CurrentCocycle",
    "current_bracket",
    "extended_bracket",
    "sample_current_triples",
    "all_current_triples",
    "jacobi_check",
    "current_cocycle_check",
    "psi_form",
    "reductive_counterexample",
]
