"""
Matrizes de banda de ḡl(∞), o cocíclo padrão e o recuo γ_λ pelo mergulho Φ_λ.
"""

from .matrices import (
    BandedWindowMatrix,
    WedgeIndexMap,
    band_of,
    matmul,
    commutator,
    std_cocycle,
    random_banded,
    std_cocycle_check,
)
from .pullback import (
    PullbackCocycle,
    phi_lambda,
    pullback_cocycle,
    pullcyc_coefficients,
    pullcyc_raw_values,
    verify_pullcyc,
    homomorphism_check,
)

__all__ = [
    "BandedWindowMatrix",
    "WedgeIndexMap",
    "band_of",
    "matmul",
    "commutator",
    "std_cocycle",
    "random_banded",
    "std_cocycle_check",
    "PullbackCocycle",
    "phi_lambda",
    "pullback_cocycle",
    "pullcyc_coefficients",
    "pullcyc_raw_values",
    "verify_pullcyc",
    "homomorphism_check",
]
