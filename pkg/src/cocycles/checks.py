"""
Propriedades dos cocíclos verificadas em amostras de índices de base.

    antisymmetry:       γ(x, y) + γ(y, x) = 0
    cocycle_condition:  γ([x,y],z) + γ([y,z],x) + γ([z,x],y) = 0   (colchete de D¹)
    multiplicative:     γ(fg, h) + γ(gh, f) + γ(hf, g) = 0
    l_invariant:        γ(e.g, h) + γ(g, e.h) = 0
"""

import logging
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.algebra.identities import sample_indices
from src.algebra.operations import d1_bracket, lie_derivative, multiply_forms
from src.core.reports import CheckRecord, CheckReport
from src.forms.basis import get_basis
from src.forms.form import BasisIndex

from .evaluator import CocycleEvaluator, CocycleKind

logger = logging.getLogger(__name__)

# Padrões de peso das amostras de D¹ (0 = função, −1 = campo)
_D1_PATTERNS = [(a, b, c) for a in (0, -1) for b in (0, -1) for c in (0, -1)]


class CocycleProperty(Enum):
    """Propriedades verificáveis"""
    ANTISYMMETRY = "antisymmetry"
    COCYCLE_CONDITION = "cocycle_condition"
    MULTIPLICATIVE = "multiplicative"
    L_INVARIANT = "l_invariant"

    @classmethod
    def from_string(cls, value: str) -> 'CocycleProperty':
        """Converte string para enum CocycleProperty"""
        if isinstance(value, cls):
            return value
        for prop in cls:
            if prop.value == value.lower():
                return prop
        raise ValueError(f"Propriedade '{value}' não é suportada. Propriedades disponíveis: {', '.join([p.value for p in cls])}")


def _weights_for(kind: CocycleKind, prop: CocycleProperty) -> List[Tuple[int, ...]]:
    if prop is CocycleProperty.MULTIPLICATIVE:
        return [(0, 0, 0)]
    if prop is CocycleProperty.L_INVARIANT:
        return [(-1, 0, 0)]
    arity = 2 if prop is CocycleProperty.ANTISYMMETRY else 3
    if kind is CocycleKind.FUNCTION:
        return [(0,) * arity]
    if kind is CocycleKind.VECTOR:
        return [(-1,) * arity]
    if arity == 2:
        return [(-1, 0), (0, -1), (-1, -1), (0, 0)]
    return _D1_PATTERNS


def default_samples(gamma: CocycleEvaluator, prop, window: Tuple[int, int] = (-6, 6),
                    count: int = 20, seed: int = 0) -> List[Tuple[BasisIndex, ...]]:
    """
    Amostras aleatórias (numpy) adequadas à propriedade e ao tipo do cocíclo.

    Args:
        gamma: Cocíclo
        prop: Propriedade
        window: Janela de graus
        count: Amostras por padrão de pesos
        seed: Semente
    """
    prop = CocycleProperty.from_string(prop)
    samples: List[Tuple[BasisIndex, ...]] = []
    for offset, weights in enumerate(_weights_for(gamma.kind, prop)):
        samples.extend(sample_indices(gamma.cfg, weights, window, count, seed + offset))
    return samples


def _identity(gamma: CocycleEvaluator, prop: CocycleProperty, sample: Sequence[BasisIndex]) -> Fraction:
    basis = get_basis(gamma.cfg)
    forms = [basis.basis_element(i) for i in sample]
    if prop is CocycleProperty.ANTISYMMETRY:
        x, y = forms
        return gamma(x, y) + gamma(y, x)
    if prop is CocycleProperty.COCYCLE_CONDITION:
        x, y, z = forms
        return (gamma(d1_bracket(x, y), z) + gamma(d1_bracket(y, z), x) + gamma(d1_bracket(z, x), y))
    if prop is CocycleProperty.MULTIPLICATIVE:
        f, g, h = forms
        return (gamma(multiply_forms(f, g), h) + gamma(multiply_forms(g, h), f)
                + gamma(multiply_forms(h, f), g))
    e, g, h = forms
    return gamma(lie_derivative(e, g), h) + gamma(g, lie_derivative(e, h))


def check_cocycle_properties(gamma: CocycleEvaluator, prop,
                             samples: Optional[Iterable[Sequence[BasisIndex]]] = None,
                             window: Tuple[int, int] = (-6, 6), count: int = 20,
                             seed: int = 0) -> CheckReport:
    """
    Avalia a identidade da propriedade em cada amostra; nunca levanta por falha.

    Args:
        gamma: Cocíclo
        prop: antisymmetry, cocycle_condition, multiplicative ou l_invariant
        samples: Tuplas de BasisIndex; padrão: amostras aleatórias na janela

    Returns:
        CheckReport com o resíduo de cada amostra que falhou
    """
    prop = CocycleProperty.from_string(prop)
    if samples is None:
        samples = default_samples(gamma, prop, window, count, seed)
    report = CheckReport(f"{prop.value}:{gamma.provenance.source}")
    for sample in samples:
        residual = _identity(gamma, prop, sample)
        witness = [i.to_list() for i in sample]
        report.add(CheckRecord.build(f"{prop.value}:{witness}", residual == 0,
                                     **({} if residual == 0 else {"residual": residual})))
    if not report.passed:
        logger.info(f"Propriedade {prop.value} falhou em {len(report.failures)} amostras")
    return report


def first_violation(gamma: CocycleEvaluator, prop, samples=None, **kwargs) -> Optional[CheckRecord]:
    """Primeiro registro com falha, ou None."""
    report = check_cocycle_properties(gamma, prop, samples, **kwargs)
    failures = report.failures
    return failures[0] if failures else None


def random_coefficients(count: int, seed: int, bound: int = 5) -> List[Fraction]:
    """Coeficientes inteiros não nulos em [−bound, bound] (numpy)."""
    rng = np.random.default_rng(seed)
    values = rng.integers(1, bound + 1, size=count) * rng.choice([-1, 1], size=count)
    return [Fraction(int(v)) for v in values]
