"""
Avaliador exato de cocíclos em D¹ = A × L.

Um cocíclo é dado por até três componentes: fn em A×A, mix em L×A e vec
em L×L. Em pares de D¹,

    γ((g1, e1), (g2, e2)) = fn(g1, g2) + mix(e1, g2) − mix(e2, g1) + vec(e1, e2).

Uma forma de peso 0 conta como (g, 0) e uma de peso −1 como (0, e).
"""

import logging
import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, Optional, Tuple, Union

from src.algebra.operations import D1Element
from src.forms.basis import get_basis
from src.forms.form import BasisIndex, Form
from src.forms.marked_config import MarkedConfig

logger = logging.getLogger(__name__)

Component = Callable[[Form, Form], Fraction]
Argument = Union[Form, D1Element, BasisIndex]


class CocycleKind(Enum):
    """Tipos de cocíclo"""
    FUNCTION = "function"
    VECTOR = "vector"
    MIXING = "mixing"
    D1 = "d1"

    @classmethod
    def from_string(cls, value: str) -> 'CocycleKind':
        """Converte string para enum CocycleKind"""
        if isinstance(value, cls):
            return value
        for kind in cls:
            if kind.value == value.lower():
                return kind
        raise ValueError(f"Tipo '{value}' não é suportado. Tipos disponíveis: {', '.join([k.value for k in cls])}")


@dataclass(frozen=True)
class Provenance:
    """Origem do cocíclo: geometric, coboundary, pullback, extension, restriction ou linear-combination."""

    source: str
    detail: Tuple[Tuple[str, Any], ...] = ()

    @classmethod
    def of(cls, source: str, **detail) -> 'Provenance':
        return cls(source, tuple(sorted((k, str(v)) for k, v in detail.items())))

    def to_dict(self) -> Dict[str, Any]:
        return {"source": self.source, **dict(self.detail)}


class _Memo:
    """Componente memoizado por (func, func)."""

    def __init__(self, component: Component):
        self._component = component
        self._values: Dict[Tuple[Any, Any], Fraction] = {}
        self._lock = threading.Lock()

    def __call__(self, a: Form, b: Form) -> Fraction:
        if a.is_zero or b.is_zero:
            return Fraction(0)
        key = (a.func, b.func)
        value = self._values.get(key)
        if value is None:
            value = Fraction(self._component(a, b))
            with self._lock:
                value = self._values.setdefault(key, value)
        return value


def _combine(left: Optional[Component], right: Optional[Component],
             a: Fraction, b: Fraction) -> Optional[Component]:
    if left is None and right is None:
        return None
    if right is None:
        return lambda x, y: a * left(x, y)
    if left is None:
        return lambda x, y: b * right(x, y)
    return lambda x, y: a * left(x, y) + b * right(x, y)


def bilinear_from_basis(cfg: MarkedConfig, values: Callable[[BasisIndex, BasisIndex], Fraction]) -> Component:
    """
    Componente bilinear definido nos pares de base: expande os dois argumentos
    e soma Σ a_i b_j values(i, j).
    """
    basis = get_basis(cfg)

    def component(x: Form, y: Form) -> Fraction:
        left, right = basis.expand(x), basis.expand(y)
        total = Fraction(0)
        for i, a in left.items():
            for j, b in right.items():
                value = values(i, j)
                if value:
                    total += a * b * value
        return total

    return component


@dataclass(frozen=True)
class CocycleEvaluator:
    """
    Forma bilinear exata em D¹ com tipo e procedência.

    Os componentes ausentes valem zero. Avaliadores aceitam `+`, `-` e
    multiplicação por escalar (combinações lineares).
    """

    cfg: MarkedConfig
    kind: CocycleKind
    fn: Optional[Component] = None
    mix: Optional[Component] = None
    vec: Optional[Component] = None
    provenance: Provenance = field(default_factory=lambda: Provenance("custom"))

    @classmethod
    def build(cls, cfg: MarkedConfig, kind, provenance: Provenance, fn: Optional[Component] = None,
              mix: Optional[Component] = None, vec: Optional[Component] = None) -> 'CocycleEvaluator':
        return cls(cfg, CocycleKind.from_string(kind),
                   _Memo(fn) if fn else None, _Memo(mix) if mix else None, _Memo(vec) if vec else None,
                   provenance)

    def _lift(self, x: Argument) -> D1Element:
        if isinstance(x, BasisIndex):
            x = get_basis(self.cfg).basis_element(x)
        return D1Element.lift(x)

    def __call__(self, x: Argument, y: Argument) -> Fraction:
        a, b = self._lift(x), self._lift(y)
        total = Fraction(0)
        if self.fn is not None:
            total += self.fn(a.function_part, b.function_part)
        if self.mix is not None:
            total += self.mix(a.vf_part, b.function_part) - self.mix(b.vf_part, a.function_part)
        if self.vec is not None:
            total += self.vec(a.vf_part, b.vf_part)
        return total

    def evaluate(self, x: Argument, y: Argument) -> Fraction:
        return self(x, y)

    # Restrições

    def function_part(self) -> 'CocycleEvaluator':
        return CocycleEvaluator(self.cfg, CocycleKind.FUNCTION, fn=self.fn,
                                provenance=Provenance.of("restriction", part="function", of=self.provenance.source))

    def mixing_part(self) -> 'CocycleEvaluator':
        return CocycleEvaluator(self.cfg, CocycleKind.MIXING, mix=self.mix,
                                provenance=Provenance.of("restriction", part="mixing", of=self.provenance.source))

    def vector_part(self) -> 'CocycleEvaluator':
        return CocycleEvaluator(self.cfg, CocycleKind.VECTOR, vec=self.vec,
                                provenance=Provenance.of("restriction", part="vector", of=self.provenance.source))

    def as_d1(self) -> 'CocycleEvaluator':
        return CocycleEvaluator(self.cfg, CocycleKind.D1, self.fn, self.mix, self.vec, self.provenance)

    # Combinações lineares

    def combine(self, other: 'CocycleEvaluator', a, b) -> 'CocycleEvaluator':
        if self.cfg != other.cfg:
            raise ValueError("Cocíclos de configurações diferentes")
        a, b = Fraction(a), Fraction(b)
        kind = self.kind if self.kind == other.kind else CocycleKind.D1
        return CocycleEvaluator(
            self.cfg, kind,
            _combine(self.fn, other.fn, a, b),
            _combine(self.mix, other.mix, a, b),
            _combine(self.vec, other.vec, a, b),
            Provenance.of("linear-combination", left=self.provenance.source, right=other.provenance.source,
                          a=a, b=b),
        )

    def __add__(self, other: 'CocycleEvaluator') -> 'CocycleEvaluator':
        return self.combine(other, 1, 1)

    def __sub__(self, other: 'CocycleEvaluator') -> 'CocycleEvaluator':
        return self.combine(other, 1, -1)

    def __mul__(self, factor) -> 'CocycleEvaluator':
        if isinstance(factor, (int, Fraction)) and not isinstance(factor, bool):
            factor = Fraction(factor)
            return CocycleEvaluator(self.cfg, self.kind, _combine(self.fn, None, factor, 0),
                                    _combine(self.mix, None, factor, 0), _combine(self.vec, None, factor, 0),
                                    Provenance.of("linear-combination", left=self.provenance.source, a=factor))
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> 'CocycleEvaluator':
        return self * -1


def zero_cocycle(cfg: MarkedConfig, kind="d1") -> CocycleEvaluator:
    return CocycleEvaluator(cfg, CocycleKind.from_string(kind), provenance=Provenance("zero"))


def linear_combination(terms) -> CocycleEvaluator:
    """Σ c_i·γ_i a partir de pares (c_i, γ_i)."""
    terms = list(terms)
    if not terms:
        raise ValueError("Combinação linear vazia")
    result = None
    for coefficient, gamma in terms:
        scaled = gamma * Fraction(coefficient)
        result = scaled if result is None else result + scaled
    return result
