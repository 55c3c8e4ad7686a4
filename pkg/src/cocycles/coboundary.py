"""
Cobordos dados por somas duais finitas.

    D_W(e, f) = ⟨W, [e, f]⟩,  W = Σ β_{n,r} Ω^{n,r}  (diferenciais quadráticos)
    E_V(e, g) = ⟨V, e.g⟩,     V = Σ β_{n,r} ω^{n,r}  (1-formas)

Ω^{n,r} = f^2_{−n,r} e ω^{n,r} = f^1_{−n,r} são os duais de e_{n,r} e A_{n,r}.
"""

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Mapping, Tuple, Union

from src.algebra.operations import lie_derivative, vf_bracket
from src.config.schemas import CoboundaryFile
from src.core.rat import format_rat, parse_rat
from src.forms.basis import get_basis
from src.forms.form import Form
from src.forms.marked_config import MarkedConfig

from .evaluator import CocycleEvaluator, CocycleKind, Provenance

logger = logging.getLogger(__name__)

_WEIGHTS = {"W": 2, "V": 1}


@dataclass(frozen=True)
class CoboundaryData:
    """
    Dados finitos de um cobordo.

    Attributes:
        kind: "W" (D_W, campos × campos) ou "V" (E_V, campos × funções)
        terms: pares ((n, r), β) com suporte finito
    """

    kind: str
    terms: Tuple[Tuple[Tuple[int, int], Fraction], ...] = ()

    def __post_init__(self):
        if self.kind not in _WEIGHTS:
            raise ValueError(f"Tipo de cobordo '{self.kind}' não suportado. Tipos disponíveis: V, W")

    @classmethod
    def of(cls, kind: str, terms: Mapping[Tuple[int, int], Any]) -> 'CoboundaryData':
        """Normaliza o mapa (n, r) → β, descartando coeficientes nulos."""
        cleaned = {}
        for (n, r), value in terms.items():
            value = value if isinstance(value, Fraction) else parse_rat(str(value))
            if value:
                cleaned[(int(n), int(r))] = value
        return cls(kind, tuple(sorted(cleaned.items())))

    @classmethod
    def empty(cls, kind: str) -> 'CoboundaryData':
        return cls(kind)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CoboundaryData':
        parsed = CoboundaryFile(**data)
        terms: Dict[Tuple[int, int], Fraction] = {}
        for n, r, value in parsed.terms:
            key = (int(n), int(r))
            terms[key] = terms.get(key, Fraction(0)) + parse_rat(str(value))
        return cls.of(parsed.kind, terms)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> 'CoboundaryData':
        with open(path, "r", encoding="utf-8") as handle:
            return cls.from_dict(json.load(handle))

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "terms": [[n, r, format_rat(b)] for (n, r), b in self.terms]}

    @property
    def weight(self) -> int:
        return _WEIGHTS[self.kind]

    @property
    def cocycle_kind(self) -> CocycleKind:
        return CocycleKind.VECTOR if self.kind == "W" else CocycleKind.MIXING

    @property
    def is_empty(self) -> bool:
        return not self.terms

    def as_mapping(self) -> Dict[Tuple[int, int], Fraction]:
        return dict(self.terms)

    def form(self, cfg: MarkedConfig) -> Form:
        """W ou V como forma na carta global."""
        basis = get_basis(cfg)
        total = Form.zero(self.weight)
        for (n, r), beta in self.terms:
            total = total + basis.element(self.weight, -n, r) * beta
        return total

    def scaled(self, factor) -> 'CoboundaryData':
        factor = Fraction(factor)
        return CoboundaryData.of(self.kind, {k: b * factor for k, b in self.terms})

    def __add__(self, other: 'CoboundaryData') -> 'CoboundaryData':
        if self.kind != other.kind:
            raise ValueError("Cobordos de tipos diferentes")
        merged = self.as_mapping()
        for key, beta in other.terms:
            merged[key] = merged.get(key, Fraction(0)) + beta
        return CoboundaryData.of(self.kind, merged)

    def __str__(self) -> str:
        body = ", ".join(f"({n},{r}):{format_rat(b)}" for (n, r), b in self.terms)
        return f"{self.kind}{{{body}}}"


def coboundary_value(cfg: MarkedConfig, data: CoboundaryData, x: Form, y: Form) -> Fraction:
    """
    D_W(e, f) ou E_V(e, g) pelo pareamento KN.

    Raises:
        WeightMismatchError: argumentos incompatíveis com o tipo do cobordo
    """
    if data.is_empty:
        return Fraction(0)
    argument = vf_bracket(x, y) if data.kind == "W" else lie_derivative(x, y)
    if argument.is_zero:
        return Fraction(0)
    return get_basis(cfg).pair(data.form(cfg), argument, cross_check=False)


def coboundary_cocycle(cfg: MarkedConfig, data: CoboundaryData) -> CocycleEvaluator:
    """Avaliador de D_W (tipo vector) ou E_V (tipo mixing)."""
    provenance = Provenance.of("coboundary", data=data)
    component = lambda x, y: coboundary_value(cfg, data, x, y)  # noqa: E731
    if data.kind == "W":
        return CocycleEvaluator.build(cfg, CocycleKind.VECTOR, provenance, vec=component)
    return CocycleEvaluator.build(cfg, CocycleKind.MIXING, provenance, mix=component)
