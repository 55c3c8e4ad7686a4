"""
Configurações de pontos marcados (I, O) em P¹.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Tuple, Union

from src.core.errors import ConfigValidationError
from src.core.rat import INFINITY, RiemannPoint, format_point, parse_point

logger = logging.getLogger(__name__)

PointLike = Union[RiemannPoint, str, int]


def _as_point(value: PointLike) -> RiemannPoint:
    if isinstance(value, RiemannPoint):
        return value
    return parse_point(str(value))


@dataclass(frozen=True)
class MarkedConfig:
    """
    Dados (I, O) de pontos de entrada e saída, gênero fixo 0.

    Os índices p dos pontos de entrada são 1-based, como em f^λ_{n,p}.
    """

    in_points: Tuple[RiemannPoint, ...]
    out_points: Tuple[RiemannPoint, ...]
    genus: int = 0

    @classmethod
    def build(cls, in_points: Iterable[PointLike], out_points: Iterable[PointLike]) -> 'MarkedConfig':
        return cls(tuple(_as_point(p) for p in in_points), tuple(_as_point(q) for q in out_points))

    @classmethod
    def classical(cls) -> 'MarkedConfig':
        """I = (0), O = (∞): a situação clássica de Witt/Virasoro."""
        return cls.build(["0"], ["inf"])

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'MarkedConfig':
        from src.config.schemas import MarkedConfigFile

        model = MarkedConfigFile(**data)
        return cls.build(model.in_points, model.out_points)

    def to_dict(self) -> Dict[str, List[str]]:
        return {
            "in_points": [format_point(p) for p in self.in_points],
            "out_points": [format_point(q) for q in self.out_points],
        }

    @property
    def K(self) -> int:
        return len(self.in_points)

    @property
    def M(self) -> int:
        return len(self.out_points)

    @property
    def N(self) -> int:
        return self.K + self.M

    @property
    def points(self) -> Tuple[RiemannPoint, ...]:
        return self.in_points + self.out_points

    @property
    def has_infinity(self) -> bool:
        return any(p.is_infinity for p in self.points)

    @property
    def finite_points(self) -> Tuple[RiemannPoint, ...]:
        return tuple(p for p in self.points if p.is_finite)

    def in_point(self, p: int) -> RiemannPoint:
        if not 1 <= p <= self.K:
            raise ValueError(f"Índice de ponto de entrada fora do intervalo: {p} (K={self.K})")
        return self.in_points[p - 1]

    def out_point(self, j: int) -> RiemannPoint:
        if not 1 <= j <= self.M:
            raise ValueError(f"Índice de ponto de saída fora do intervalo: {j} (N−K={self.M})")
        return self.out_points[j - 1]

    def __str__(self) -> str:
        ins = ",".join(format_point(p) for p in self.in_points)
        outs = ",".join(format_point(q) for q in self.out_points)
        return f"I=({ins}) O=({outs})"


def validate_config(cfg: MarkedConfig) -> Dict[str, Any]:
    """
    Verifica todos os invariantes de uma configuração.

    Returns:
        Dict com 'valid', 'errors', 'codes' e 'warnings'; cada violação
        aparece em 'errors' (mensagem) e em 'codes' (identificador estável)
    """
    validation = {
        'valid': True,
        'errors': [],
        'codes': [],
        'warnings': []
    }

    def fail(code: str, message: str) -> None:
        validation['valid'] = False
        validation['codes'].append(code)
        validation['errors'].append(message)

    if cfg.genus != 0:
        fail("genus", f"Somente gênero 0 é suportado (recebido {cfg.genus})")
    if cfg.K < 1:
        fail("empty_in", "Conjunto de pontos de entrada I vazio")
    if cfg.M < 1:
        fail("empty_out", "Conjunto de pontos de saída O vazio")

    seen = set()
    for point in cfg.points:
        if point in seen:
            fail("duplicate_point", f"duplicate point: {format_point(point)} aparece mais de uma vez")
        seen.add(point)

    if any(p.is_infinity for p in cfg.in_points):
        fail("infinity_in", "O infinito não pode ser ponto de entrada")

    if cfg.M > cfg.K:
        validation['warnings'].append("N−K > K: ordens de saída pela receita balanceada")

    return validation


def ensure_valid(cfg: MarkedConfig) -> MarkedConfig:
    """Levanta ConfigValidationError com todas as violações."""
    validation = validate_config(cfg)
    if not validation['valid']:
        logger.error(f"Configuração inválida {cfg}: {validation['errors']}")
        raise ConfigValidationError(validation['errors'])
    return cfg


__all__ = ["MarkedConfig", "validate_config", "ensure_valid", "INFINITY"]
