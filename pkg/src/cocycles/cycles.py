"""
Ciclos formais: combinações inteiras de pequenos círculos em torno dos
pontos marcados, avaliadas como somas de resíduos.

Sintaxe: "sep" (ciclo separador Σ_i C_{P_i}), "P:1", "Q:2", "P:1+2*P:2",
"2*P:1-1*Q:1".
"""

import re
from dataclasses import dataclass
from typing import List, Tuple

from src.core.rat import RiemannPoint
from src.forms.marked_config import MarkedConfig

_TERM = re.compile(r"^\s*(?:(\d+)\s*\*\s*)?([PQ])\s*:\s*(\d+)\s*$")


@dataclass(frozen=True)
class CycleSpec:
    """
    Ciclo formal. `terms` guarda (lado, índice 1-based, peso) com lado "P"
    ou "Q"; `separating` representa C_S = Σ_i C_{P_i} para qualquer K.
    """

    terms: Tuple[Tuple[str, int, int], ...] = ()
    separating: bool = False

    def __post_init__(self):
        if not self.separating and not any(w for _, _, w in self.terms):
            raise ValueError("Ciclo sem nenhum peso não nulo")

    @classmethod
    def point(cls, i: int, side: str = "P", weight: int = 1) -> 'CycleSpec':
        return cls(((side, i, weight),))

    def points(self, cfg: MarkedConfig) -> List[Tuple[RiemannPoint, int]]:
        """Pontos marcados com seus pesos (termos repetidos são somados)."""
        if self.separating:
            return [(p, 1) for p in cfg.in_points]
        weights = {}
        for side, index, weight in self.terms:
            point = cfg.in_point(index) if side == "P" else cfg.out_point(index)
            weights[point] = weights.get(point, 0) + weight
        return [(pt, w) for pt, w in weights.items() if w]

    def __str__(self) -> str:
        if self.separating:
            return "sep"
        text = ""
        for side, index, weight in self.terms:
            body = f"{side}:{index}" if abs(weight) == 1 else f"{abs(weight)}*{side}:{index}"
            if weight < 0:
                text += "-" + body
            else:
                text += ("+" if text else "") + body
        return text


SEPARATING = CycleSpec(separating=True)


def parse_cycle(text: str) -> CycleSpec:
    """
    Lê a sintaxe de ciclos.

    Raises:
        ValueError: termo mal formado
    """
    cleaned = text.replace(" ", "")
    if cleaned.lower() in ("sep", "s"):
        return SEPARATING
    terms = []
    for sign, body in re.findall(r"([+-]?)([^+-]+)", cleaned):
        match = _TERM.match(body)
        if not match:
            raise ValueError(f"Termo de ciclo inválido: '{body}' (use 'sep', 'P:i', 'Q:j' ou 'c*P:i')")
        weight = int(match.group(1) or 1) * (-1 if sign == "-" else 1)
        terms.append((match.group(2), int(match.group(3)), weight))
    if not terms:
        raise ValueError(f"Ciclo vazio: '{text}'")
    return CycleSpec(tuple(terms))
