"""
Tabelas de constantes de estrutura e verificação da quase-graduação.
"""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from src.config import get_threads
from src.core.rat import format_rat
from src.core.reports import CheckRecord, CheckReport
from src.forms.basis import Coefficients, get_basis
from src.forms.form import BasisIndex
from src.forms.marked_config import MarkedConfig

from .operations import FUNCTION_WEIGHT, VECTOR_WEIGHT, d1_bracket, lie_derivative, multiply_forms, vf_bracket

logger = logging.getLogger(__name__)

Pair = Tuple[BasisIndex, BasisIndex]


class OpKind(Enum):
    """Operações bilineares tabeláveis"""
    FUN_MUL = "fun_mul"
    VF_BRACKET = "vf_bracket"
    LIE_DERIVATIVE = "lie_derivative"
    D1_BRACKET = "d1_bracket"

    @classmethod
    def from_string(cls, value: str) -> 'OpKind':
        """Converte string para enum OpKind"""
        if isinstance(value, cls):
            return value
        for kind in cls:
            if kind.value == value.lower():
                return kind
        raise ValueError(f"Operação '{value}' não é suportada. Operações disponíveis: {', '.join([k.value for k in cls])}")


def operand_weights(kind: OpKind, weight: Optional[int] = None) -> List[Tuple[int, int]]:
    """Pesos (esquerda, direita) dos pares de base de cada operação."""
    if kind is OpKind.FUN_MUL:
        return [(FUNCTION_WEIGHT, FUNCTION_WEIGHT)]
    if kind is OpKind.VF_BRACKET:
        return [(VECTOR_WEIGHT, VECTOR_WEIGHT)]
    if kind is OpKind.LIE_DERIVATIVE:
        if weight is None:
            raise ValueError("lie_derivative exige o peso λ do módulo")
        return [(VECTOR_WEIGHT, weight)]
    return [(a, b) for a in (FUNCTION_WEIGHT, VECTOR_WEIGHT) for b in (FUNCTION_WEIGHT, VECTOR_WEIGHT)]


def apply_operation(cfg: MarkedConfig, kind: OpKind, x: BasisIndex, y: BasisIndex) -> Coefficients:
    """Aplica a operação a dois elementos de base e expande o resultado."""
    basis = get_basis(cfg)
    f, g = basis.basis_element(x), basis.basis_element(y)
    if kind is OpKind.FUN_MUL:
        results = [multiply_forms(f, g)]
    elif kind is OpKind.VF_BRACKET:
        results = [vf_bracket(f, g)]
    elif kind is OpKind.LIE_DERIVATIVE:
        results = [lie_derivative(f, g)]
    else:
        bracket = d1_bracket(f, g)
        results = [bracket.function_part, bracket.vf_part]
    coefficients: Coefficients = {}
    for form in results:
        coefficients.update(basis.expand(form))
    return coefficients


@dataclass
class StructureTable:
    """Constantes de estrutura de uma operação sobre uma janela de graus."""

    cfg: MarkedConfig
    op_kind: OpKind
    window: Tuple[int, int]
    weight: Optional[int] = None
    entries: Dict[Pair, Coefficients] = field(default_factory=dict)
    lower_shift: int = 0
    upper_shift: int = 0
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def pairs(self) -> List[Pair]:
        lo, hi = self.window
        result = []
        for left, right in operand_weights(self.op_kind, self.weight):
            for n in range(lo, hi + 1):
                for p in range(1, self.cfg.K + 1):
                    for m in range(lo, hi + 1):
                        for r in range(1, self.cfg.K + 1):
                            result.append((BasisIndex(left, n, p), BasisIndex(right, m, r)))
        return result

    def entry(self, x: BasisIndex, y: BasisIndex) -> Coefficients:
        """Entrada memoizada; calculada sob demanda."""
        key = (x, y)
        cached = self.entries.get(key)
        if cached is None:
            cached = apply_operation(self.cfg, self.op_kind, x, y)
            with self._lock:
                cached = self.entries.setdefault(key, cached)
        return cached

    def coefficient(self, x: BasisIndex, y: BasisIndex, h: BasisIndex) -> Fraction:
        return self.entry(x, y).get(h, Fraction(0))

    def update_shifts(self) -> None:
        shifts = [
            h.degree - (x.degree + y.degree)
            for (x, y), coefficients in self.entries.items()
            for h in coefficients
        ]
        self.lower_shift = min(shifts, default=0)
        self.upper_shift = max(shifts, default=0)

    def rows(self) -> List[Dict[str, Any]]:
        """Uma linha por ((n,p), (m,r), (h,t), coeficiente), em ordem determinística."""
        rows = []
        for (x, y) in sorted(self.entries):
            for h, value in sorted(self.entries[(x, y)].items()):
                rows.append({
                    "x_weight": x.weight, "n": x.degree, "p": x.point,
                    "y_weight": y.weight, "m": y.degree, "r": y.point,
                    "h_weight": h.weight, "h": h.degree, "t": h.point,
                    "coefficient": format_rat(value),
                })
        return rows

    def to_dict(self) -> Dict[str, Any]:
        return {
            "op_kind": self.op_kind.value,
            "weight": self.weight,
            "config": self.cfg.to_dict(),
            "window": list(self.window),
            "lower_shift": self.lower_shift,
            "upper_shift": self.upper_shift,
            "entries": self.rows(),
        }


def structure_table(cfg: MarkedConfig, op_kind, weight: Optional[int] = None,
                    window: Tuple[int, int] = (-5, 5), threads: Optional[int] = None) -> StructureTable:
    """
    Preenche a tabela inteira da janela em paralelo.

    Args:
        cfg: Configuração
        op_kind: OpKind ou nome
        weight: λ para lie_derivative
        window: Intervalo de graus [lo, hi] dos dois argumentos
        threads: Workers (padrão: KNC_THREADS)

    Returns:
        StructureTable com deslocamentos observados
    """
    op_kind = OpKind.from_string(op_kind)
    if window[0] > window[1]:
        raise ValueError(f"Janela inválida: {window}")
    table = StructureTable(cfg, op_kind, tuple(window), weight)
    pairs = table.pairs()
    workers = threads or get_threads()
    logger.info(f"Preenchendo tabela {op_kind.value} em {cfg}: {len(pairs)} pares, {workers} workers")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(table.entry, x, y): (x, y) for x, y in pairs}
        for future in as_completed(futures):
            future.result()
    table.update_shifts()
    logger.info(f"Tabela {op_kind.value}: deslocamentos ({table.lower_shift}, {table.upper_shift})")
    return table


def leading_value(op_kind: OpKind, weight: Optional[int], x: BasisIndex, y: BasisIndex) -> Tuple[int, Fraction]:
    """Peso do resultado e coeficiente de δ_p^r no grau n+m."""
    n, m = x.degree, y.degree
    if op_kind is OpKind.FUN_MUL:
        return FUNCTION_WEIGHT, Fraction(1)
    if op_kind is OpKind.VF_BRACKET:
        return VECTOR_WEIGHT, Fraction(m - n)
    if op_kind is OpKind.LIE_DERIVATIVE:
        return weight, Fraction(m + weight * n)
    if x.weight == VECTOR_WEIGHT and y.weight == VECTOR_WEIGHT:
        return VECTOR_WEIGHT, Fraction(m - n)
    if x.weight == VECTOR_WEIGHT:
        return FUNCTION_WEIGHT, Fraction(m)
    if y.weight == VECTOR_WEIGHT:
        return FUNCTION_WEIGHT, Fraction(-n)
    return FUNCTION_WEIGHT, Fraction(0)


def boundary_coefficient_check(table: StructureTable) -> CheckReport:
    """
    Confere o termo de grau n+m de cada par contra δ_p^r·c e que nenhum
    coeficiente fica abaixo de n+m.
    """
    report = CheckReport(f"boundary:{table.op_kind.value}")
    for x, y in sorted(table.pairs()):
        coefficients = table.entry(x, y)
        level = x.degree + y.degree
        result_weight, value = leading_value(table.op_kind, table.weight, x, y)
        below = sorted(h for h in coefficients if h.degree < level)
        got = [coefficients.get(BasisIndex(result_weight, level, t), Fraction(0)) for t in range(1, table.cfg.K + 1)]
        expected = [value if (x.point == y.point == t) else Fraction(0) for t in range(1, table.cfg.K + 1)]
        passed = not below and got == expected
        check_id = f"boundary:{x.to_list()}:{y.to_list()}"
        if passed:
            report.add(CheckRecord.build(check_id, True))
        else:
            report.add(CheckRecord.build(check_id, False, expected=expected, got=got,
                                         below=[h.to_list() for h in below]))
    return report
