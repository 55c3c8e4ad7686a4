"""
Identidades das álgebras verificadas em amostras: Jacobi, antissimetria,
Leibniz e a propriedade de módulo de Lie de F^λ.
"""

import logging
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from src.core.reports import CheckRecord, CheckReport
from src.forms.basis import get_basis
from src.forms.form import BasisIndex, Form
from src.forms.marked_config import MarkedConfig

from .operations import d1_bracket, lie_derivative, multiply_forms, vf_bracket

logger = logging.getLogger(__name__)

Triple = Tuple[BasisIndex, BasisIndex, BasisIndex]


def sample_indices(cfg: MarkedConfig, weights: Sequence[int], window: Tuple[int, int],
                   count: int, seed: int) -> List[Tuple[BasisIndex, ...]]:
    """
    Tuplas aleatórias de índices de base com graus na janela.

    Args:
        cfg: Configuração (fornece K)
        weights: Peso de cada posição da tupla
        window: Intervalo [lo, hi] de graus
        count: Número de tuplas
        seed: Semente do gerador numpy
    """
    rng = np.random.default_rng(seed)
    lo, hi = window
    degrees = rng.integers(lo, hi + 1, size=(count, len(weights)))
    points = rng.integers(1, cfg.K + 1, size=(count, len(weights)))
    return [
        tuple(BasisIndex(w, int(degrees[i, j]), int(points[i, j])) for j, w in enumerate(weights))
        for i in range(count)
    ]


def all_indices(cfg: MarkedConfig, weight: int, window: Tuple[int, int]) -> List[BasisIndex]:
    lo, hi = window
    return [BasisIndex(weight, n, p) for n in range(lo, hi + 1) for p in range(1, cfg.K + 1)]


def _witness(idx: Iterable[BasisIndex]) -> List[List[int]]:
    return [i.to_list() for i in idx]


def jacobi_check(cfg: MarkedConfig, triples: Iterable[Triple], kind: str = "vf") -> CheckReport:
    """[[a,b],c] + [[b,c],a] + [[c,a],b] = 0 para vf_bracket ("vf") ou d1_bracket ("d1")."""
    basis = get_basis(cfg)
    report = CheckReport(f"jacobi:{kind}")
    for triple in triples:
        a, b, c = (basis.basis_element(i) for i in triple)
        if kind == "vf":
            total = vf_bracket(vf_bracket(a, b), c) + vf_bracket(vf_bracket(b, c), a) + vf_bracket(vf_bracket(c, a), b)
            residual = [total.func.to_string()]
            passed = total.is_zero
        else:
            total = d1_bracket(d1_bracket(a, b), c) + d1_bracket(d1_bracket(b, c), a) + d1_bracket(d1_bracket(c, a), b)
            residual = [total.function_part.func.to_string(), total.vf_part.func.to_string()]
            passed = total.is_zero
        report.add(CheckRecord.build(f"jacobi:{kind}:{_witness(triple)}", passed,
                                     **({} if passed else {"residual": residual})))
    return report


def antisymmetry_check(cfg: MarkedConfig, pairs: Iterable[Tuple[BasisIndex, BasisIndex]]) -> CheckReport:
    """[x, y] + [y, x] = 0 no colchete de D¹."""
    basis = get_basis(cfg)
    report = CheckReport("antisymmetry:d1")
    for x, y in pairs:
        a, b = basis.basis_element(x), basis.basis_element(y)
        total = d1_bracket(a, b) + d1_bracket(b, a)
        report.add(CheckRecord.build(f"antisymmetry:d1:{_witness((x, y))}", total.is_zero))
    return report


def leibniz_check(cfg: MarkedConfig, triples: Iterable[Triple]) -> CheckReport:
    """L_e(g·h) = (L_e g)·h + g·(L_e h) com e campo e g, h formas quaisquer."""
    basis = get_basis(cfg)
    report = CheckReport("leibniz")
    for triple in triples:
        e, g, h = (basis.basis_element(i) for i in triple)
        left = lie_derivative(e, multiply_forms(g, h))
        right = multiply_forms(lie_derivative(e, g), h) + multiply_forms(g, lie_derivative(e, h))
        difference = left - right
        report.add(CheckRecord.build(f"leibniz:{_witness(triple)}", difference.is_zero,
                                     **({} if difference.is_zero else {"residual": difference.func.to_string()})))
    return report


def lie_module_check(cfg: MarkedConfig, triples: Iterable[Triple]) -> CheckReport:
    """[L_e, L_f] g = L_{[e,f]} g em F^λ."""
    basis = get_basis(cfg)
    report = CheckReport("lie_module")
    for triple in triples:
        e, f, g = (basis.basis_element(i) for i in triple)
        left: Form = lie_derivative(e, lie_derivative(f, g)) - lie_derivative(f, lie_derivative(e, g))
        difference = left - lie_derivative(vf_bracket(e, f), g)
        report.add(CheckRecord.build(f"lie_module:{_witness(triple)}", difference.is_zero,
                                     **({} if difference.is_zero else {"residual": difference.func.to_string()})))
    return report
