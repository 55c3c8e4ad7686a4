"""
Parâmetros de nível zero de cocíclos limitados superiormente por 0.

    function: γ(A_{−n,r}, A_{n,s}) = α_r·n·δ_r^s
    vector:   γ(e_{n,r}, e_{−n,s}) = ((n+1)n(n−1)/12·α + n·b_r)·δ_r^s
    mixing:   γ(e_{−n,r}, A_{n,s}) = (n(n−1)·α + n·b_r)·δ_r^s
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Tuple

from src.core.rat import format_rat
from src.core.reports import CheckRecord, CheckReport
from src.forms.form import BasisIndex

from .evaluator import CocycleEvaluator, CocycleKind

logger = logging.getLogger(__name__)


def _A(n: int, r: int) -> BasisIndex:
    return BasisIndex(0, n, r)


def _e(n: int, r: int) -> BasisIndex:
    return BasisIndex(-1, n, r)


@dataclass(frozen=True)
class LevelZeroParameters:
    """α_r e b_r por ponto de entrada (b vazio para o tipo function)."""

    kind: CocycleKind
    alpha: Tuple[Fraction, ...]
    b: Tuple[Fraction, ...] = ()

    @property
    def uniform_alpha(self) -> bool:
        return len(set(self.alpha)) == 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "alpha": [format_rat(a) for a in self.alpha],
            "b": [format_rat(v) for v in self.b],
        }


def extract_level_zero(gamma: CocycleEvaluator, kind=None) -> LevelZeroParameters:
    """
    Lê α_r e b_r dos valores de nível zero.

    function: α_r = γ(A_{−1,r}, A_{1,r}).
    vector:   α_r = 2γ(e_{2,r}, e_{−2,r}) − 4γ(e_{1,r}, e_{−1,r}), b_r = γ(e_{1,r}, e_{−1,r}).
    mixing:   α_r = ½(γ(e_{1,r}, A_{−1,r}) + γ(e_{−1,r}, A_{1,r})), b_r = γ(e_{−1,r}, A_{1,r}).

    Raises:
        ValueError: tipo d1 ou incompatível com γ
    """
    kind = CocycleKind.from_string(kind) if kind is not None else gamma.kind
    if kind is CocycleKind.D1:
        raise ValueError("Extração de nível zero exige tipo function, vector ou mixing")
    if gamma.kind not in (kind, CocycleKind.D1):
        raise ValueError(f"Cocíclo do tipo {gamma.kind.value} não admite extração {kind.value}")
    alpha, b = [], []
    for r in range(1, gamma.cfg.K + 1):
        if kind is CocycleKind.FUNCTION:
            alpha.append(gamma(_A(-1, r), _A(1, r)))
        elif kind is CocycleKind.VECTOR:
            one = gamma(_e(1, r), _e(-1, r))
            alpha.append(2 * gamma(_e(2, r), _e(-2, r)) - 4 * one)
            b.append(one)
        else:
            low = gamma(_e(-1, r), _A(1, r))
            alpha.append((gamma(_e(1, r), _A(-1, r)) + low) / 2)
            b.append(low)
    params = LevelZeroParameters(kind, tuple(alpha), tuple(b))
    logger.debug(f"Nível zero {kind.value}: {params.to_dict()}")
    return params


def level_zero_value(params: LevelZeroParameters, n: int, r: int, s: int) -> Fraction:
    """Valor previsto no par de nível zero de grau n."""
    if r != s:
        return Fraction(0)
    alpha = params.alpha[r - 1]
    if params.kind is CocycleKind.FUNCTION:
        return alpha * n
    b = params.b[r - 1]
    if params.kind is CocycleKind.VECTOR:
        return Fraction((n + 1) * n * (n - 1), 12) * alpha + n * b
    return n * (n - 1) * alpha + n * b


def level_zero_pair(kind: CocycleKind, n: int, r: int, s: int) -> Tuple[BasisIndex, BasisIndex]:
    if kind is CocycleKind.FUNCTION:
        return _A(-n, r), _A(n, s)
    if kind is CocycleKind.VECTOR:
        return _e(n, r), _e(-n, s)
    return _e(-n, r), _A(n, s)


def level_zero_formula_check(gamma: CocycleEvaluator, kind=None,
                             degree_window: Tuple[int, int] = (-8, 8)) -> CheckReport:
    """
    Confere as fórmulas fechadas de nível zero contra a avaliação direta para
    todo n da janela e todos r, s.
    """
    kind = CocycleKind.from_string(kind) if kind is not None else gamma.kind
    params = extract_level_zero(gamma, kind)
    report = CheckReport(f"levelzero:{kind.value}")
    K = gamma.cfg.K
    for n in range(degree_window[0], degree_window[1] + 1):
        for r in range(1, K + 1):
            for s in range(1, K + 1):
                x, y = level_zero_pair(kind, n, r, s)
                actual = gamma(x, y)
                expected = level_zero_value(params, n, r, s)
                report.add(CheckRecord.build(f"levelzero:{kind.value}:n={n}:r={r}:s={s}", actual == expected,
                                             expected=expected, actual=actual))
    return report
