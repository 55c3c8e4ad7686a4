"""
Elementos-testemunha que distinguem o ciclo separador dos ciclos de ponto.

Par de funções: f_n = ((z−P_1)/(z−P_k))^n e g_n = f_n^{−1}, com
γ_{C_k}(f_n, g_n) = n, γ_{C_1}(f_n, g_n) = −n e γ_S(f_n, g_n) = 0.

Em P_1 = 0, P_k = 1, Q_1 = ∞:
    g_n = z^{−n}(z−1)^n,   e_n = z^n(z−1)^{1−n} d/dz,      e_n·g_n′ = n·z⁻¹
    f_n = z^{1−n}(z−1)^{n+1} d/dz, e_n = z^{n+1}(z−1)^{1−n} d/dz, [e_n, f_n] = 2n·z(z−1) d/dz
"""

import logging
from fractions import Fraction
from typing import Tuple

from src.algebra.operations import lie_derivative, vf_bracket
from src.core.ratfunc import RatFunc
from src.core.reports import CheckRecord, CheckReport
from src.forms.form import Form
from src.forms.marked_config import MarkedConfig

from .cycles import SEPARATING, CycleSpec
from .geometric import gamma_function

logger = logging.getLogger(__name__)

WITNESS_CONFIG = MarkedConfig.build(["0", "1"], ["inf"])


def separating_witnesses(cfg: MarkedConfig, k: int, n: int) -> Tuple[Form, Form]:
    """(f_n, g_n) com ordens ±n em P_1 e P_k, holomorfas fora deles."""
    if not 2 <= k <= cfg.K:
        raise ValueError(f"Índice k fora do intervalo 2..{cfg.K}: {k}")
    p1, pk = cfg.in_point(1).value, cfg.in_point(k).value
    f = RatFunc.from_factors(1, {p1: n, pk: -n})
    g = RatFunc.from_factors(1, {p1: -n, pk: n})
    return Form(0, f), Form(0, g)


def mixing_witness_pair(n: int) -> Tuple[Form, Form]:
    """(e_n, g_n) em I=(0,1), O=(∞)."""
    e = RatFunc.from_factors(1, {Fraction(0): n, Fraction(1): 1 - n})
    g = RatFunc.from_factors(1, {Fraction(0): -n, Fraction(1): n})
    return Form(-1, e), Form(0, g)


def vector_witness_pair(n: int) -> Tuple[Form, Form]:
    """(e_n, f_n) em I=(0,1), O=(∞)."""
    e = RatFunc.from_factors(1, {Fraction(0): n + 1, Fraction(1): 1 - n})
    f = RatFunc.from_factors(1, {Fraction(0): 1 - n, Fraction(1): n + 1})
    return Form(-1, e), Form(-1, f)


def separating_witness_check(cfg: MarkedConfig, max_n: int = 6) -> CheckReport:
    """γ_{C_k} = n, γ_{C_1} = −n e γ_S = 0 no par (f_n, g_n) para k = 2..K."""
    report = CheckReport("witnesses:separating")
    for k in range(2, cfg.K + 1):
        for n in range(1, max_n + 1):
            f, g = separating_witnesses(cfg, k, n)
            at_k = gamma_function(cfg, CycleSpec.point(k), f, g)
            at_1 = gamma_function(cfg, CycleSpec.point(1), f, g)
            separating = gamma_function(cfg, SEPARATING, f, g)
            report.add(CheckRecord.build(f"witnesses:k={k}:n={n}", (at_k, at_1, separating) == (n, -n, 0),
                                         point_k=at_k, point_1=at_1, separating=separating))
    return report


def growth_witness_check(max_n: int = 30) -> CheckReport:
    """Identidades exatas dos elementos de teste para n = 1..max_n."""
    report = CheckReport("growth")
    z = RatFunc.z()
    one = RatFunc.constant(1)
    for n in range(1, max_n + 1):
        e, g = mixing_witness_pair(n)
        action = lie_derivative(e, g).func
        expected = RatFunc.constant(n) / z
        report.add(CheckRecord.build(f"growth:mixing:n={n}", action == expected,
                                     value=action.to_string()))
        e, f = vector_witness_pair(n)
        bracket = vf_bracket(e, f).func
        expected = (z * (z - one)).scale(2 * n)
        report.add(CheckRecord.build(f"growth:vector:n={n}", bracket == expected,
                                     value=bracket.to_string()))
    report.extend(separating_witness_check(WITNESS_CONFIG, min(max_n, 10)))
    logger.info(f"Elementos de teste conferidos até n = {max_n}")
    return report
