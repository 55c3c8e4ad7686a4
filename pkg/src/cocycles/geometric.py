"""
Cocíclos geométricos como somas de resíduos sobre ciclos formais.

    γ_C^{(f)}(g, h) = Σ_P w_P res_P(g h′)
    γ_{C,R}^{(v)}(e, f) = (1/12) Σ_P w_P res_P(½(e‴f − e f‴) − R(e′f − e f′))
    γ_{C,T}^{(m)}(e, g) = Σ_P w_P res_P(e g″ + T e g′)
"""

import logging
from fractions import Fraction
from typing import List, Optional, Union

from src.core.errors import WeightMismatchError
from src.core.laurent import residue_of_product
from src.forms.form import Form
from src.forms.marked_config import MarkedConfig

from .connections import AffConn, ProjConn, affine_connection_default, projective_connection_default
from .cycles import SEPARATING, CycleSpec, parse_cycle
from .evaluator import CocycleEvaluator, CocycleKind, Provenance

logger = logging.getLogger(__name__)

_HALF = Fraction(1, 2)
_TWELFTH = Fraction(1, 12)


def _check(form: Form, weight: int, name: str) -> None:
    if form.weight != weight:
        raise WeightMismatchError(f"{name} deve ter peso {weight} (recebido {form.weight})")


def _cycle_sum(cfg: MarkedConfig, cycle: CycleSpec, terms) -> Fraction:
    """Σ_P w_P Σ_k c_k res_P(Π fatores_k) com termos (c_k, fatores_k)."""
    total = Fraction(0)
    for point, weight in cycle.points(cfg):
        local = Fraction(0)
        for coefficient, factors in terms:
            value = residue_of_product(factors, point)
            if value:
                local += coefficient * value
        total += weight * local
    return total


def gamma_function(cfg: MarkedConfig, cycle: CycleSpec, g: Form, h: Form) -> Fraction:
    """γ_C(g, h) = (1/2πi)∫_C g dh"""
    _check(g, 0, "g")
    _check(h, 0, "h")
    return _cycle_sum(cfg, cycle, [(1, ((g.func, 0), (h.func, 1)))])


def gamma_vector(cfg: MarkedConfig, cycle: CycleSpec, R: ProjConn, e: Form, f: Form) -> Fraction:
    """Cocíclo de campos de vetores com prefator 1/12 sobre a soma de resíduos."""
    _check(e, -1, "e")
    _check(f, -1, "f")
    terms = [
        (_HALF, ((e.func, 3), (f.func, 0))),
        (-_HALF, ((e.func, 0), (f.func, 3))),
    ]
    r = R.func
    if not r.is_zero:
        terms += [
            (-1, ((r, 0), (e.func, 1), (f.func, 0))),
            (1, ((r, 0), (e.func, 0), (f.func, 1))),
        ]
    return _TWELFTH * _cycle_sum(cfg, cycle, terms)


def gamma_mixing(cfg: MarkedConfig, cycle: CycleSpec, T: AffConn, e: Form, g: Form) -> Fraction:
    """Cocíclo misto em (campo, função)."""
    _check(e, -1, "e")
    _check(g, 0, "g")
    terms = [(1, ((e.func, 0), (g.func, 2)))]
    t = T.func
    if not t.is_zero:
        terms.append((1, ((t, 0), (e.func, 0), (g.func, 1))))
    return _cycle_sum(cfg, cycle, terms)


def geometric_cocycle(cfg: MarkedConfig, kind, cycle: Union[CycleSpec, str] = SEPARATING,
                      connection: Optional[Union[AffConn, ProjConn]] = None) -> CocycleEvaluator:
    """
    Avaliador do cocíclo geométrico do tipo pedido.

    Args:
        cfg: Configuração
        kind: function, vector ou mixing
        cycle: CycleSpec ou sintaxe textual
        connection: R (vector) ou T (mixing); padrão R⁰ ou T⁰
    """
    kind = CocycleKind.from_string(kind)
    if isinstance(cycle, str):
        cycle = parse_cycle(cycle)
    if kind is CocycleKind.FUNCTION:
        provenance = Provenance.of("geometric", kind=kind.value, cycle=cycle)
        return CocycleEvaluator.build(cfg, kind, provenance, fn=lambda g, h: gamma_function(cfg, cycle, g, h))
    if kind is CocycleKind.VECTOR:
        R = connection if connection is not None else projective_connection_default(cfg)
        provenance = Provenance.of("geometric", kind=kind.value, cycle=cycle, connection=R.func.to_string())
        return CocycleEvaluator.build(cfg, kind, provenance, vec=lambda e, f: gamma_vector(cfg, cycle, R, e, f))
    if kind is CocycleKind.MIXING:
        T = connection if connection is not None else affine_connection_default(cfg)
        provenance = Provenance.of("geometric", kind=kind.value, cycle=cycle, connection=T.func.to_string())
        return CocycleEvaluator.build(cfg, kind, provenance, mix=lambda e, g: gamma_mixing(cfg, cycle, T, e, g))
    raise ValueError("Cocíclo geométrico de D¹: combine os tipos function, mixing e vector")


def separating_cocycle(cfg: MarkedConfig, kind, connection=None) -> CocycleEvaluator:
    return geometric_cocycle(cfg, kind, SEPARATING, connection)


def point_cocycles(cfg: MarkedConfig, kind, connection=None) -> List[CocycleEvaluator]:
    """γ_{C_i} para i = 1..K (círculos em torno dos pontos de entrada)."""
    return [geometric_cocycle(cfg, kind, CycleSpec.point(i), connection) for i in range(1, cfg.K + 1)]
