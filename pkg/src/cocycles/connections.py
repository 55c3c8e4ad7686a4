"""
Conexões projetivas R e afins T em gênero 0.

Na carta global R⁰ ≡ 0 (a derivada schwarziana das transformações de
Möbius se anula). T⁰ ≡ 0 quando ∞ ∈ O; caso contrário T⁰ = 2/(z − q₁), que
é holomorfa no infinito.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from src.core.rat import RiemannPoint
from src.core.ratfunc import RatFunc, order_at
from src.core.reports import CheckRecord, CheckReport
from src.forms.form import Form
from src.forms.marked_config import MarkedConfig

logger = logging.getLogger(__name__)

_FLIP = (0, 1, 1, 0)


@dataclass(frozen=True)
class ProjConn:
    """R = R⁰ + extra, extra um diferencial quadrático."""

    extra: Form = field(default_factory=lambda: Form.zero(2))

    def __post_init__(self):
        if self.extra.weight != 2:
            raise ValueError(f"Conexão projetiva exige peso 2 (recebido {self.extra.weight})")

    @property
    def func(self) -> RatFunc:
        return self.extra.func

    def shifted(self, omega: Form) -> 'ProjConn':
        return ProjConn(self.extra + omega)


@dataclass(frozen=True)
class AffConn:
    """T = T⁰ + extra, extra uma 1-forma."""

    base: RatFunc = field(default_factory=RatFunc.zero)
    extra: Form = field(default_factory=lambda: Form.zero(1))

    def __post_init__(self):
        if self.extra.weight != 1:
            raise ValueError(f"Conexão afim exige peso 1 (recebido {self.extra.weight})")

    @property
    def func(self) -> RatFunc:
        return self.base + self.extra.func

    def shifted(self, v: Form) -> 'AffConn':
        return AffConn(self.base, self.extra + v)


def affine_connection_default(cfg: MarkedConfig) -> AffConn:
    """T⁰: 0 se ∞ ∈ O, senão 2/(z − q₁) com q₁ o primeiro ponto de saída."""
    if any(q.is_infinity for q in cfg.out_points):
        return AffConn()
    q1 = cfg.out_points[0].value
    return AffConn(RatFunc.constant(2) / (RatFunc.z() - RatFunc.constant(q1)))


def projective_connection_default(cfg: MarkedConfig) -> ProjConn:
    return ProjConn()


def schwarzian(h: RatFunc) -> RatFunc:
    """S(h) = h‴/h′ − (3/2)(h″/h′)²"""
    d1 = h.derivative()
    d2 = d1.derivative()
    d3 = d2.derivative()
    ratio = d2 / d1
    return d3 / d1 - (ratio * ratio).scale(Fraction(3, 2))


def _chart_map():
    chart = RatFunc.constant(1) / RatFunc.z()
    return chart, chart.derivative(), chart.derivative().derivative()


def connection_transform_check(conn: Union[AffConn, ProjConn], kind: str) -> CheckReport:
    """
    Confere a lei de transformação sob a troca de carta w = 1/z.

    Afim: T_w(f(z))·f′ = T_z + f″/f′. Projetiva: R_w(f(z))·(f′)² = R_z + S(f),
    com S(1/z) = 0. Registra a ordem de T_w (ou R_w) em w = 0.
    """
    report = CheckReport(f"connection:{kind}")
    f, f1, f2 = _chart_map()
    t_z = conn.func
    if kind == "affine":
        in_z = (t_z + f2 / f1) / f1
        t_w = in_z.compose_mobius(*_FLIP)
        law = t_w.compose_mobius(*_FLIP) * f1 - t_z - f2 / f1
    elif kind == "projective":
        s = schwarzian(f)
        report.add(CheckRecord.build("connection:schwarzian_of_flip", s.is_zero, value=s.to_string()))
        in_z = (t_z + s) / (f1 * f1)
        t_w = in_z.compose_mobius(*_FLIP)
        law = t_w.compose_mobius(*_FLIP) * f1 * f1 - t_z - s
    else:
        raise ValueError(f"Tipo de conexão '{kind}' não suportado. Tipos disponíveis: affine, projective")
    report.add(CheckRecord.build(f"connection:{kind}:law", law.is_zero))
    pole = order_at(t_w, RiemannPoint.finite(0))
    order = "inf" if t_w.is_zero else pole
    report.add(CheckRecord.build(f"connection:{kind}:order_at_infinity", True,
                                 chart_expression=t_w.to_string("w"), order=order))
    logger.debug(f"Conexão {kind}: T_w = {t_w.to_string('w')}")
    return report
