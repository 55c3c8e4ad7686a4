"""
Graduação invertida: I* = O, O* = I.

Se o infinito está em O, a configuração é antes transportada pela troca
de coordenada u = 1/(z − c), c o primeiro ponto de entrada, para que todos
os novos pontos de entrada sejam finitos.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from src.core.errors import ArithmeticDomainError, KNCError
from src.core.rat import INFINITY, RiemannPoint
from src.core.ratfunc import RatFunc
from src.core.reports import CheckRecord, CheckReport

from .basis import get_basis
from .form import Form
from .marked_config import MarkedConfig, ensure_valid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MobiusMap:
    """z ↦ (a z + b)/(c z + d) com ad − bc ≠ 0."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        if self.a * self.d - self.b * self.c == 0:
            raise ArithmeticDomainError("Transformação de Möbius degenerada")

    @classmethod
    def of(cls, a, b, c, d) -> 'MobiusMap':
        return cls(Fraction(a), Fraction(b), Fraction(c), Fraction(d))

    @classmethod
    def identity(cls) -> 'MobiusMap':
        return cls.of(1, 0, 0, 1)

    @property
    def is_identity(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def inverse(self) -> 'MobiusMap':
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def apply(self, point: RiemannPoint) -> RiemannPoint:
        if point.is_infinity:
            return INFINITY if self.c == 0 else RiemannPoint.finite(self.a / self.c)
        x = point.value
        bottom = self.c * x + self.d
        if bottom == 0:
            return INFINITY
        return RiemannPoint.finite((self.a * x + self.b) / bottom)

    def derivative(self) -> RatFunc:
        """(ad − bc)/(cz + d)²"""
        bottom = RatFunc.z().scale(self.c) + RatFunc.constant(self.d)
        return RatFunc.constant(self.a * self.d - self.b * self.c) / (bottom * bottom)

    def to_list(self) -> List[Fraction]:
        return [self.a, self.b, self.c, self.d]


@dataclass(frozen=True)
class InvertedConfig:
    """Configuração invertida e a troca de coordenada u = φ(z) registrada."""

    original: MarkedConfig
    config: MarkedConfig
    phi: MobiusMap

    @property
    def psi(self) -> MobiusMap:
        """Inversa z = ψ(u), usada para transportar formas."""
        return self.phi.inverse()


def inverted_config(cfg: MarkedConfig) -> InvertedConfig:
    """
    Troca os papéis de I e O.

    Args:
        cfg: Configuração válida

    Returns:
        InvertedConfig com I* = φ(O), O* = φ(I) e φ registrada
    """
    ensure_valid(cfg)
    if any(q.is_infinity for q in cfg.out_points):
        c = cfg.in_points[0].value
        phi = MobiusMap.of(0, 1, 1, -c)
    else:
        phi = MobiusMap.identity()
    inverted = MarkedConfig(
        tuple(phi.apply(q) for q in cfg.out_points),
        tuple(phi.apply(p) for p in cfg.in_points),
    )
    logger.debug(f"Graduação invertida de {cfg}: {inverted} via φ = {phi.to_list()}")
    return InvertedConfig(cfg, ensure_valid(inverted), phi)


def transport_form(inv: InvertedConfig, f: Form) -> Form:
    """F(ψ(u))·ψ′(u)^λ: a mesma forma escrita na coordenada u."""
    if inv.phi.is_identity:
        return f
    psi = inv.psi
    func = f.func.compose_mobius(psi.a, psi.b, psi.c, psi.d)
    if f.weight:
        func = func * psi.derivative() ** f.weight
    return Form(f.weight, func)


def inverted_grading_report(cfg: MarkedConfig, weight: int, window: Tuple[int, int]) -> CheckReport:
    """
    Reexpande f^λ_{n,p} na base invertida para n na janela.

    Cada registro traz a janela de graus [lo, hi] da reexpansão; um registro
    final por ponto confere que lo e hi não crescem com n (a graduação é
    invertida, com deslocamentos limitados).
    """
    inv = inverted_config(cfg)
    source = get_basis(cfg)
    target = get_basis(inv.config)
    report = CheckReport("inverted")
    lo_n, hi_n = window
    for p in range(1, cfg.K + 1):
        lows, highs = [], []
        for n in range(lo_n, hi_n + 1):
            check_id = f"inverted:lambda={weight}:n={n}:p={p}"
            try:
                image = transport_form(inv, source.element(weight, n, p))
                coefficients = target.expand(image, verify=True)
            except KNCError as e:
                logger.error(f"Falha na reexpansão invertida {check_id}: {e}")
                report.add(CheckRecord.build(check_id, False, error=str(e)))
                continue
            degrees = [idx.degree for idx in coefficients]
            lows.append(min(degrees))
            highs.append(max(degrees))
            report.add(CheckRecord.build(check_id, bool(degrees), lo=min(degrees), hi=max(degrees)))
        monotone = all(a >= b for a, b in zip(lows, lows[1:])) and all(a >= b for a, b in zip(highs, highs[1:]))
        report.add(CheckRecord.build(f"inverted:lambda={weight}:p={p}:monotone", monotone,
                                     lows=lows, highs=highs))
    return report
