"""
Mergulho Φ_λ de A, L e D¹ em ḡl(∞) pela ação na base de F^λ e o cocíclo
γ_λ(x, y) = α(Φ_λ(x), Φ_λ(y)) obtido do cocíclo padrão.

γ_λ = −(γ_S^{(f)} + ((1−2λ)/2)·γ_{S,T_λ}^{(m)} + 2(6λ²−6λ+1)·γ_{S,R_λ}^{(v)})
"""

import logging
import threading
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple, Union

from src.algebra.operations import D1Element, d1_bracket, lie_derivative, multiply_forms
from src.cocycles import (
    CocycleEvaluator,
    CocycleKind,
    Provenance,
    absorb_into_connection,
    check_cocycle_properties,
    decompose_bounded,
    extract_level_zero,
    split_d1_cocycle,
)
from src.config import get_engine_config
from src.core.errors import KNCError, WindowTooSmallError
from src.core.reports import CheckRecord, CheckReport
from src.forms.basis import get_basis
from src.forms.form import BasisIndex, Form
from src.forms.marked_config import MarkedConfig

from .matrices import BandedWindowMatrix, WedgeIndexMap, commutator, std_cocycle

logger = logging.getLogger(__name__)

Element = Union[Form, D1Element, BasisIndex]


def _act(x: D1Element, f: Form) -> Form:
    image = Form.zero(f.weight)
    if not x.function_part.is_zero:
        image = image + multiply_forms(x.function_part, f)
    if not x.vf_part.is_zero:
        image = image + lie_derivative(x.vf_part, f)
    return image


def phi_lambda(cfg: MarkedConfig, weight: int, x: Element, half_width: int) -> BandedWindowMatrix:
    """
    Matriz de Φ_λ(x) na janela [−w, w): a coluna ι(m, r) guarda a expansão de
    x·f^λ_{m,r} (produto para funções, derivada de Lie para campos).

    A banda registrada vem de todas as entradas, inclusive as que caem fora
    da janela.

    Raises:
        WindowTooSmallError: banda maior que a meia-largura w
    """
    basis = get_basis(cfg)
    if isinstance(x, BasisIndex):
        x = basis.basis_element(x)
    x = D1Element.lift(x)
    index = WedgeIndexMap(cfg.K)
    entries: Dict[Tuple[int, int], Fraction] = {}
    band = 0
    for col in range(-half_width, half_width):
        degree, point = index.inverse(col)
        image = _act(x, basis.element(weight, degree, point))
        if image.is_zero:
            continue
        for idx, value in basis.expand(image).items():
            row = index.index(idx.degree, idx.point)
            band = max(band, abs(row - col))
            entries[(row, col)] = value
    if band > half_width:
        raise WindowTooSmallError(band, half_width)
    return BandedWindowMatrix.from_entries(half_width, entries, band=band)


class PullbackCocycle:
    """γ_λ com cache de Φ_λ por elemento e janela que cresce quando necessário."""

    def __init__(self, cfg: MarkedConfig, weight: int, half_width: Optional[int] = None):
        self.cfg = cfg
        self.weight = weight
        self.half_width = half_width or get_engine_config().glinf_window
        self._matrices: Dict[Tuple[object, object, int], BandedWindowMatrix] = {}
        self._lock = threading.Lock()

    def matrix(self, x: D1Element, half_width: int) -> BandedWindowMatrix:
        key = (x.function_part.func, x.vf_part.func, half_width)
        cached = self._matrices.get(key)
        if cached is None:
            cached = phi_lambda(self.cfg, self.weight, x, half_width)
            with self._lock:
                cached = self._matrices.setdefault(key, cached)
        return cached

    def value(self, x: D1Element, y: D1Element) -> Fraction:
        if x.is_zero or y.is_zero:
            return Fraction(0)
        width = self.half_width
        while True:
            try:
                a, b = self.matrix(x, width), self.matrix(y, width)
            except WindowTooSmallError as exc:
                width = exc.required
                logger.info(f"Janela de ḡl(∞) ampliada para {width} (banda de Φ_λ)")
                continue
            required = a.band + b.band
            if required <= width:
                return std_cocycle(a, b)
            width = required
            logger.info(f"Janela de ḡl(∞) ampliada para {width} (bandas {a.band} + {b.band})")

    def evaluator(self) -> CocycleEvaluator:
        lift = D1Element.lift
        return CocycleEvaluator.build(
            self.cfg, CocycleKind.D1, Provenance.of("pullback", weight=self.weight),
            fn=lambda g, h: self.value(lift(g), lift(h)),
            mix=lambda e, g: self.value(lift(e), lift(g)),
            vec=lambda e, f: self.value(lift(e), lift(f)),
        )


def pullback_cocycle(cfg: MarkedConfig, weight: int, half_width: Optional[int] = None) -> CocycleEvaluator:
    """Avaliador (tipo d1) de γ_λ(x, y) = α(Φ_λ(x), Φ_λ(y))."""
    return PullbackCocycle(cfg, weight, half_width).evaluator()


def pullcyc_coefficients(weight: int) -> Tuple[Fraction, Fraction, Fraction]:
    """(function, mixing, vector): (−1, −(1−2λ)/2, −2(6λ²−6λ+1))."""
    lam = Fraction(weight)
    return Fraction(-1), -(1 - 2 * lam) / 2, -2 * (6 * lam * lam - 6 * lam + 1)


def pullcyc_raw_values(weight: int) -> Dict[str, Fraction]:
    lam = Fraction(weight)
    return {
        "A1,A-1": Fraction(1),
        "e1,e-1": -lam * (lam - 1),
        "e2,e-2": -(1 - 2 * lam) ** 2 + 2 * lam * (2 - 2 * lam),
        "e1,A-1": lam - 1,
        "e-1,A1": lam,
    }


_RAW_PAIRS = {
    "A1,A-1": ((0, 1), (0, -1)),
    "e1,e-1": ((-1, 1), (-1, -1)),
    "e2,e-2": ((-1, 2), (-1, -2)),
    "e1,A-1": ((-1, 1), (0, -1)),
    "e-1,A1": ((-1, -1), (0, 1)),
}


def verify_pullcyc(cfg: MarkedConfig, weight: int, half_width: Optional[int] = None,
                   decomposition_window: int = 3) -> CheckReport:
    """
    Confere γ_λ contra a combinação dos cocíclos separadores: os cinco valores
    de nível zero, os coeficientes α de cada parte e a decomposição das partes
    mista e vetorial (V, W finitos, conexões T_λ e R_λ).
    """
    gamma = pullback_cocycle(cfg, weight, half_width)
    report = CheckReport(f"pullcyc:lambda={weight}")
    logger.info(f"Verificando γ_λ para λ={weight} em {cfg}")
    expected = pullcyc_raw_values(weight)
    for r in range(1, cfg.K + 1):
        for label, ((wx, nx), (wy, ny)) in _RAW_PAIRS.items():
            actual = gamma(BasisIndex(wx, nx, r), BasisIndex(wy, ny, r))
            report.add(CheckRecord.build(f"pullcyc:raw:{label}:r={r}", actual == expected[label],
                                         expected=expected[label], actual=actual))

    parts = dict(zip(("function", "mixing", "vector"), split_d1_cocycle(gamma)))
    coefficients = dict(zip(("function", "mixing", "vector"), pullcyc_coefficients(weight)))
    for kind, part in parts.items():
        params = extract_level_zero(part, kind)
        passed = all(a == coefficients[kind] for a in params.alpha)
        report.add(CheckRecord.build(f"pullcyc:coefficient:{kind}", passed,
                                     expected=coefficients[kind], alpha=list(params.alpha), b=list(params.b)))

    for kind in ("function", "mixing", "vector"):
        try:
            result = decompose_bounded(parts[kind], kind, decomposition_window)
        except KNCError as exc:
            logger.error(f"Decomposição da parte {kind} de γ_λ falhou: {exc}")
            report.add(CheckRecord.build(f"pullcyc:decomposition:{kind}", False, error=str(exc)))
            continue
        passed = all(a == coefficients[kind] for a in result.alpha)
        witness = {"alpha": list(result.alpha)}
        if result.coboundary is not None:
            witness["coboundary"] = str(result.coboundary)
            if passed and coefficients[kind]:
                _, connection = absorb_into_connection(result)
                witness["connection"] = connection.func.to_string()
        report.add(CheckRecord.build(f"pullcyc:decomposition:{kind}", passed, **witness))

    multiplicative = check_cocycle_properties(parts["function"], "multiplicative", window=(-3, 3), count=10)
    report.add(CheckRecord.build("pullcyc:function_part_multiplicative", multiplicative.passed,
                                 failures=len(multiplicative.failures)))
    return report


def homomorphism_check(cfg: MarkedConfig, weight: int, pairs: Iterable[Tuple[BasisIndex, BasisIndex]],
                       half_width: int = 24) -> CheckReport:
    """Φ_λ([x, y]) = [Φ_λ(x), Φ_λ(y)] nas entradas da região exata do comutador."""
    basis = get_basis(cfg)
    report = CheckReport(f"homomorphism:lambda={weight}")
    for x_idx, y_idx in pairs:
        x, y = basis.basis_element(x_idx), basis.basis_element(y_idx)
        left = phi_lambda(cfg, weight, d1_bracket(x, y), half_width)
        right = commutator(phi_lambda(cfg, weight, x, half_width), phi_lambda(cfg, weight, y, half_width))
        reach = right.valid
        if reach <= 0:
            raise WindowTooSmallError(right.band + 1, half_width)
        report.add(CheckRecord.build(f"homomorphism:{[x_idx.to_list(), y_idx.to_list()]}",
                                     left.equals_on(right, reach), reach=reach))
    return report
