"""
Base graduada f^λ_{n,p}, pareamento de Krichever–Novikov e expansão na base.

Em gênero 0 cada elemento de base é c·Π (z − a)^{e_a} sobre os pontos
marcados finitos, com os expoentes lidos da prescrição de ordens e a
constante fixada pela normalização z_p^{n−λ}(1 + O(z_p)) em P_p.
"""

import logging
import threading
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from src.core.errors import ArithmeticDomainError, ReconstructionError, ResidueTheoremViolation, WeightMismatchError
from src.core.laurent import residue_of_product
from src.core.poly import Poly
from src.core.ratfunc import RatFunc, linear_power
from src.core.rat import format_rat

from .form import BasisIndex, Form, OrderPrescription
from .marked_config import MarkedConfig, ensure_valid

logger = logging.getLogger(__name__)

Coefficients = Dict[BasisIndex, Fraction]


class KNBasis:
    """Base de Krichever–Novikov de uma configuração, com cache de elementos."""

    def __init__(self, cfg: MarkedConfig):
        self.cfg = ensure_valid(cfg)
        self._elements: Dict[Tuple[int, int, int], Tuple[Fraction, Dict[Fraction, int], Form]] = {}
        self._lock = threading.Lock()

    # Receita de ordens

    def order_prescription(self, weight: int, degree: int, point: int) -> OrderPrescription:
        """
        Ordens de f^λ_{n,p}: (n+1−λ) − δ_i^p nos pontos de entrada.

        Com M ≤ K os M−1 primeiros pontos de saída recebem −(n+1−λ) e o último
        −(K−M+1)(n+1−λ) − (2λ−1). Com M > K o total s = K(n+1−λ) + 2λ − 1 é
        repartido por igual: ord_{Q_j} = −⌊(s + o_j)/M⌋, com deslocamentos
        o_j = j−1 para λ ≤ 0 e o_j = M−j para λ ≥ 1. Em ambos os casos a soma
        total é −2λ.
        """
        K = self.cfg.K
        if not 1 <= point <= K:
            raise ValueError(f"Índice p fora do intervalo 1..{K}: {point}")
        base = degree + 1 - weight
        in_orders = tuple(base - (1 if i == point else 0) for i in range(1, K + 1))
        return OrderPrescription(in_orders, self._out_orders(weight, degree))

    def _balanced(self) -> bool:
        return self.cfg.M > self.cfg.K

    def _offset(self, weight: int, j: int) -> int:
        return j - 1 if weight <= 0 else self.cfg.M - j

    def _out_orders(self, weight: int, degree: int) -> Tuple[int, ...]:
        K, M = self.cfg.K, self.cfg.M
        base = degree + 1 - weight
        if self._balanced():
            total = K * base + 2 * weight - 1
            return tuple(-((total + self._offset(weight, j)) // M) for j in range(1, M + 1))
        last = -(K - M + 1) * base - (2 * weight - 1)
        return tuple([-base] * (M - 1) + [last])

    def _top_degree(self, weight: int, j: int, order: int) -> int:
        """Maior m com f·f^{1−λ}_{−m,r} não holomorfa em Q_j, sendo ord_{Q_j}(f) = order."""
        K, M = self.cfg.K, self.cfg.M
        if self._balanced():
            # −⌊(K(λ−m) + 1 − 2λ + o)/M⌋ + order ≥ 0  ⇔  K·m ≥ Kλ + 2 − 2λ + o − M(order+1)
            bound = K * weight + 2 - 2 * weight + self._offset(1 - weight, j) - M * (order + 1)
            return -((-bound) // K) - 1
        if j < M:
            return weight - order - 1
        return weight + (-2 * weight - order) // (K - M + 1)

    # Elementos de base

    def _build(self, weight: int, degree: int, point: int):
        key = (weight, degree, point)
        cached = self._elements.get(key)
        if cached is not None:
            return cached
        prescription = self.order_prescription(weight, degree, point)
        exponents: Dict[Fraction, int] = {}
        for pt, order in zip(self.cfg.points, prescription.in_orders + prescription.out_orders):
            if pt.is_finite:
                exponents[pt.value] = order
        anchor = self.cfg.in_point(point).value
        leading = Fraction(1)
        for root, exponent in exponents.items():
            if root != anchor and exponent:
                leading *= (anchor - root) ** exponent
        constant = 1 / leading
        form = Form(weight, RatFunc.from_factors(constant, exponents))
        entry = (constant, exponents, form)
        with self._lock:
            entry = self._elements.setdefault(key, entry)
        return entry

    def element(self, weight: int, degree: int, point: int) -> Form:
        """f^λ_{n,p}"""
        return self._build(weight, degree, point)[2]

    def basis_element(self, idx: BasisIndex) -> Form:
        return self.element(idx.weight, idx.degree, idx.point)

    def dual_element(self, weight: int, degree: int, point: int) -> Form:
        """f^{1−λ}_{−n,p}: extrai o coeficiente de f^λ_{n,p} pelo pareamento."""
        return self.element(1 - weight, -degree, point)

    # Pareamento

    def pair(self, f: Form, g: Form, cross_check: bool = True) -> Fraction:
        """
        Pareamento ⟨f, g⟩ = Σ_{P∈I} res_P(f·g).

        Args:
            f: Forma de peso λ
            g: Forma de peso 1 − λ
            cross_check: Confere com −Σ_{Q∈O} res_Q(f·g)

        Raises:
            WeightMismatchError: pesos não somam 1
            ResidueTheoremViolation: as duas somas diferem
        """
        if f.weight + g.weight != 1:
            raise WeightMismatchError(f"Pesos {f.weight} e {g.weight} não somam 1")
        factors = ((f.func, 0), (g.func, 0))
        value = sum((residue_of_product(factors, p) for p in self.cfg.in_points), Fraction(0))
        if cross_check:
            self.check_poles(f)
            self.check_poles(g)
            other = -sum((residue_of_product(factors, q) for q in self.cfg.out_points), Fraction(0))
            if other != value:
                raise ResidueTheoremViolation(
                    f"Σ_I res = {format_rat(value)} mas −Σ_O res = {format_rat(other)}"
                )
        return value

    def check_poles(self, f: Form) -> None:
        """Garante que f só tem polos nos pontos marcados (finitos ou ∞)."""
        den = f.func.den
        if den.degree == 0:
            return
        product = Poly.one()
        for pt in self.cfg.finite_points:
            k = den.root_multiplicity(pt.value)
            if k:
                product = product * linear_power(pt.value, k)
        if product != den:
            raise ArithmeticDomainError(f"Forma com polo fora dos pontos marcados: {f.func.to_string()}")

    # Expansão

    def expansion_support(self, f: Form) -> Optional[Tuple[int, int]]:
        """
        Janela de graus a priori da expansão de f.

        Mínimo: min_i ord_{P_i}(f) + λ. Máximo: o maior grau m para o qual
        f·f^{1−λ}_{−m,r} ainda tem polo em algum ponto de saída.
        """
        if f.is_zero:
            return None
        lam = f.weight
        lo = min(f.order_at(p) for p in self.cfg.in_points) + lam
        hi = max(
            self._top_degree(lam, j, f.order_at(q))
            for j, q in enumerate(self.cfg.out_points, start=1)
        )
        return lo, hi

    def expand(self, f: Form, verify: bool = True) -> Coefficients:
        """
        Coeficientes α_{m,r} = ⟨f, f^{1−λ}_{−m,r}⟩ na janela a priori.

        Raises:
            ArithmeticDomainError: polo fora dos pontos marcados
            ReconstructionError: Σ α f^λ_{m,r} ≠ f
        """
        self.check_poles(f)
        support = self.expansion_support(f)
        if support is None:
            return {}
        lo, hi = support
        lam = f.weight
        coefficients: Coefficients = {}
        for m in range(lo, hi + 1):
            for r in range(1, self.cfg.K + 1):
                dual = self.dual_element(lam, m, r)
                value = self.pair(f, dual, cross_check=False)
                if value:
                    coefficients[BasisIndex(lam, m, r)] = value
        if verify and not self.matches(coefficients, f):
            raise ReconstructionError(
                "Reconstrução da expansão não confere",
                {"form": f.func.to_string(), "weight": lam, "window": [lo, hi]},
            )
        return coefficients

    def reconstruct(self, coefficients: Mapping[BasisIndex, Fraction], weight: int) -> Form:
        """Σ α_{m,r} f^λ_{m,r} como forma."""
        num, den = self._common_numerator(coefficients)
        return Form(weight, RatFunc(num, den))

    def matches(self, coefficients: Mapping[BasisIndex, Fraction], f: Form) -> bool:
        """Compara Σ α f^λ_{m,r} com f usando um denominador comum (sem mdc)."""
        if not coefficients:
            return f.is_zero
        num, den = self._common_numerator(coefficients)
        return num * f.func.den == f.func.num * den

    def _common_numerator(self, coefficients: Mapping[BasisIndex, Fraction]) -> Tuple[Poly, Poly]:
        entries = []
        shift: Dict[Fraction, int] = {}
        for idx, alpha in coefficients.items():
            constant, exponents, _ = self._build(idx.weight, idx.degree, idx.point)
            entries.append((alpha * constant, exponents))
            for root, e in exponents.items():
                if e < 0:
                    shift[root] = max(shift.get(root, 0), -e)
        num = Poly.zero()
        for scale, exponents in entries:
            term = Poly.constant(scale)
            for root, e in exponents.items():
                total = e + shift.get(root, 0)
                if total:
                    term = term * linear_power(root, total)
            num = num + term
        den = Poly.one()
        for root, k in shift.items():
            den = den * linear_power(root, k)
        return num, den


_BASES: Dict[MarkedConfig, KNBasis] = {}
_BASES_LOCK = threading.Lock()


def get_basis(cfg: MarkedConfig) -> KNBasis:
    """KNBasis compartilhada por configuração."""
    basis = _BASES.get(cfg)
    if basis is None:
        basis = KNBasis(cfg)
        with _BASES_LOCK:
            basis = _BASES.setdefault(cfg, basis)
    return basis


def order_prescription(cfg: MarkedConfig, weight: int, degree: int, point: int) -> OrderPrescription:
    return get_basis(cfg).order_prescription(weight, degree, point)


def basis_element(cfg: MarkedConfig, idx: BasisIndex) -> Form:
    return get_basis(cfg).basis_element(idx)


def kn_pairing(cfg: MarkedConfig, f: Form, g: Form) -> Fraction:
    return get_basis(cfg).pair(f, g, cross_check=True)


def expand_in_basis(cfg: MarkedConfig, f: Form) -> Coefficients:
    return get_basis(cfg).expand(f, verify=True)


def dual_basis_element(cfg: MarkedConfig, idx: BasisIndex) -> Form:
    return get_basis(cfg).dual_element(idx.weight, idx.degree, idx.point)


def expansion_support(cfg: MarkedConfig, f: Form) -> Optional[Tuple[int, int]]:
    return get_basis(cfg).expansion_support(f)
