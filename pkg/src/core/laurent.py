"""
Expansões de Laurent truncadas e cálculo de resíduos.

A coordenada local é (z − a) num ponto finito a e w = 1/z no infinito. As
expansões de cada par (função, ponto) ficam em cache e são estendidas sob
demanda; o resíduo de um produto de fatores (eventualmente derivados) é
obtido multiplicando apenas as fatias necessárias, com a precisão planejada
a partir das ordens dos fatores.
"""

import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .rat import RiemannPoint
from .ratfunc import RatFunc, clear_linear_power_cache, order_at

logger = logging.getLogger(__name__)

_ZERO = Fraction(0)


@dataclass(frozen=True)
class LaurentSlice:
    """
    Coeficientes exatos dos expoentes first_exponent .. stop − 1.

    Expoentes abaixo de `first_exponent` são nulos; acima de `stop` não são
    conhecidos.
    """

    at: RiemannPoint
    first_exponent: int
    coefficients: Tuple[Fraction, ...]

    @property
    def stop(self) -> int:
        return self.first_exponent + len(self.coefficients)

    def coefficient(self, exponent: int) -> Fraction:
        if exponent < self.first_exponent:
            return _ZERO
        if exponent >= self.stop:
            raise ValueError(
                f"Expoente {exponent} fora da precisão da fatia (até {self.stop - 1})"
            )
        return self.coefficients[exponent - self.first_exponent]

    def truncate(self, stop: int) -> 'LaurentSlice':
        keep = max(0, min(len(self.coefficients), stop - self.first_exponent))
        return LaurentSlice(self.at, self.first_exponent, self.coefficients[:keep])

    def scale(self, factor) -> 'LaurentSlice':
        return LaurentSlice(self.at, self.first_exponent,
                            tuple(c * factor for c in self.coefficients))

    def __add__(self, other: 'LaurentSlice') -> 'LaurentSlice':
        _same_point(self, other)
        first = min(self.first_exponent, other.first_exponent)
        stop = min(self.stop, other.stop)
        values = tuple(self.coefficient(k) + other.coefficient(k) for k in range(first, stop))
        return LaurentSlice(self.at, first, values)

    def __mul__(self, other: 'LaurentSlice') -> 'LaurentSlice':
        """Produto de Cauchy; só os termos determinados pelas duas fatias são mantidos."""
        _same_point(self, other)
        a, b = self.coefficients, other.coefficients
        count = min(len(a), len(b))
        values = []
        for k in range(count):
            total = _ZERO
            for i in range(k + 1):
                x = a[i]
                if x:
                    total += x * b[k - i]
            values.append(total)
        return LaurentSlice(self.at, self.first_exponent + other.first_exponent, tuple(values))

    def d_dz(self) -> 'LaurentSlice':
        """
        Derivada em relação à coordenada global z.

        No infinito d/dz = −w²·d/dw, o que desloca o expoente em +1.
        """
        first = self.first_exponent
        if self.at.is_infinity:
            values = tuple(-(first + j) * c for j, c in enumerate(self.coefficients))
            return LaurentSlice(self.at, first + 1, values)
        values = tuple((first + j) * c for j, c in enumerate(self.coefficients))
        return LaurentSlice(self.at, first - 1, values)


def _same_point(a: LaurentSlice, b: LaurentSlice) -> None:
    if a.at != b.at:
        raise ValueError("Fatias de Laurent em pontos diferentes")


class _LocalExpansion:
    """Série s(t)/u(t)·t^ordem estendida sob demanda (u é polinomial)."""

    def __init__(self, func: RatFunc, point: RiemannPoint):
        self.point = point
        self._lock = threading.Lock()
        self._quotient: List[Fraction] = []
        self.order = None
        self._numerator: Tuple[Fraction, ...] = ()
        self._unit: Tuple[Fraction, ...] = (Fraction(1),)
        if func.is_zero:
            return
        if point.is_infinity:
            # f(1/w) = w^(q−p)·rev(num)(w)/rev(den)(w)
            num = func.num.reversed().coeffs
            den = func.den.reversed().coeffs
            self.order = func.den.degree - func.num.degree
        else:
            shifted_num = func.num.taylor_shift(point.value).coeffs
            shifted_den = func.den.taylor_shift(point.value).coeffs
            vn = _valuation(shifted_num)
            vd = _valuation(shifted_den)
            num, den = shifted_num[vn:], shifted_den[vd:]
            self.order = vn - vd
        self._numerator = tuple(num)
        self._unit = tuple(den)

    def coefficients(self, count: int) -> Tuple[Fraction, ...]:
        """Primeiros `count` coeficientes a partir da ordem."""
        if self.order is None:
            return (_ZERO,) * count
        with self._lock:
            q = self._quotient
            if len(q) < count:
                s, u = self._numerator, self._unit
                u0 = u[0]
                for k in range(len(q), count):
                    total = s[k] if k < len(s) else _ZERO
                    for j in range(1, min(k, len(u) - 1) + 1):
                        total -= u[j] * q[k - j]
                    q.append(total / u0)
            return tuple(q[:count])


def _valuation(coeffs: Sequence[Fraction]) -> int:
    for k, c in enumerate(coeffs):
        if c != 0:
            return k
    raise ValueError("Valoração do polinômio zero")


_CACHE: Dict[Tuple[RatFunc, RiemannPoint], _LocalExpansion] = {}
_CACHE_LOCK = threading.Lock()


def _expansion(func: RatFunc, point: RiemannPoint) -> _LocalExpansion:
    key = (func, point)
    cached = _CACHE.get(key)
    if cached is None:
        logger.debug(f"Nova expansão local em {point}")
        cached = _LocalExpansion(func, point)
        with _CACHE_LOCK:
            cached = _CACHE.setdefault(key, cached)
    return cached


def clear_expansion_cache() -> int:
    """
    Esvazia o cache de expansões locais e o de potências (z − a)^k.

    Returns:
        Número de entradas removidas dos dois caches
    """
    with _CACHE_LOCK:
        size = len(_CACHE)
        _CACHE.clear()
    size += clear_linear_power_cache()
    logger.debug(f"Caches de expansão esvaziados ({size} entradas)")
    return size


def expansion_order(func: RatFunc, point: RiemannPoint):
    """Ordem de `func` em `point` na coordenada local (usa o cache)."""
    if func.is_zero:
        return order_at(func, point)
    return _expansion(func, point).order


def leading_slice(func: RatFunc, point: RiemannPoint, count: int) -> LaurentSlice:
    """Fatia com `count` coeficientes começando na ordem verdadeira de `func`."""
    expansion = _expansion(func, point)
    first = 0 if expansion.order is None else expansion.order
    return LaurentSlice(point, first, expansion.coefficients(count))


def laurent_coeffs(f: RatFunc, point: RiemannPoint, first: int, count: int) -> LaurentSlice:
    """
    Coeficientes de (z − a)^k (ou w^k no infinito) para k = first .. first + count − 1.

    Args:
        f: Função racional
        point: Ponto de expansão
        first: Primeiro expoente pedido
        count: Quantidade de coeficientes (positiva)

    Returns:
        LaurentSlice exatamente na janela pedida
    """
    if count <= 0:
        raise ValueError("count deve ser positivo")
    expansion = _expansion(f, point)
    if expansion.order is None:
        return LaurentSlice(point, first, (_ZERO,) * count)
    order = expansion.order
    stop = first + count
    known = expansion.coefficients(max(0, stop - order))
    values = tuple(_ZERO if k < order else known[k - order] for k in range(first, stop))
    return LaurentSlice(point, first, values)


def residue_of_product(factors: Sequence[Tuple[RatFunc, int]], point: RiemannPoint) -> Fraction:
    """
    Resíduo da 1-forma Π f_i^{(k_i)}(z) dz em `point`.

    Args:
        factors: Pares (função, ordem de derivação em z)
        point: Ponto finito ou infinito

    Returns:
        Coeficiente de (z − a)^−1 num ponto finito; no infinito
        −[w¹] de Π f_i^{(k_i)}(1/w), que é res_{w=0}(−f(1/w)·w^−2 dw).
    """
    finite = point.is_finite
    target = -1 if finite else 1
    lows = []
    for func, k in factors:
        if func.is_zero:
            return _ZERO
        order = _expansion(func, point).order
        lows.append(order - k if finite else order + k)
    need = target - sum(lows) + 1
    if need <= 0:
        return _ZERO
    product = None
    for func, k in factors:
        piece = leading_slice(func, point, need)
        for _ in range(k):
            piece = piece.d_dz()
        product = piece if product is None else product * piece
    value = product.coefficient(target)
    return value if finite else -value


def residue_1form(f: RatFunc, point: RiemannPoint) -> Fraction:
    """Resíduo de f(z)dz em `point` (fórmula com o jacobiano dz = −w^−2 dw no infinito)."""
    return residue_of_product(((f, 0),), point)

