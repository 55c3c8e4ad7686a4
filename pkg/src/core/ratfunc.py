"""
Funções racionais exatas em forma canônica.

Forma canônica: denominador mônico e mdc(num, den) = 1. Com isso a igualdade
é comparação estrutural e o hash é estável.
"""

import math
import threading
from fractions import Fraction
from typing import Dict, Mapping, Tuple, Union

from .errors import ArithmeticDomainError
from .poly import Poly
from .rat import RiemannPoint, to_rat

Scalar = Union[int, Fraction]

# Ordem da função identicamente nula.
ORDER_OF_ZERO = math.inf


class RatFunc:
    """Função racional num/den sobre Q."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Union[Poly, Scalar], den: Union[Poly, Scalar] = 1):
        num = num if isinstance(num, Poly) else Poly.constant(num)
        den = den if isinstance(den, Poly) else Poly.constant(den)
        if den.is_zero:
            raise ArithmeticDomainError("Denominador zero em função racional")
        if num.is_zero:
            self._set(Poly.zero(), Poly.one())
            return
        g = Poly.gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        self._set(*_normalize(num, den))

    def _set(self, num: Poly, den: Poly) -> None:
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _canonical(cls, num: Poly, den: Poly) -> 'RatFunc':
        """Constrói sem redução; o chamador garante mdc = 1."""
        obj = cls.__new__(cls)
        if num.is_zero:
            obj._set(Poly.zero(), Poly.one())
        else:
            obj._set(*_normalize(num, den))
        return obj

    # Construtores

    @classmethod
    def zero(cls) -> 'RatFunc':
        return cls._canonical(Poly.zero(), Poly.one())

    @classmethod
    def constant(cls, value: Scalar) -> 'RatFunc':
        return cls._canonical(Poly.constant(to_rat(value)), Poly.one())

    @classmethod
    def z(cls) -> 'RatFunc':
        return cls._canonical(Poly.monomial(1), Poly.one())

    @classmethod
    def from_poly(cls, poly: Poly) -> 'RatFunc':
        return cls._canonical(poly, Poly.one())

    @classmethod
    def from_factors(cls, constant: Scalar, exponents: Mapping[Fraction, int]) -> 'RatFunc':
        """
        Monta c·Π (z − a)^e a partir de raízes racionais distintas.

        Args:
            constant: Fator constante c
            exponents: Mapa raiz a → expoente inteiro e

        Returns:
            Função racional canônica (já reduzida, pois as raízes são distintas)
        """
        num = Poly.constant(to_rat(constant))
        den = Poly.one()
        for root, exponent in exponents.items():
            if exponent > 0:
                num = num * linear_power(root, exponent)
            elif exponent < 0:
                den = den * linear_power(root, -exponent)
        return cls._canonical(num, den)

    # Propriedades

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_polynomial and self.num == Poly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num.coeffs, self.den.coeffs))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero

    # Aritmética

    def __neg__(self) -> 'RatFunc':
        return RatFunc._canonical(-self.num, self.den)

    def __add__(self, other) -> 'RatFunc':
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        g = Poly.gcd(self.den, other.den)
        if g.degree == 0:
            num = self.num * other.den + other.num * self.den
            return RatFunc._canonical(num, self.den * other.den)
        a1 = self.den.exact_div(g)
        a2 = other.den.exact_div(g)
        num = self.num * a2 + other.num * a1
        if num.is_zero:
            return RatFunc.zero()
        h = Poly.gcd(num, g)
        if h.degree > 0:
            num = num.exact_div(h)
            g = g.exact_div(h)
        return RatFunc._canonical(num, a1 * a2 * g)

    __radd__ = __add__

    def __sub__(self, other) -> 'RatFunc':
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'RatFunc':
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> 'RatFunc':
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatFunc.zero()
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        g1 = Poly.gcd(n1, d2)
        if g1.degree > 0:
            n1, d2 = n1.exact_div(g1), d2.exact_div(g1)
        g2 = Poly.gcd(n2, d1)
        if g2.degree > 0:
            n2, d1 = n2.exact_div(g2), d1.exact_div(g2)
        return RatFunc._canonical(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> 'RatFunc':
        factor = to_rat(factor)
        if factor == 0:
            return RatFunc.zero()
        return RatFunc._canonical(self.num.scale(factor), self.den)

    def reciprocal(self) -> 'RatFunc':
        if self.is_zero:
            raise ArithmeticDomainError("Divisão pela função zero")
        return RatFunc._canonical(self.den, self.num)

    def __truediv__(self, other) -> 'RatFunc':
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ArithmeticDomainError("Divisão pela função zero")
            return self.scale(1 / Fraction(other))
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other) -> 'RatFunc':
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, exponent: int) -> 'RatFunc':
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        return RatFunc._canonical(self.num ** exponent, self.den ** exponent)

    # Cálculo

    def derivative(self) -> 'RatFunc':
        """Regra do quociente, reduzida."""
        if self.is_polynomial:
            return RatFunc._canonical(self.num.derivative().scale(1 / self.den.leading), Poly.one())
        num = self.num.derivative() * self.den - self.num * self.den.derivative()
        return RatFunc(num, self.den * self.den)

    def __call__(self, x: Scalar) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ArithmeticDomainError(f"Polo em z = {x}")
        return self.num(x) / d

    def compose_mobius(self, a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> 'RatFunc':
        """
        Retorna f((a z + b)/(c z + d)).

        Usa a homogeneização N(az+b, cz+d)/(cz+d)^grau, o que evita qualquer
        divisão intermediária.
        """
        a, b, c, d = (to_rat(v) for v in (a, b, c, d))
        if a * d - b * c == 0:
            raise ArithmeticDomainError("Transformação de Möbius degenerada")
        if self.is_zero:
            return self
        top = Poly([b, a])
        bottom = Poly([d, c])
        p, q = self.num.degree, self.den.degree
        num_h = _homogenize(self.num, top, bottom)
        den_h = _homogenize(self.den, top, bottom)
        if q >= p:
            return RatFunc(num_h * bottom ** (q - p), den_h)
        return RatFunc(num_h, den_h * bottom ** (p - q))

    def order_at(self, point: RiemannPoint):
        return order_at(self, point)

    # Apresentação

    def to_string(self, var: str = "z") -> str:
        if self.is_polynomial:
            return self.num.to_string(var)
        return f"({self.num.to_string(var)})/({self.den.to_string(var)})"

    def __repr__(self) -> str:
        return f"RatFunc({self.to_string()})"


def order_at(f: RatFunc, point: RiemannPoint):
    """
    Ordem de anulamento de f em `point` (negativa para polos).

    No infinito vale grau(den) − grau(num). Para f = 0 retorna ORDER_OF_ZERO.
    """
    if f.is_zero:
        return ORDER_OF_ZERO
    if point.is_infinity:
        return f.den.degree - f.num.degree
    return f.num.root_multiplicity(point.value) - f.den.root_multiplicity(point.value)


_LINEAR_POWERS: Dict[Tuple[Fraction, int], Poly] = {}
_LINEAR_POWERS_LOCK = threading.Lock()


def linear_power(root: Scalar, exponent: int) -> Poly:
    """(z − root)^exponent com memoização."""
    key = (to_rat(root), exponent)
    cached = _LINEAR_POWERS.get(key)
    if cached is None:
        cached = Poly.linear(key[0]) ** exponent
        with _LINEAR_POWERS_LOCK:
            cached = _LINEAR_POWERS.setdefault(key, cached)
    return cached


def clear_linear_power_cache() -> int:
    """Esvazia o cache de potências (z − a)^k; devolve quantas entradas havia."""
    with _LINEAR_POWERS_LOCK:
        size = len(_LINEAR_POWERS)
        _LINEAR_POWERS.clear()
    return size


def _normalize(num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    lead = den.leading
    if lead == 1:
        return num, den
    inv = 1 / lead
    return num.scale(inv), den.scale(inv)


def _homogenize(poly: Poly, top: Poly, bottom: Poly) -> Poly:
    degree = poly.degree
    result = Poly.zero()
    for k, c in enumerate(poly.coeffs):
        if c != 0:
            result = result + (top ** k) * (bottom ** (degree - k)) * c
    return result


def _as_ratfunc(value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, Poly):
        return RatFunc.from_poly(value)
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return RatFunc.constant(value)
    return None


_ARITH = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def rat_func_arith(a: RatFunc, b: RatFunc, kind: str) -> RatFunc:
    """
    Aplica add, sub, mul ou div e devolve o resultado em forma canônica.

    Raises:
        ArithmeticDomainError: em div quando b = 0
        ValueError: operação desconhecida
    """
    try:
        operation = _ARITH[kind.lower()]
    except KeyError:
        raise ValueError(f"Operação '{kind}' não suportada. Operações disponíveis: {', '.join(_ARITH)}")
    return operation(a, b)
