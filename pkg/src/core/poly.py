"""
Polinômios densos em uma variável sobre os racionais.
"""

from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

from .errors import ArithmeticDomainError

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Poly:
    """
    Polinômio imutável com coeficientes `Fraction` em ordem crescente de grau.

    Coeficientes nulos no topo nunca são armazenados; o polinômio zero é a
    tupla vazia. A visão esparsa (expoente → coeficiente) fica em
    `coefficients`.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        values = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(values)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: Tuple[Fraction, ...]) -> 'Poly':
        poly = cls.__new__(cls)
        poly._coeffs = coeffs
        poly._hash = None
        return poly

    @classmethod
    def _trimmed(cls, values: list) -> 'Poly':
        while values and values[-1] == 0:
            values.pop()
        return cls._raw(tuple(values))

    # Construtores

    @classmethod
    def zero(cls) -> 'Poly':
        return cls._raw(())

    @classmethod
    def one(cls) -> 'Poly':
        return cls._raw((_ONE,))

    @classmethod
    def constant(cls, value: Scalar) -> 'Poly':
        return cls((value,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: Scalar = 1) -> 'Poly':
        if exponent < 0:
            raise ValueError("Expoente negativo em polinômio")
        return cls([0] * exponent + [coefficient])

    @classmethod
    def linear(cls, root: Scalar) -> 'Poly':
        """Retorna z − root."""
        return cls._trimmed([-Fraction(root), _ONE])

    @classmethod
    def from_coefficients(cls, coefficients: Dict[int, Scalar]) -> 'Poly':
        if not coefficients:
            return cls.zero()
        top = max(coefficients)
        values = [_ZERO] * (top + 1)
        for exponent, value in coefficients.items():
            if exponent < 0:
                raise ValueError("Expoente negativo em polinômio")
            values[exponent] = Fraction(value)
        return cls._trimmed(values)

    # Propriedades

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def coefficients(self) -> Dict[int, Fraction]:
        return {k: c for k, c in enumerate(self._coeffs) if c != 0}

    @property
    def degree(self) -> int:
        """Grau; −1 para o polinômio zero."""
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else _ZERO

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, exponent: int) -> Fraction:
        if 0 <= exponent < len(self._coeffs):
            return self._coeffs[exponent]
        return _ZERO

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Poly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._coeffs)
        return self._hash

    # Aritmética

    def __neg__(self) -> 'Poly':
        return Poly._raw(tuple(-c for c in self._coeffs))

    def __add__(self, other) -> 'Poly':
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        values = list(a)
        for k, c in enumerate(b):
            values[k] += c
        return Poly._trimmed(values)

    __radd__ = __add__

    def __sub__(self, other) -> 'Poly':
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'Poly':
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> 'Poly':
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Poly.zero()
        values = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                values[i + j] += x * y
        return Poly._trimmed(values)

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> 'Poly':
        if factor == 0:
            return Poly.zero()
        return Poly._raw(tuple(c * factor for c in self._coeffs))

    def __pow__(self, exponent: int) -> 'Poly':
        if exponent < 0:
            raise ValueError("Potência negativa de polinômio")
        result = Poly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def divmod(self, divisor: 'Poly') -> Tuple['Poly', 'Poly']:
        """Divisão longa: retorna (quociente, resto)."""
        if divisor.is_zero:
            raise ArithmeticDomainError("Divisão por polinômio zero")
        remainder = list(self._coeffs)
        dd = divisor.degree
        if len(remainder) - 1 < dd:
            return Poly.zero(), self
        lead = divisor.leading
        dcoeffs = divisor._coeffs
        quotient = [_ZERO] * (len(remainder) - dd)
        for k in range(len(remainder) - 1 - dd, -1, -1):
            c = remainder[k + dd]
            if c == 0:
                continue
            q = c / lead
            quotient[k] = q
            for j, d in enumerate(dcoeffs):
                remainder[k + j] -= q * d
        return Poly._trimmed(quotient), Poly._trimmed(remainder[:dd])

    def __floordiv__(self, divisor: 'Poly') -> 'Poly':
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: 'Poly') -> 'Poly':
        return self.divmod(divisor)[1]

    def exact_div(self, divisor: 'Poly') -> 'Poly':
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero:
            raise ArithmeticDomainError("Divisão polinomial não exata")
        return quotient

    def monic(self) -> 'Poly':
        if self.is_zero:
            return self
        lead = self.leading
        if lead == 1:
            return self
        return Poly._raw(tuple(c / lead for c in self._coeffs))

    @staticmethod
    def gcd(a: 'Poly', b: 'Poly') -> 'Poly':
        """Máximo divisor comum mônico (algoritmo de Euclides)."""
        while not b.is_zero:
            a, b = b, (a % b).monic()
        return a.monic()

    # Cálculo

    def derivative(self) -> 'Poly':
        return Poly._trimmed([k * c for k, c in enumerate(self._coeffs)][1:])

    def __call__(self, x: Scalar) -> Fraction:
        result = _ZERO
        for c in reversed(self._coeffs):
            result = result * x + c
        return result

    def taylor_shift(self, a: Scalar) -> 'Poly':
        """Retorna p(a + t) como polinômio em t."""
        a = Fraction(a)
        if a == 0:
            return self
        values = list(self._coeffs)
        n = len(values)
        for i in range(n - 1):
            for k in range(n - 2, i - 1, -1):
                values[k] += a * values[k + 1]
        return Poly._trimmed(values)

    def reversed(self, degree: int = None) -> 'Poly':
        """Retorna t^d·p(1/t), com d = grau por padrão."""
        if degree is None:
            degree = self.degree
        if degree < self.degree:
            raise ValueError("Grau de reversão menor que o grau do polinômio")
        padded = list(self._coeffs) + [_ZERO] * (degree + 1 - len(self._coeffs))
        return Poly._trimmed(padded[::-1])

    def root_multiplicity(self, root: Scalar) -> int:
        """Multiplicidade de `root` como raiz (0 se não for raiz)."""
        if self.is_zero:
            raise ArithmeticDomainError("Multiplicidade de raiz do polinômio zero")
        shifted = self.taylor_shift(root)._coeffs
        count = 0
        while shifted[count] == 0:
            count += 1
        return count

    def to_string(self, var: str = "z") -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = _fmt(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{_fmt(mag)}*{mono}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Poly({self.to_string()})"


def _fmt(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"({value.numerator}/{value.denominator})"


def _as_poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Poly.constant(value)
    return None
