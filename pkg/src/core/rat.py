"""
Racionais exatos e pontos da esfera de Riemann.

`Rat` é `fractions.Fraction`: numerador e denominador inteiros de precisão
arbitrária, denominador positivo e fração sempre reduzida.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Rat = Fraction
RatLike = Union[int, str, Fraction]


def to_rat(value: RatLike) -> Fraction:
    """Converte inteiro, string "p" / "p/q" ou Fraction em `Rat`."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool não é um racional válido")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"Não é possível converter {value!r} em racional exato")


def parse_rat(text: str) -> Fraction:
    """
    Lê um racional no formato "p" ou "p/q".

    Args:
        text: Texto com inteiros decimais

    Returns:
        Fraction reduzida

    Raises:
        ValueError: se o texto não for um racional exato
    """
    cleaned = text.strip()
    if not cleaned or any(c in cleaned for c in ".eE"):
        raise ValueError(f"Racional inválido: '{text}' (use 'p' ou 'p/q')")
    return Fraction(cleaned)


def format_rat(value: RatLike) -> str:
    """Serializa um racional como "p" ou "p/q"."""
    value = to_rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class RiemannPoint:
    """Ponto de P¹: finito (valor racional) ou o ponto no infinito."""

    value: Optional[Fraction] = None

    @classmethod
    def finite(cls, value: RatLike) -> 'RiemannPoint':
        return cls(to_rat(value))

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def sort_key(self):
        """Ordenação determinística: pontos finitos por valor, infinito por último."""
        return (1, Fraction(0)) if self.value is None else (0, self.value)

    def __str__(self) -> str:
        return format_point(self)


INFINITY = RiemannPoint(None)


def parse_point(text: str) -> RiemannPoint:
    """Lê "p", "p/q" ou "inf"."""
    cleaned = text.strip().lower()
    if cleaned in ("inf", "infinity", "∞"):
        return INFINITY
    return RiemannPoint.finite(parse_rat(cleaned))


def format_point(point: RiemannPoint) -> str:
    """Serializa um ponto como "p/q" ou "inf"."""
    if point.is_infinity:
        return "inf"
    return format_rat(point.value)
