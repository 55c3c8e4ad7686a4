"""
Operações das álgebras de Krichever–Novikov.

A: funções (peso 0), L: campos de vetores (peso −1), F^λ: formas de peso λ
e D¹ = A × L, o produto semidireto dos operadores diferenciais de grau ≤ 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from src.core.errors import WeightMismatchError
from src.forms.form import Form

FUNCTION_WEIGHT = 0
VECTOR_WEIGHT = -1


def _require_weight(form: Form, weight: int, name: str) -> None:
    if form.weight != weight:
        raise WeightMismatchError(f"{name} deve ter peso {weight} (recebido {form.weight})")


def multiply_forms(f: Form, g: Form) -> Form:
    """Produto tensorial f ⊗ g, de peso λ + μ."""
    return Form(f.weight + g.weight, f.func * g.func)


def lie_derivative(e: Form, g: Form) -> Form:
    """
    Derivada de Lie e . g = (e g′ + λ g e′) dz^λ.

    Args:
        e: Campo de vetores (peso −1)
        g: Forma de peso λ

    Raises:
        WeightMismatchError: e não tem peso −1
    """
    _require_weight(e, VECTOR_WEIGHT, "e")
    func = e.func * g.func.derivative()
    if g.weight:
        func = func + (g.func * e.func.derivative()).scale(g.weight)
    return Form(g.weight, func)


def vf_bracket(e: Form, f: Form) -> Form:
    """[e, f] = (e f′ − f e′) d/dz"""
    _require_weight(e, VECTOR_WEIGHT, "e")
    _require_weight(f, VECTOR_WEIGHT, "f")
    return Form(VECTOR_WEIGHT, e.func * f.func.derivative() - f.func * e.func.derivative())


@dataclass(frozen=True)
class D1Element:
    """Par (g, e) de D¹: parte funcional g (peso 0) e campo e (peso −1)."""

    function_part: Form
    vf_part: Form

    def __post_init__(self):
        _require_weight(self.function_part, FUNCTION_WEIGHT, "function_part")
        _require_weight(self.vf_part, VECTOR_WEIGHT, "vf_part")

    @classmethod
    def zero(cls) -> 'D1Element':
        return cls(Form.zero(FUNCTION_WEIGHT), Form.zero(VECTOR_WEIGHT))

    @classmethod
    def lift(cls, x: Union[Form, 'D1Element']) -> 'D1Element':
        """Vê uma função como (g, 0) e um campo como (0, e)."""
        if isinstance(x, D1Element):
            return x
        if x.weight == FUNCTION_WEIGHT:
            return cls(x, Form.zero(VECTOR_WEIGHT))
        if x.weight == VECTOR_WEIGHT:
            return cls(Form.zero(FUNCTION_WEIGHT), x)
        raise WeightMismatchError(f"Elemento de D¹ precisa de peso 0 ou −1 (recebido {x.weight})")

    @property
    def is_zero(self) -> bool:
        return self.function_part.is_zero and self.vf_part.is_zero

    def __add__(self, other: 'D1Element') -> 'D1Element':
        return D1Element(self.function_part + other.function_part, self.vf_part + other.vf_part)

    def __sub__(self, other: 'D1Element') -> 'D1Element':
        return D1Element(self.function_part - other.function_part, self.vf_part - other.vf_part)

    def __neg__(self) -> 'D1Element':
        return D1Element(-self.function_part, -self.vf_part)

    def __mul__(self, factor) -> 'D1Element':
        if isinstance(factor, (int, Fraction)) and not isinstance(factor, bool):
            return D1Element(self.function_part * factor, self.vf_part * factor)
        return NotImplemented

    __rmul__ = __mul__


def d1_bracket(a: Union[Form, D1Element], b: Union[Form, D1Element]) -> D1Element:
    """[(g, e), (h, f)] = (e.h − f.g, [e, f])"""
    a, b = D1Element.lift(a), D1Element.lift(b)
    function_part = lie_derivative(a.vf_part, b.function_part) - lie_derivative(b.vf_part, a.function_part)
    return D1Element(function_part, vf_bracket(a.vf_part, b.vf_part))
