"""
Formas f(z)·dz^λ, índices de base e prescrições de ordem.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Optional, Tuple

from src.core.errors import WeightMismatchError
from src.core.poly import Poly
from src.core.rat import RiemannPoint, format_rat, parse_rat
from src.core.ratfunc import ORDER_OF_ZERO, RatFunc, order_at


@dataclass(frozen=True)
class Form:
    """
    Forma de peso λ na carta global: func(z)·dz^λ.

    λ = −1 campos de vetores e(z) d/dz, λ = 0 funções, λ = 1 diferenciais,
    λ = 2 diferenciais quadráticos.
    """

    weight: int
    func: RatFunc

    @classmethod
    def zero(cls, weight: int) -> 'Form':
        return cls(weight, RatFunc.zero())

    @classmethod
    def constant(cls, weight: int, value) -> 'Form':
        return cls(weight, RatFunc.constant(value))

    @property
    def is_zero(self) -> bool:
        return self.func.is_zero

    def _check(self, other: 'Form') -> None:
        if self.weight != other.weight:
            raise WeightMismatchError(f"Pesos diferentes: {self.weight} e {other.weight}")

    def __add__(self, other: 'Form') -> 'Form':
        self._check(other)
        return Form(self.weight, self.func + other.func)

    def __sub__(self, other: 'Form') -> 'Form':
        self._check(other)
        return Form(self.weight, self.func - other.func)

    def __neg__(self) -> 'Form':
        return Form(self.weight, -self.func)

    def __mul__(self, factor) -> 'Form':
        if isinstance(factor, (int, Fraction)) and not isinstance(factor, bool):
            return Form(self.weight, self.func.scale(factor))
        return NotImplemented

    __rmul__ = __mul__

    def order_at(self, point: RiemannPoint):
        """Ordem da forma: no infinito dz^λ contribui −2λ."""
        order = order_at(self.func, point)
        if order == ORDER_OF_ZERO or point.is_finite:
            return order
        return order - 2 * self.weight

    def to_dict(self) -> Dict[str, Any]:
        return {
            "weight": self.weight,
            "num": [format_rat(c) for c in self.func.num.coeffs] or ["0"],
            "den": [format_rat(c) for c in self.func.den.coeffs],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Form':
        from src.config.schemas import FormFile

        model = FormFile(**data)
        num = Poly([parse_rat(str(c)) for c in model.num])
        den = Poly([parse_rat(str(c)) for c in model.den])
        return cls(model.weight, RatFunc(num, den))

    def to_string(self, roots: Optional[Iterable[Fraction]] = None) -> str:
        return format_form(self, roots)

    def __str__(self) -> str:
        return format_form(self)


@dataclass(frozen=True, order=True)
class BasisIndex:
    """Índice (λ, n, p) do elemento f^λ_{n,p}; p é 1-based."""

    weight: int
    degree: int
    point: int

    def to_list(self):
        return [self.weight, self.degree, self.point]


@dataclass(frozen=True)
class OrderPrescription:
    """Ordens prescritas nos pontos de entrada e de saída."""

    in_orders: Tuple[int, ...]
    out_orders: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.in_orders) + sum(self.out_orders)


def _weight_suffix(weight: int) -> str:
    if weight == 0:
        return ""
    if weight == -1:
        return " d/dz"
    if weight == 1:
        return " dz"
    if weight > 1:
        return f" dz^{weight}"
    return f" (d/dz)^{-weight}"


def _factor(root: Fraction, exponent: int) -> str:
    if root == 0:
        base = "z"
    elif root > 0:
        base = f"(z-{format_rat(root)})"
    else:
        base = f"(z+{format_rat(-root)})"
    return base if exponent == 1 else f"{base}^{exponent}"


def format_form(form: Form, roots: Optional[Iterable[Fraction]] = None) -> str:
    """
    Representação textual, fatorada sobre `roots` quando possível.

    Exemplos: "z^3 d/dz", "z*(z-1)^2", "(z-1)^-2 dz^2".
    """
    func = form.func
    suffix = _weight_suffix(form.weight)
    if func.is_zero:
        return "0" + suffix
    candidates = sorted(set(Fraction(r) for r in (roots if roots is not None else [0])))
    num, den = func.num, func.den
    factors = []
    for root in candidates:
        e_num = num.root_multiplicity(root)
        e_den = den.root_multiplicity(root)
        if e_num:
            num = num.exact_div(Poly.linear(root) ** e_num)
        if e_den:
            den = den.exact_div(Poly.linear(root) ** e_den)
        if e_num - e_den:
            factors.append(_factor(root, e_num - e_den))
    if num.degree == 0 and den.degree == 0:
        constant = num.leading / den.leading
        body = "*".join(factors)
        if not body:
            return format_rat(constant) + suffix
        if constant == 1:
            return body + suffix
        if constant == -1:
            return "-" + body + suffix
        return f"{format_rat(constant)}*{body}" + suffix
    return func.to_string() + suffix
