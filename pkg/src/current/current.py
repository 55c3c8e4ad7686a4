"""
Álgebras de correntes g ⊗ A e suas extensões centrais

    [x̂⊗f, ŷ⊗g] = [x,y]^⊗fg + B(x,y)·γ(f,g)·t,    [t, ·] = 0.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from src.algebra.operations import multiply_forms
from src.cocycles import CocycleEvaluator, CocycleKind, Provenance, bilinear_from_basis
from src.core.reports import CheckRecord, CheckReport
from src.forms.basis import get_basis
from src.forms.form import BasisIndex, Form
from src.forms.marked_config import MarkedConfig

from .lie import FinDimLie

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CurrentElement:
    """Σ x_i ⊗ f_i, com no máximo uma função por índice da base de g."""

    cfg: MarkedConfig
    parts: Tuple[Tuple[int, Form], ...] = ()

    @classmethod
    def of(cls, cfg: MarkedConfig, terms: Iterable[Tuple[int, Form]]) -> 'CurrentElement':
        merged: Dict[int, Form] = {}
        for i, f in terms:
            if f.weight != 0:
                raise ValueError(f"Correntes usam funções (peso 0), recebido peso {f.weight}")
            merged[i] = merged[i] + f if i in merged else f
        return cls(cfg, tuple(sorted((i, f) for i, f in merged.items() if not f.is_zero)))

    @classmethod
    def homogeneous(cls, cfg: MarkedConfig, lie_index: int, idx: BasisIndex) -> 'CurrentElement':
        """x_i ⊗ A_{n,p}, de grau n."""
        return cls.of(cfg, [(lie_index, get_basis(cfg).basis_element(idx))])

    @property
    def is_zero(self) -> bool:
        return not self.parts

    def _check(self, other: 'CurrentElement') -> None:
        if self.cfg != other.cfg:
            raise ValueError("Correntes de configurações diferentes")

    def __add__(self, other: 'CurrentElement') -> 'CurrentElement':
        self._check(other)
        return CurrentElement.of(self.cfg, self.parts + other.parts)

    def __sub__(self, other: 'CurrentElement') -> 'CurrentElement':
        return self + other * -1

    def __mul__(self, factor) -> 'CurrentElement':
        if isinstance(factor, (int, Fraction)) and not isinstance(factor, bool):
            return CurrentElement.of(self.cfg, [(i, f * factor) for i, f in self.parts])
        return NotImplemented

    __rmul__ = __mul__

    def expand(self) -> Dict[Tuple[int, BasisIndex], Fraction]:
        """Coeficientes de x_i ⊗ A_{n,p}."""
        basis = get_basis(self.cfg)
        return {(i, idx): c for i, f in self.parts for idx, c in basis.expand(f).items()}

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(f"x{i}⊗({f.func.to_string()})" for i, f in self.parts)


@dataclass(frozen=True)
class ExtendedElement:
    """Elemento da extensão central: corrente + c·t."""

    current: CurrentElement
    central: Fraction = Fraction(0)

    @classmethod
    def lift(cls, x: 'CurrentElement | ExtendedElement') -> 'ExtendedElement':
        return x if isinstance(x, ExtendedElement) else cls(x)

    @property
    def is_zero(self) -> bool:
        return self.current.is_zero and self.central == 0

    def __add__(self, other: 'ExtendedElement') -> 'ExtendedElement':
        return ExtendedElement(self.current + other.current, self.central + other.central)


def current_bracket(lie: FinDimLie, a: CurrentElement, b: CurrentElement) -> CurrentElement:
    """[x⊗f, y⊗g] = [x,y] ⊗ fg, estendido bilinearmente."""
    a._check(b)
    terms: List[Tuple[int, Form]] = []
    for i, f in a.parts:
        for j, g in b.parts:
            bracket = lie.bracket(i, j)
            if not bracket:
                continue
            fg = multiply_forms(f, g)
            terms.extend((k, fg * c) for k, c in bracket.items())
    return CurrentElement.of(a.cfg, terms)


class CurrentCocycle:
    """Forma bilinear em g ⊗ A dada por valores em (x_i, f) × (x_j, g)."""

    def __init__(self, lie: FinDimLie, cfg: MarkedConfig, value: Callable[[int, Form, int, Form], Fraction],
                 provenance: Provenance):
        self.lie = lie
        self.cfg = cfg
        self._value = value
        self.provenance = provenance

    def __call__(self, a: CurrentElement, b: CurrentElement) -> Fraction:
        total = Fraction(0)
        for i, f in a.parts:
            for j, g in b.parts:
                total += self._value(i, f, j, g)
        return total

    @classmethod
    def from_function_cocycle(cls, lie: FinDimLie, gamma: CocycleEvaluator) -> 'CurrentCocycle':
        """B(x, y)·γ(f, g)."""
        fn = _function_component(gamma)

        def value(i: int, f: Form, j: int, g: Form) -> Fraction:
            weight = lie.pairing(i, j)
            return weight * fn(f, g) if weight else Fraction(0)

        return cls(lie, gamma.cfg, value, Provenance.of("current", of=gamma.provenance.source))


def _function_component(gamma: CocycleEvaluator):
    if gamma.kind not in (CocycleKind.FUNCTION, CocycleKind.D1):
        raise ValueError(f"Extensão central exige cocíclo de funções (recebido {gamma.kind.value})")
    part = gamma.function_part()
    return lambda f, g: part(f, g)


def extended_bracket(lie: FinDimLie, a, b, gamma: CocycleEvaluator,
                     form: Optional[np.ndarray] = None) -> ExtendedElement:
    """
    Colchete da extensão central; t é central.

    Args:
        lie: Álgebra g
        a, b: CurrentElement ou ExtendedElement
        gamma: Cocíclo de funções
        form: Matriz B (padrão: a forma de g)
    """
    a, b = ExtendedElement.lift(a), ExtendedElement.lift(b)
    fn = _function_component(gamma)
    matrix = lie.form if form is None else form
    central = Fraction(0)
    for i, f in a.current.parts:
        for j, g in b.current.parts:
            weight = matrix[i, j]
            if weight:
                central += weight * fn(f, g)
    return ExtendedElement(current_bracket(lie, a.current, b.current), central)


def sample_current_triples(lie: FinDimLie, cfg: MarkedConfig, window: Tuple[int, int] = (-4, 4),
                           count: int = 20, seed: int = 0) -> List[Tuple[CurrentElement, ...]]:
    """Triplas aleatórias de elementos homogêneos x_i ⊗ A_{n,p} (numpy)."""
    rng = np.random.default_rng(seed)
    triples = []
    for _ in range(count):
        triple = []
        for _ in range(3):
            idx = BasisIndex(0, int(rng.integers(window[0], window[1] + 1)), int(rng.integers(1, cfg.K + 1)))
            triple.append(CurrentElement.homogeneous(cfg, int(rng.integers(0, lie.dim)), idx))
        triples.append(tuple(triple))
    return triples


def all_current_triples(lie: FinDimLie, cfg: MarkedConfig, window: Tuple[int, int] = (-2, 2)
                        ) -> List[Tuple[CurrentElement, ...]]:
    """
    Triplas de elementos x_i ⊗ A_{n,p} com n na janela, a menos de permutação
    (as identidades cíclicas são antissimétricas nas três entradas).
    """
    elements = [CurrentElement.homogeneous(cfg, i, BasisIndex(0, n, p))
                for i in range(lie.dim)
                for n in range(window[0], window[1] + 1)
                for p in range(1, cfg.K + 1)]
    return list(combinations_with_replacement(elements, 3))


def jacobi_check(lie: FinDimLie, gamma: CocycleEvaluator, triples: Sequence[Tuple[CurrentElement, ...]],
                 form: Optional[np.ndarray] = None) -> CheckReport:
    """Jacobi do colchete estendido em cada tripla: parte de corrente e parte central nulas."""
    report = CheckReport(f"affine:jacobi:{gamma.provenance.source}")

    def bracket(x, y):
        return extended_bracket(lie, x, y, gamma, form)

    for number, (a, b, c) in enumerate(triples):
        total = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b)
        witness = {"triple": [str(a), str(b), str(c)]}
        if not total.is_zero:
            witness.update(current=str(total.current), central=total.central)
        report.add(CheckRecord.build(f"affine:jacobi:{number}", total.is_zero, **witness))
    return report


def current_cocycle_check(cocycle: CurrentCocycle, triples: Sequence[Tuple[CurrentElement, ...]]) -> CheckReport:
    """γ([a,b],c) + γ([b,c],a) + γ([c,a],b) = 0 nas triplas."""
    lie = cocycle.lie
    report = CheckReport(f"current:cocycle_condition:{cocycle.provenance.source}")
    for number, (a, b, c) in enumerate(triples):
        residual = (cocycle(current_bracket(lie, a, b), c) + cocycle(current_bracket(lie, b, c), a)
                    + cocycle(current_bracket(lie, c, a), b))
        report.add(CheckRecord.build(f"current:cocycle_condition:{number}", residual == 0,
                                     **({} if residual == 0 else {"residual": residual})))
    return report


def _default_psi() -> Dict[Tuple[BasisIndex, BasisIndex], Fraction]:
    a, b = BasisIndex(0, 0, 1), BasisIndex(0, 3, 1)
    return {(a, b): Fraction(1), (b, a): Fraction(-1)}


def psi_form(cfg: MarkedConfig, psi: Optional[Mapping[Tuple[BasisIndex, BasisIndex], Fraction]] = None
             ) -> CocycleEvaluator:
    """
    Forma antissimétrica em A dada por uma tabela finita nos pares de base.

    Raises:
        ValueError: tabela não antissimétrica
    """
    table = {k: Fraction(v) for k, v in (psi or _default_psi()).items()}
    for (x, y), value in table.items():
        if table.get((y, x), Fraction(0)) != -value:
            raise ValueError(f"ψ não é antissimétrica em {[x.to_list(), y.to_list()]}")
    values = lambda i, j: table.get((i, j), Fraction(0))  # noqa: E731
    return CocycleEvaluator.build(cfg, CocycleKind.FUNCTION, Provenance.of("custom", table=len(table)),
                                  fn=bilinear_from_basis(cfg, values))


def reductive_counterexample(lie: FinDimLie, cfg: MarkedConfig,
                             psi: Optional[Mapping[Tuple[BasisIndex, BasisIndex], Fraction]] = None
                             ) -> CurrentCocycle:
    """
    γ(x⊗f, y⊗g) = tr(x)·tr(y)·ψ(f, g) em gl(n) ⊗ A: cocíclo mesmo para ψ não
    multiplicativa, pois tr([x, y]) = 0.
    """
    form = psi_form(cfg, psi)

    def value(i: int, f: Form, j: int, g: Form) -> Fraction:
        weight = lie.trace(i) * lie.trace(j)
        return weight * form(f, g) if weight else Fraction(0)

    return CurrentCocycle(lie, cfg, value, Provenance.of("reductive", of=form.provenance.source))
