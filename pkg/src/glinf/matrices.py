"""
Matrizes de banda duplamente infinitas materializadas numa janela de índices
[−w, w), com entradas exatas (numpy dtype object com Fraction).

O cocíclo padrão de ḡl(∞) na forma de blocos:
    α(A, B) = tr(A₃B₂) − tr(B₃A₂)
com X₃ = linhas ≥ 0 / colunas < 0 e X₂ = linhas < 0 / colunas ≥ 0.
"""

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

import numpy as np

from src.core.errors import WindowTooSmallError
from src.core.rat import format_rat
from src.core.reports import CheckRecord, CheckReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WedgeIndexMap:
    """ι(n, r) = K·n + (r − 1) e sua inversa; ι(0, 1) = 0."""

    K: int

    def index(self, degree: int, point: int) -> int:
        if not 1 <= point <= self.K:
            raise ValueError(f"Índice r fora do intervalo 1..{self.K}: {point}")
        return self.K * degree + point - 1

    def inverse(self, i: int) -> Tuple[int, int]:
        return i // self.K, i % self.K + 1


def _zeros(size: int) -> np.ndarray:
    data = np.empty((size, size), dtype=object)
    data.fill(Fraction(0))
    return data


def band_of(data: np.ndarray) -> int:
    """Maior |linha − coluna| entre as entradas não nulas."""
    rows, cols = np.nonzero(data != 0)
    if len(rows) == 0:
        return 0
    return int(np.max(np.abs(rows - cols)))


@dataclass(frozen=True, eq=False)
class BandedWindowMatrix:
    """
    Janela [−w, w) de uma matriz de banda.

    Attributes:
        half_width: w
        band: meia-largura da banda (pode vir de entradas fora da janela)
        data: matriz 2w × 2w; data[i + w, j + w] é a entrada (i, j)
        valid: meia-largura onde as entradas são exatas (produtos encolhem)
    """

    half_width: int
    band: int
    data: np.ndarray
    valid: Optional[int] = None

    def __post_init__(self):
        if self.data.shape != (2 * self.half_width, 2 * self.half_width):
            raise ValueError(f"Dimensão {self.data.shape} incompatível com a janela {self.half_width}")
        if band_of(self.data) > self.band:
            raise ValueError(f"Entradas fora da banda declarada {self.band}")
        if self.valid is None:
            object.__setattr__(self, "valid", self.half_width)

    @property
    def window(self) -> Tuple[int, int]:
        return -self.half_width, self.half_width

    # Construtores

    @classmethod
    def from_entries(cls, half_width: int, entries: Mapping[Tuple[int, int], Any],
                     band: Optional[int] = None) -> 'BandedWindowMatrix':
        data = _zeros(2 * half_width)
        for (row, col), value in entries.items():
            if -half_width <= row < half_width and -half_width <= col < half_width:
                data[row + half_width, col + half_width] = Fraction(value)
        observed = max((abs(r - c) for (r, c), v in entries.items() if v), default=0)
        return cls(half_width, band if band is not None else observed, data)

    @classmethod
    def unit(cls, half_width: int, row: int, col: int) -> 'BandedWindowMatrix':
        """E_{row,col}"""
        return cls.from_entries(half_width, {(row, col): 1})

    @classmethod
    def diagonal(cls, half_width: int, offset: int, mu) -> 'BandedWindowMatrix':
        """A_r(μ) = Σ_i μ_i E_{i,i+r}; μ é um mapa i → μ_i ou uma função de i."""
        values = mu if callable(mu) else (lambda i: mu.get(i, 0))
        entries = {(i, i + offset): values(i) for i in range(-half_width, half_width)}
        return cls.from_entries(half_width, {k: v for k, v in entries.items() if v}, band=abs(offset))

    # Acesso

    def entry(self, row: int, col: int) -> Fraction:
        w = self.half_width
        if not (-w <= row < w and -w <= col < w):
            raise IndexError(f"Entrada ({row}, {col}) fora da janela [{-w}, {w})")
        return self.data[row + w, col + w]

    def corners(self) -> Tuple[np.ndarray, np.ndarray]:
        """(X₃, X₂): linhas ≥ 0 / colunas < 0 e linhas < 0 / colunas ≥ 0."""
        w = self.half_width
        return self.data[w:, :w], self.data[:w, w:]

    def entries(self) -> Dict[Tuple[int, int], Fraction]:
        w = self.half_width
        rows, cols = np.nonzero(self.data != 0)
        return {(int(r) - w, int(c) - w): self.data[r, c] for r, c in zip(rows, cols)}

    # Aritmética

    def _check(self, other: 'BandedWindowMatrix') -> None:
        if self.half_width != other.half_width:
            raise ValueError(f"Janelas diferentes: {self.half_width} e {other.half_width}")

    def __add__(self, other: 'BandedWindowMatrix') -> 'BandedWindowMatrix':
        self._check(other)
        return BandedWindowMatrix(self.half_width, max(self.band, other.band), self.data + other.data,
                                  min(self.valid, other.valid))

    def __sub__(self, other: 'BandedWindowMatrix') -> 'BandedWindowMatrix':
        self._check(other)
        return BandedWindowMatrix(self.half_width, max(self.band, other.band), self.data - other.data,
                                  min(self.valid, other.valid))

    def __mul__(self, factor) -> 'BandedWindowMatrix':
        if isinstance(factor, (int, Fraction)) and not isinstance(factor, bool):
            return BandedWindowMatrix(self.half_width, self.band, self.data * Fraction(factor), self.valid)
        return NotImplemented

    __rmul__ = __mul__

    def equals_on(self, other: 'BandedWindowMatrix', reach: int) -> bool:
        """Compara as entradas (i, j) com |i|, |j| < reach."""
        self._check(other)
        w = self.half_width
        lo, hi = w - reach, w + reach
        return bool(np.all(self.data[lo:hi, lo:hi] == other.data[lo:hi, lo:hi]))

    # Exportação

    def to_dict(self) -> Dict[str, Any]:
        triplets = [[r, c, format_rat(v)] for (r, c), v in sorted(self.entries().items())]
        return {"window": list(self.window), "band": self.band, "triplets": triplets}

    def dump(self, path: Union[str, Path]) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(self.to_dict(), handle, indent=2, sort_keys=True)
            handle.write("\n")


def matmul(a: BandedWindowMatrix, b: BandedWindowMatrix) -> BandedWindowMatrix:
    """Produto na janela; a região exata encolhe pela banda."""
    a._check(b)
    valid = min(a.valid, b.valid) - max(a.band, b.band)
    return BandedWindowMatrix(a.half_width, a.band + b.band, a.data.dot(b.data), max(valid, 0))


def commutator(a: BandedWindowMatrix, b: BandedWindowMatrix) -> BandedWindowMatrix:
    return matmul(a, b) - matmul(b, a)


def std_cocycle(a: BandedWindowMatrix, b: BandedWindowMatrix) -> Fraction:
    """
    α(A, B) = tr(A₃B₂) − tr(B₃A₂), exato quando a região válida contém
    [−(b_A + b_B), b_A + b_B).

    Raises:
        WindowTooSmallError: janela insuficiente (não aproxima)
    """
    a._check(b)
    required = a.band + b.band
    given = min(a.valid, b.valid)
    if given < required:
        raise WindowTooSmallError(required, given)
    a3, a2 = a.corners()
    b3, b2 = b.corners()
    value = np.sum(a3 * b2.T) - np.sum(b3 * a2.T)
    return Fraction(value)


def random_banded(half_width: int, band: int, rng: np.random.Generator, bound: int = 3) -> BandedWindowMatrix:
    """Matriz de banda com entradas inteiras aleatórias em [−bound, bound]."""
    entries = {}
    for i in range(-half_width, half_width):
        for offset in range(-band, band + 1):
            value = int(rng.integers(-bound, bound + 1))
            if value:
                entries[(i, i + offset)] = value
    return BandedWindowMatrix.from_entries(half_width, entries, band=band)


def std_cocycle_check(count: int = 50, seed: int = 0, half_width: int = 12, band: int = 2) -> CheckReport:
    """
    Condição de cocíclo e multiplicatividade de α em triplas aleatórias:
        α([A,B],C) + α([B,C],A) + α([C,A],B) = 0
        α(AB,C) + α(BC,A) + α(CA,B) = 0
    """
    rng = np.random.default_rng(seed)
    report = CheckReport("glinf:std_cocycle")
    for sample in range(count):
        a, b, c = (random_banded(half_width, band, rng) for _ in range(3))
        cyclic = ((a, b, c), (b, c, a), (c, a, b))
        condition = sum((std_cocycle(commutator(x, y), z) for x, y, z in cyclic), Fraction(0))
        product = sum((std_cocycle(matmul(x, y), z) for x, y, z in cyclic), Fraction(0))
        report.add(CheckRecord.build(f"glinf:cocycle_condition:{sample}", condition == 0, residual=condition))
        report.add(CheckRecord.build(f"glinf:multiplicative:{sample}", product == 0, residual=product))
    logger.info(f"Cocíclo padrão: {count} triplas, {len(report.failures)} falhas")
    return report
