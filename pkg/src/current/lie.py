"""
Álgebras de Lie de dimensão finita sobre ℚ dadas por constantes de estrutura
e uma forma bilinear simétrica invariante.
"""

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.config.schemas import FinDimLieFile
from src.core.rat import format_rat, parse_rat
from src.core.reports import CheckRecord, CheckReport

logger = logging.getLogger(__name__)

Vector = Dict[int, Fraction]


def _object_zeros(*shape: int) -> np.ndarray:
    data = np.empty(shape, dtype=object)
    data.fill(Fraction(0))
    return data


@dataclass(frozen=True, eq=False)
class FinDimLie:
    """
    Álgebra g com base x_0..x_{d−1}.

    Attributes:
        labels: rótulos da base
        structure: c[i, j, k] com [x_i, x_j] = Σ_k c[i, j, k] x_k
        form: matriz B[i, j] da forma bilinear
        traces: tr(x_i) quando g ⊂ gl(n) (None caso contrário)
    """

    labels: Tuple[str, ...]
    structure: np.ndarray
    form: np.ndarray
    traces: Optional[Tuple[Fraction, ...]] = None

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: Union[int, str]) -> int:
        if isinstance(label, int):
            return label
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"Rótulo '{label}' inexistente. Rótulos disponíveis: {', '.join(self.labels)}")

    # Construtores

    @classmethod
    def from_brackets(cls, labels: Sequence[str], brackets: Dict[Tuple[int, int], Vector],
                      form: Sequence[Sequence[Any]], traces: Optional[Sequence[Any]] = None) -> 'FinDimLie':
        """Monta a partir de [x_i, x_j] para i < j (o restante por antissimetria)."""
        d = len(labels)
        structure = _object_zeros(d, d, d)
        for (i, j), vector in brackets.items():
            for k, c in vector.items():
                structure[i, j, k] += Fraction(c)
                structure[j, i, k] -= Fraction(c)
        matrix = _object_zeros(d, d)
        for i, row in enumerate(form):
            for j, value in enumerate(row):
                matrix[i, j] = Fraction(value)
        return cls(tuple(labels), structure, matrix,
                   tuple(Fraction(t) for t in traces) if traces is not None else None)

    @classmethod
    def sl2(cls) -> 'FinDimLie':
        """sl(2) com base (e, f, h) e a forma traço da representação natural."""
        brackets = {
            (0, 1): {2: 1},   # [e, f] = h
            (2, 0): {0: 2},   # [h, e] = 2e
            (2, 1): {1: -2},  # [h, f] = −2f
        }
        form = [[0, 1, 0], [1, 0, 0], [0, 0, 2]]
        return cls.from_brackets(("e", "f", "h"), brackets, form, traces=(0, 0, 0))

    @classmethod
    def gl(cls, n: int) -> 'FinDimLie':
        """gl(n) com base E_ij e a forma traço B(E_ij, E_kl) = δ_jk δ_il."""
        if n < 1:
            raise ValueError(f"gl(n) exige n ≥ 1 (recebido {n})")
        units = [(i, j) for i in range(n) for j in range(n)]
        position = {u: p for p, u in enumerate(units)}
        brackets: Dict[Tuple[int, int], Vector] = {}
        for a, (i, j) in enumerate(units):
            for b, (k, l) in enumerate(units):
                if a >= b:
                    continue
                vector: Vector = {}
                if j == k:
                    vector[position[(i, l)]] = vector.get(position[(i, l)], Fraction(0)) + 1
                if l == i:
                    vector[position[(k, j)]] = vector.get(position[(k, j)], Fraction(0)) - 1
                vector = {key: c for key, c in vector.items() if c}
                if vector:
                    brackets[(a, b)] = vector
        form = [[1 if (j == k and i == l) else 0 for (k, l) in units] for (i, j) in units]
        traces = [1 if i == j else 0 for (i, j) in units]
        labels = [f"E{i + 1}{j + 1}" for (i, j) in units]
        return cls.from_brackets(labels, brackets, form, traces)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'FinDimLie':
        parsed = FinDimLieFile(**data)
        labels = parsed.labels or [f"x{i}" for i in range(parsed.dim)]
        if len(labels) != parsed.dim:
            raise ValueError(f"{len(labels)} rótulos para dimensão {parsed.dim}")
        structure = _object_zeros(parsed.dim, parsed.dim, parsed.dim)
        for i, j, k, value in parsed.brackets:
            structure[int(i), int(j), int(k)] = parse_rat(str(value))
        if len(parsed.form) != parsed.dim or any(len(row) != parsed.dim for row in parsed.form):
            raise ValueError(f"Forma bilinear deve ser {parsed.dim}×{parsed.dim}")
        form = _object_zeros(parsed.dim, parsed.dim)
        for i, row in enumerate(parsed.form):
            for j, value in enumerate(row):
                form[i, j] = parse_rat(str(value))
        return cls(tuple(labels), structure, form)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> 'FinDimLie':
        with open(path, "r", encoding="utf-8") as handle:
            return cls.from_dict(json.load(handle))

    def with_form(self, form: Sequence[Sequence[Any]]) -> 'FinDimLie':
        matrix = _object_zeros(self.dim, self.dim)
        for i, row in enumerate(form):
            for j, value in enumerate(row):
                matrix[i, j] = Fraction(value)
        return FinDimLie(self.labels, self.structure, matrix, self.traces)

    # Operações

    def bracket(self, i: int, j: int) -> Vector:
        return {k: self.structure[i, j, k] for k in range(self.dim) if self.structure[i, j, k] != 0}

    def pairing(self, i: int, j: int) -> Fraction:
        return self.form[i, j]

    def trace(self, i: int) -> Fraction:
        if self.traces is None:
            raise ValueError("Álgebra sem traço (não dada como subálgebra de gl(n))")
        return self.traces[i]

    def to_dict(self) -> Dict[str, Any]:
        d = self.dim
        brackets = [[i, j, k, format_rat(self.structure[i, j, k])]
                    for i, j, k in product(range(d), repeat=3) if self.structure[i, j, k] != 0]
        return {
            "dim": d,
            "labels": list(self.labels),
            "brackets": brackets,
            "form": [[format_rat(self.form[i, j]) for j in range(d)] for i in range(d)],
        }

    # Verificações

    def _bracket_vector(self, x: Vector, y: Vector) -> Vector:
        result: Vector = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.bracket(i, j).items():
                    result[k] = result.get(k, Fraction(0)) + a * b * c
        return {k: c for k, c in result.items() if c}

    def check(self) -> CheckReport:
        """Antissimetria, Jacobi, simetria de B e invariância B([x,y],z) = B(x,[y,z])."""
        d = self.dim
        report = CheckReport(f"lie:{'/'.join(self.labels)}")
        antisymmetric = bool(np.all(self.structure + self.structure.transpose(1, 0, 2) == 0))
        report.add(CheckRecord.build("lie:antisymmetry", antisymmetric))
        symmetric = bool(np.all(self.form == self.form.T))
        report.add(CheckRecord.build("lie:form_symmetric", symmetric))
        for i, j, k in product(range(d), repeat=3):
            jacobi: Vector = {}
            for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
                for key, c in self._bracket_vector(self.bracket(x, y), {z: Fraction(1)}).items():
                    jacobi[key] = jacobi.get(key, Fraction(0)) + c
            if any(jacobi.values()):
                report.add(CheckRecord.build(f"lie:jacobi:{[i, j, k]}", False, residual=jacobi))
            left = sum((c * self.form[m, k] for m, c in self.bracket(i, j).items()), Fraction(0))
            right = sum((c * self.form[i, m] for m, c in self.bracket(j, k).items()), Fraction(0))
            if left != right:
                report.add(CheckRecord.build(f"lie:invariance:{[i, j, k]}", False, left=left, right=right))
        if report.passed:
            report.add(CheckRecord.build("lie:jacobi_and_invariance", True, triples=d ** 3))
        return report

    def validate(self) -> Dict[str, Any]:
        report = self.check()
        errors = [r.id for r in report.failures]
        warnings: List[str] = []
        if self.traces is None:
            warnings.append("Sem traço: contraexemplo redutivo indisponível")
        return {"valid": not errors, "errors": errors, "warnings": warnings}
