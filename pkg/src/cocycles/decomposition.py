"""
Decomposição construtiva de cocíclos limitados superiormente.

Um cocíclo limitado do tipo vector (mixing) é reconstruído como
Σ_i α_i γ_{C_i} + D_W (+ E_V), descendo nível a nível: no nível l as incógnitas
são os β_{l,t} do cobordo e, no nível 0, os α_i. Cada nível é um sistema
linear exato resolvido por eliminação gaussiana em frações.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.algebra.identities import all_indices
from src.core.errors import NotBoundedError, PropertyViolation, ReconstructionError
from src.core.rat import format_rat
from src.core.reports import CheckRecord, CheckReport
from src.forms.basis import get_basis
from src.forms.form import BasisIndex
from src.forms.marked_config import MarkedConfig

from .checks import check_cocycle_properties, random_coefficients
from .coboundary import CoboundaryData, coboundary_cocycle
from .connections import AffConn, ProjConn, affine_connection_default, projective_connection_default
from .cycles import SEPARATING, CycleSpec
from .evaluator import CocycleEvaluator, CocycleKind, Provenance, bilinear_from_basis, linear_combination
from .geometric import geometric_cocycle, point_cocycles
from .locality import default_degree_range, evaluate_pairs, level_pairs, locality_scan

logger = logging.getLogger(__name__)

_COBOUNDARY_KIND = {CocycleKind.VECTOR: "W", CocycleKind.MIXING: "V"}


@dataclass
class DecompositionResult:
    """γ = Σ α_i γ_{C_i} + cobordo, exato em todos os pares da janela."""

    cfg: MarkedConfig
    kind: CocycleKind
    alpha: Tuple[Fraction, ...]
    coboundary: Optional[CoboundaryData]
    window: Tuple[int, int]
    free_unknowns: List[str] = field(default_factory=list)

    def reconstruct(self) -> CocycleEvaluator:
        terms = list(zip(self.alpha, point_cocycles(self.cfg, self.kind)))
        gamma = linear_combination(terms)
        if self.coboundary is not None and not self.coboundary.is_empty:
            gamma = gamma + coboundary_cocycle(self.cfg, self.coboundary)
        return gamma

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "alpha": [format_rat(a) for a in self.alpha],
            "coboundary": self.coboundary.to_dict() if self.coboundary is not None else None,
            "window": list(self.window),
            "free_unknowns": list(self.free_unknowns),
        }


def solve_exact(matrix: np.ndarray, rhs: np.ndarray) -> Tuple[Optional[List[Fraction]], Optional[int], List[int]]:
    """
    Resolve A x = b em frações (matrizes numpy de dtype object).

    Returns:
        (solução com livres = 0, índice da primeira equação inconsistente, colunas livres)
    """
    rows, cols = matrix.shape
    work = np.empty((rows, cols + 1), dtype=object)
    work[:, :cols] = matrix
    work[:, cols] = rhs
    order = list(range(rows))
    pivots: List[int] = []
    row = 0
    for col in range(cols):
        pivot = next((r for r in range(row, rows) if work[r, col] != 0), None)
        if pivot is None:
            continue
        if pivot != row:
            work[[row, pivot]] = work[[pivot, row]]
            order[row], order[pivot] = order[pivot], order[row]
        work[row] = work[row] / work[row, col]
        for r in range(rows):
            if r != row and work[r, col] != 0:
                work[r] = work[r] - work[r, col] * work[row]
        pivots.append(col)
        row += 1
        if row == rows:
            break
    for r in range(row, rows):
        if work[r, cols] != 0:
            return None, order[r], []
    solution = [Fraction(0)] * cols
    for r, col in enumerate(pivots):
        solution[col] = Fraction(work[r, cols])
    free = [c for c in range(cols) if c not in pivots]
    return solution, None, free


def _ensure_function_property(gamma: CocycleEvaluator, window: Tuple[int, int]) -> None:
    multiplicative = check_cocycle_properties(gamma, "multiplicative", window=window)
    if multiplicative.passed:
        return
    invariant = check_cocycle_properties(gamma, "l_invariant", window=window)
    if invariant.passed:
        return
    witness = multiplicative.failures[0].to_dict()
    raise PropertyViolation("Cocíclo de funções nem multiplicativo nem L-invariante", witness)


def decompose_bounded(gamma: CocycleEvaluator, kind=None, window: int = 6,
                      threads: Optional[int] = None) -> DecompositionResult:
    """
    Decompõe γ limitado superiormente em cocíclos de ponto e cobordo.

    Args:
        gamma: Cocíclo (function, vector ou mixing)
        kind: Tipo (padrão: o tipo de γ)
        window: Janela de níveis [−window, window]; graus em [−window−2, window+2]
        threads: Workers da avaliação

    Returns:
        DecompositionResult com α_1..α_K e W/V truncado à janela

    Raises:
        NotBoundedError: γ não se anula no nível mais alto
        ReconstructionError: sistema inconsistente; leva o primeiro par que falha
        PropertyViolation: tipo function nem multiplicativo nem L-invariante
    """
    kind = CocycleKind.from_string(kind) if kind is not None else gamma.kind
    if kind is CocycleKind.D1:
        raise ValueError("Decomponha cada parte de split_d1_cocycle separadamente")
    if window < 2:
        raise ValueError(f"Janela de decomposição pequena demais: {window}")
    cfg = gamma.cfg
    K = cfg.K
    levels = (-window, window)
    degree_range = default_degree_range(levels)
    if kind is CocycleKind.FUNCTION:
        _ensure_function_property(gamma, (-3, 3))

    by_level = {level: level_pairs(cfg, kind, level, degree_range) for level in range(-window, window + 1)}
    target = evaluate_pairs(gamma, [p for ps in by_level.values() for p in ps], threads)
    if any(target[p] for p in by_level[window]):
        raise NotBoundedError(f"Cocíclo não se anula no nível {window}: aumente a janela ou confira a limitação")

    basis = get_basis(cfg)
    points = point_cocycles(cfg, kind)
    cob_kind = _COBOUNDARY_KIND.get(kind)
    known: List[Tuple[Fraction, CocycleEvaluator]] = []
    beta: Dict[Tuple[int, int], Fraction] = {}
    alpha: Tuple[Fraction, ...] = tuple(Fraction(0) for _ in range(K))
    free: List[str] = []

    def residual(pair) -> Fraction:
        x, y = (basis.basis_element(i) for i in pair)
        return target[pair] - sum((c * g(x, y) for c, g in known), Fraction(0))

    for level in range(window, -window - 1, -1):
        pairs = by_level[level]
        unknowns: List[Tuple[str, Optional[Tuple[int, int]], CocycleEvaluator]] = []
        if cob_kind is not None:
            for t in range(1, K + 1):
                unit = CoboundaryData.of(cob_kind, {(level, t): 1})
                unknowns.append((f"beta[{level},{t}]", (level, t), coboundary_cocycle(cfg, unit)))
        if level == 0:
            unknowns.extend((f"alpha[{i}]", None, g) for i, g in enumerate(points, start=1))
        rhs = np.array([residual(p) for p in pairs], dtype=object)
        if not unknowns:
            bad = next((i for i, v in enumerate(rhs) if v), None)
            if bad is not None:
                raise _failure(pairs[bad], rhs[bad], level)
            continue
        matrix = np.empty((len(pairs), len(unknowns)), dtype=object)
        for i, pair in enumerate(pairs):
            x, y = (basis.basis_element(j) for j in pair)
            for j, (_, _, g) in enumerate(unknowns):
                matrix[i, j] = g(x, y)
        solution, bad, free_cols = solve_exact(matrix, rhs)
        if solution is None:
            raise _failure(pairs[bad], rhs[bad], level)
        for col in free_cols:
            logger.warning(f"Incógnita livre {unknowns[col][0]} fixada em 0")
            free.append(unknowns[col][0])
        for (_, key, g), value in zip(unknowns, solution):
            if not value:
                continue
            if key is not None:
                beta[key] = value
            known.append((value, g))
        if level == 0:
            alpha = tuple(solution[-K:])
    coboundary = CoboundaryData.of(cob_kind, beta) if cob_kind is not None else None
    result = DecompositionResult(cfg, kind, alpha, coboundary, levels, free)
    logger.info(f"Decomposição {kind.value}: α={[format_rat(a) for a in alpha]}, cobordo={coboundary}")
    return result


def _failure(pair, value: Fraction, level: int) -> ReconstructionError:
    x, y = pair
    return ReconstructionError(
        f"Resíduo não nulo no nível {level}",
        {"pair": [x.to_list(), y.to_list()], "residual": format_rat(value), "level": level},
    )


def split_d1_cocycle(gamma: CocycleEvaluator) -> Tuple[CocycleEvaluator, CocycleEvaluator, CocycleEvaluator]:
    """(γ^{(f)}, γ^{(m)}, γ^{(v)}): restrições a A×A, L×A e L×L."""
    return gamma.function_part(), gamma.mixing_part(), gamma.vector_part()


def extend_function_cocycle_to_d1(gamma: CocycleEvaluator, samples=None,
                                  window: Tuple[int, int] = (-4, 4)) -> CocycleEvaluator:
    """
    Estende γ^{(f)} L-invariante a D¹, anulando-se quando um argumento tem
    parte de campo.

    Raises:
        PropertyViolation: γ não é L-invariante nas amostras (leva a tripla)
    """
    if gamma.kind not in (CocycleKind.FUNCTION, CocycleKind.D1):
        raise ValueError(f"Esperado cocíclo de funções (recebido {gamma.kind.value})")
    report = check_cocycle_properties(gamma.function_part(), "l_invariant", samples, window=window)
    if not report.passed:
        raise PropertyViolation("Cocíclo de funções não é L-invariante", report.failures[0].to_dict())
    return CocycleEvaluator(gamma.cfg, CocycleKind.D1, fn=gamma.fn,
                            provenance=Provenance.of("extension", of=gamma.provenance.source))


def absorb_into_connection(result: DecompositionResult) -> Tuple[Fraction, Union[AffConn, ProjConn]]:
    """
    Para α_i = α ≠ 0 devolve (α, conexão) com α·γ_{S,R/T} igual à entrada:
    T = T⁰ + V/α (mixing) ou R = R⁰ + (12/α)·W (vector).

    Raises:
        ValueError: α não uniforme, nulo ou tipo sem conexão
    """
    if result.kind not in _COBOUNDARY_KIND:
        raise ValueError(f"Tipo {result.kind.value} não tem conexão para absorver o cobordo")
    if len(set(result.alpha)) != 1 or not result.alpha[0]:
        raise ValueError(f"Absorção exige α_i iguais e não nulos (recebido {[format_rat(a) for a in result.alpha]})")
    alpha = result.alpha[0]
    cfg = result.cfg
    extra = result.coboundary.form(cfg)
    if result.kind is CocycleKind.MIXING:
        return alpha, affine_connection_default(cfg).shifted(extra * (1 / alpha))
    return alpha, projective_connection_default(cfg).shifted(extra * (12 / alpha))


def absorption_check(gamma: CocycleEvaluator, window: int = 4, threads: Optional[int] = None) -> CheckReport:
    """Decompõe, absorve o cobordo na conexão e compara α·γ_{S,conn} com γ na janela."""
    result = decompose_bounded(gamma, window=window, threads=threads)
    alpha, connection = absorb_into_connection(result)
    absorbed = geometric_cocycle(gamma.cfg, result.kind, SEPARATING, connection) * alpha
    report = CheckReport(f"absorption:{result.kind.value}")
    levels = (-window, window)
    pairs = [p for level in range(-window, window + 1)
             for p in level_pairs(gamma.cfg, result.kind, level, default_degree_range(levels))]
    expected = evaluate_pairs(gamma, pairs, threads)
    actual = evaluate_pairs(absorbed, pairs, threads)
    mismatches = [p for p in pairs if expected[p] != actual[p]]
    witness = {"alpha": alpha, "connection": connection.func.to_string(), "pairs": len(pairs)}
    if mismatches:
        x, y = mismatches[0]
        witness["first_mismatch"] = [x.to_list(), y.to_list()]
    report.add(CheckRecord.build(f"absorption:{result.kind.value}", not mismatches, **witness))
    return report


def independence_matrix(cfg: MarkedConfig) -> np.ndarray:
    """Matriz K×K de γ_{C_i}(A_{−1,r}, A_{1,r}) (dtype object)."""
    K = cfg.K
    matrix = np.empty((K, K), dtype=object)
    for i, gamma in enumerate(point_cocycles(cfg, "function")):
        for r in range(1, K + 1):
            matrix[i, r - 1] = gamma(BasisIndex(0, -1, r), BasisIndex(0, 1, r))
    return matrix


def independence_check(cfg: MarkedConfig) -> CheckReport:
    matrix = independence_matrix(cfg)
    identity = all(matrix[i, j] == (1 if i == j else 0) for i in range(cfg.K) for j in range(cfg.K))
    report = CheckReport("independence")
    report.add(CheckRecord.build("independence:point_cocycles", identity,
                                 matrix=[[v for v in row] for row in matrix.tolist()]))
    return report


def synthetic_cocycle(cfg: MarkedConfig, kind, alpha: Sequence, coboundary: Optional[CoboundaryData] = None
                      ) -> CocycleEvaluator:
    """Σ α_i γ_{C_i} (+ cobordo): entrada das verificações de ida e volta."""
    kind = CocycleKind.from_string(kind)
    if len(alpha) != cfg.K:
        raise ValueError(f"Esperados {cfg.K} coeficientes α (recebidos {len(alpha)})")
    gamma = linear_combination(zip([Fraction(a) for a in alpha], point_cocycles(cfg, kind)))
    if coboundary is not None and not coboundary.is_empty:
        if coboundary.cocycle_kind is not kind:
            raise ValueError(f"Cobordo {coboundary.kind} incompatível com o tipo {kind.value}")
        gamma = gamma + coboundary_cocycle(cfg, coboundary)
    return gamma


def decomposition_roundtrip_check(cfg: MarkedConfig, kind, count: int = 5, seed: int = 0,
                                  support: int = 3, window: int = 4, threads: Optional[int] = None) -> CheckReport:
    """
    Combinações aleatórias Σ α_i γ_{C_i} + cobordo com suporte ≤ `support` nos
    níveis [−2, 2]: decompose_bounded deve recuperar α e o cobordo.
    """
    kind = CocycleKind.from_string(kind)
    rng = np.random.default_rng(seed)
    report = CheckReport(f"decomposition:{kind.value}")
    cob_kind = _COBOUNDARY_KIND.get(kind)
    for sample in range(count):
        alpha = random_coefficients(cfg.K, seed + sample)
        data = None
        if cob_kind is not None:
            keys = {(int(rng.integers(-2, 3)), int(rng.integers(1, cfg.K + 1))) for _ in range(support)}
            values = random_coefficients(len(keys), seed + 1000 + sample)
            data = CoboundaryData.of(cob_kind, dict(zip(sorted(keys), values)))
        gamma = synthetic_cocycle(cfg, kind, alpha, data)
        try:
            result = decompose_bounded(gamma, kind, window, threads)
            passed = tuple(result.alpha) == tuple(alpha) and (data is None or result.coboundary == data)
            report.add(CheckRecord.build(f"decomposition:{kind.value}:{sample}", passed,
                                         alpha=list(alpha), recovered=list(result.alpha),
                                         coboundary=str(data), recovered_coboundary=str(result.coboundary)))
        except (ReconstructionError, NotBoundedError) as exc:
            logger.error(f"Decomposição {kind.value} falhou: {exc}")
            report.add(CheckRecord.build(f"decomposition:{kind.value}:{sample}", False, error=str(exc)))
    return report


def non_geometric_function_form(cfg: MarkedConfig, low: int = 0, high: int = 3) -> CocycleEvaluator:
    """Forma antissimétrica com γ(A_{low,1}, A_{high,1}) = 1 e zero nos demais pares de base."""
    a, b = BasisIndex(0, low, 1), BasisIndex(0, high, 1)

    def values(i: BasisIndex, j: BasisIndex) -> Fraction:
        if (i, j) == (a, b):
            return Fraction(1)
        if (i, j) == (b, a):
            return Fraction(-1)
        return Fraction(0)

    return CocycleEvaluator.build(cfg, CocycleKind.FUNCTION,
                                  Provenance.of("custom", support=f"A({low},1)^A({high},1)"),
                                  fn=bilinear_from_basis(cfg, values))


def function_property_equivalence_check(cfg: MarkedConfig, count: int = 3, seed: int = 0,
                                        window: Tuple[int, int] = (-1, 4)) -> CheckReport:
    """
    Cocíclos de funções limitados: multiplicativo ⇔ L-invariante. Testa
    combinações aleatórias de γ_{C_i} (ambas passam) e a forma não geométrica
    γ(A_0, A_3) = 1 (ambas falham).
    """
    report = CheckReport("function:multiplicative_iff_l_invariant")
    functions = all_indices(cfg, 0, window)
    fields = all_indices(cfg, -1, (window[0], window[1] - 1))
    triples = list(product(functions, functions, functions))
    actions = list(product(fields, functions, functions))
    family = [(f"combination:{i}", synthetic_cocycle(cfg, "function", random_coefficients(cfg.K, seed + i)))
              for i in range(count)]
    family.append(("non_geometric", non_geometric_function_form(cfg)))
    for label, gamma in family:
        multiplicative = check_cocycle_properties(gamma, "multiplicative", triples).passed
        invariant = check_cocycle_properties(gamma, "l_invariant", actions).passed
        report.add(CheckRecord.build(f"function:{label}", multiplicative == invariant,
                                     multiplicative=multiplicative, l_invariant=invariant))
    return report


def single_in_point_check(cfg: MarkedConfig, level_window: Tuple[int, int] = (-6, 3),
                          threads: Optional[int] = None) -> CheckReport:
    """
    Com K = 1: γ_{C_1} coincide com γ_S, a decomposição devolve um único α e
    o cocíclo é local na janela.
    """
    if cfg.K != 1:
        raise ValueError(f"Verificação exige K = 1 (recebido K = {cfg.K})")
    report = CheckReport("single_in_point")
    degree_range = default_degree_range(level_window)
    for kind in ("function", "vector", "mixing"):
        point = geometric_cocycle(cfg, kind, CycleSpec.point(1))
        separating = geometric_cocycle(cfg, kind, SEPARATING)
        pairs = [p for level in range(level_window[0], level_window[1] + 1)
                 for p in level_pairs(cfg, kind, level, degree_range)]
        left, right = evaluate_pairs(point, pairs, threads), evaluate_pairs(separating, pairs, threads)
        report.add(CheckRecord.build(f"single_in_point:{kind}:point_equals_separating",
                                     all(left[p] == right[p] for p in pairs), pairs=len(pairs)))
        scan = locality_scan(point, level_window, threads=threads)
        report.add(CheckRecord.build(f"single_in_point:{kind}:local", scan.is_local,
                                     upper_bound=scan.upper_bound, lower_bound=scan.lower_bound))
        result = decompose_bounded(point * 3, kind, window=4, threads=threads)
        report.add(CheckRecord.build(f"single_in_point:{kind}:decomposition", result.alpha == (Fraction(3),),
                                     alpha=list(result.alpha)))
    return report
