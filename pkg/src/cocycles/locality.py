"""
Varredura de localidade: avalia γ em todos os pares homogêneos de cada nível
(soma dos graus) de uma janela e mede os limites observados.

O veredito vale apenas para a janela varrida e para os níveis sondados acima dela:
    - unbounded-in-window: γ não se anula em algum nível acima da janela
    - bounded-above-only:  anula-se acima da janela mas não no nível mais baixo
    - local-in-window:     anula-se acima da janela e no nível mais baixo
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.config import get_threads
from src.core.reports import CheckRecord, CheckReport
from src.core.rat import format_rat
from src.forms.basis import get_basis
from src.forms.form import BasisIndex
from src.forms.marked_config import MarkedConfig

from .coboundary import CoboundaryData, coboundary_cocycle
from .connections import affine_connection_default, projective_connection_default
from .cycles import SEPARATING, CycleSpec
from .evaluator import CocycleEvaluator, CocycleKind
from .geometric import geometric_cocycle

logger = logging.getLogger(__name__)

LOCAL = "local-in-window"
BOUNDED_ABOVE = "bounded-above-only"
UNBOUNDED = "unbounded-in-window"

Pair = Tuple[BasisIndex, BasisIndex]

_PAIR_WEIGHTS = {
    CocycleKind.FUNCTION: [(0, 0)],
    CocycleKind.VECTOR: [(-1, -1)],
    CocycleKind.MIXING: [(-1, 0)],
    CocycleKind.D1: [(0, 0), (-1, 0), (0, -1), (-1, -1)],
}


@dataclass
class LocalityReport:
    """Resultado de locality_scan; limites relativos à janela."""

    window: Tuple[int, int]
    degree_range: Tuple[int, int]
    upper_bound: Optional[int]
    lower_bound: Optional[int]
    nonzero_levels: Tuple[int, ...]
    verdict: str
    witnesses: Dict[int, Tuple[Pair, Fraction]] = field(default_factory=dict)
    nonzero_above: Tuple[int, ...] = ()

    @property
    def is_local(self) -> bool:
        return self.verdict == LOCAL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "window": list(self.window),
            "degree_range": list(self.degree_range),
            "upper_bound": self.upper_bound,
            "lower_bound": self.lower_bound,
            "nonzero_levels": list(self.nonzero_levels),
            "nonzero_above": list(self.nonzero_above),
            "verdict": self.verdict,
            "window_relative": True,
            "witnesses": {
                str(level): {"pair": [x.to_list(), y.to_list()], "value": format_rat(value)}
                for level, ((x, y), value) in sorted(self.witnesses.items())
            },
        }


def default_degree_range(window: Tuple[int, int], margin: int = 2) -> Tuple[int, int]:
    reach = max(abs(window[0]), abs(window[1])) + margin
    return -reach, reach


def level_pairs(cfg: MarkedConfig, kind, level: int, degree_range: Tuple[int, int]) -> List[Pair]:
    """Pares homogêneos (x, y) com deg x + deg y = level e graus na faixa."""
    kind = CocycleKind.from_string(kind)
    lo, hi = degree_range
    pairs = []
    for wx, wy in _PAIR_WEIGHTS[kind]:
        for n in range(lo, hi + 1):
            m = level - n
            if not lo <= m <= hi:
                continue
            for r in range(1, cfg.K + 1):
                for s in range(1, cfg.K + 1):
                    pairs.append((BasisIndex(wx, n, r), BasisIndex(wy, m, s)))
    return pairs


def evaluate_pairs(gamma: CocycleEvaluator, pairs: Sequence[Pair],
                   threads: Optional[int] = None) -> Dict[Pair, Fraction]:
    """Avalia γ em paralelo; o resultado não depende da ordem de conclusão."""
    basis = get_basis(gamma.cfg)
    workers = threads or get_threads()

    def task(pair: Pair) -> Fraction:
        x, y = pair
        return gamma(basis.basis_element(x), basis.basis_element(y))

    if workers <= 1:
        return {pair: task(pair) for pair in pairs}
    values: Dict[Pair, Fraction] = {}
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(task, pair): pair for pair in pairs}
        for future in as_completed(futures):
            values[futures[future]] = future.result()
    return values


def locality_scan(gamma: CocycleEvaluator, level_window: Tuple[int, int] = (-10, 10),
                  degree_range: Optional[Tuple[int, int]] = None, kind=None,
                  threads: Optional[int] = None, levels_above: int = 2) -> LocalityReport:
    """
    Mede os níveis onde γ não se anula.

    O limite superior é decidido pelos níveis hi+1..hi+levels_above, avaliados
    além da janela: um valor não nulo no próprio topo não basta para o
    veredito unbounded-in-window.

    Args:
        gamma: Cocíclo
        level_window: Intervalo [lo, hi] de níveis
        degree_range: Faixa de graus dos argumentos (padrão: janela + sondagem + 2)
        kind: Tipo de pares varridos (padrão: o tipo de γ)
        threads: Workers
        levels_above: Quantidade de níveis sondados acima da janela (≥ 1)

    Returns:
        LocalityReport com limites observados e veredito
    """
    lo, hi = level_window
    if lo > hi:
        raise ValueError(f"Janela de níveis inválida: {level_window}")
    if levels_above < 1:
        raise ValueError(f"levels_above deve ser >= 1 (recebido {levels_above})")
    kind = CocycleKind.from_string(kind) if kind is not None else gamma.kind
    top = hi + levels_above
    degree_range = degree_range or default_degree_range((lo, top))
    by_level = {level: level_pairs(gamma.cfg, kind, level, degree_range) for level in range(lo, top + 1)}
    everything = [pair for level in range(lo, top + 1) for pair in by_level[level]]
    logger.info(f"Varredura de localidade {gamma.provenance.source}/{kind.value}: níveis {level_window} "
                f"(+{levels_above} acima), {len(everything)} pares")
    values = evaluate_pairs(gamma, everything, threads)

    found: Dict[int, Tuple[Pair, Fraction]] = {}
    for level in range(lo, top + 1):
        for pair in by_level[level]:
            if values[pair]:
                found[level] = (pair, values[pair])
                break
    witnesses = {level: found[level] for level in found if level <= hi}
    above = tuple(sorted(level for level in found if level > hi))
    nonzero = tuple(sorted(witnesses))
    if above:
        verdict = UNBOUNDED
    elif lo in witnesses:
        verdict = BOUNDED_ABOVE
    else:
        verdict = LOCAL
    if verdict != LOCAL:
        logger.warning(f"Veredito {verdict} na janela {level_window}")
    return LocalityReport(
        window=(lo, hi),
        degree_range=tuple(degree_range),
        upper_bound=max(nonzero) if nonzero else None,
        lower_bound=min(nonzero) if nonzero else None,
        nonzero_levels=nonzero,
        verdict=verdict,
        witnesses=witnesses,
        nonzero_above=above,
    )


def connection_locality_check(cfg: MarkedConfig, level_window: Tuple[int, int] = (-8, 4),
                              threads: Optional[int] = None) -> CheckReport:
    """
    Cocíclos separadores com conexões de referência e com conexões deslocadas
    por Ω^{0,1} (polo ≤ 2 nos pontos de entrada) e ω^{0,1} (polo ≤ 1):
    todos locais com limite superior 0; γ_{C_i} limitados por 0.
    """
    basis = get_basis(cfg)
    report = CheckReport("locality:geometric")
    candidates = [
        ("function:sep", geometric_cocycle(cfg, "function")),
        ("vector:sep:R0", geometric_cocycle(cfg, "vector")),
        ("mixing:sep:T0", geometric_cocycle(cfg, "mixing")),
        ("vector:sep:R0+Omega", geometric_cocycle(
            cfg, "vector", SEPARATING, projective_connection_default(cfg).shifted(basis.element(2, 0, 1)))),
        ("mixing:sep:T0+omega", geometric_cocycle(
            cfg, "mixing", SEPARATING, affine_connection_default(cfg).shifted(basis.element(1, 0, 1)))),
    ]
    for label, gamma in candidates:
        scan = locality_scan(gamma, level_window, threads=threads)
        passed = scan.is_local and scan.upper_bound == 0
        report.add(CheckRecord.build(f"locality:{label}", passed, upper_bound=scan.upper_bound,
                                     lower_bound=scan.lower_bound, verdict=scan.verdict))
    for kind in ("function", "vector", "mixing"):
        for i in range(1, cfg.K + 1):
            scan = locality_scan(geometric_cocycle(cfg, kind, CycleSpec.point(i)), level_window, threads=threads)
            passed = scan.upper_bound is not None and scan.upper_bound <= 0
            report.add(CheckRecord.build(f"locality:{kind}:P:{i}", passed, upper_bound=scan.upper_bound,
                                         verdict=scan.verdict))
    return report


def finiteness_check(cfg: MarkedConfig, truncations: Sequence[int] = (0, 1, 2, 3),
                     level_window: Tuple[int, int] = (-6, 6), threads: Optional[int] = None) -> CheckReport:
    """
    Cobordos finitos são locais: para V_t = Σ_{k=0}^{t} ω^{k,1} o cobordo E_{V_t}
    tem limite superior exatamente t; D_W com W = Ω^{t,1} fica limitado por t.
    """
    report = CheckReport("locality:finiteness")
    for t in truncations:
        if t >= level_window[1]:
            raise ValueError(f"Truncamento {t} fora da janela {level_window}")
        v_data = CoboundaryData.of("V", {(k, 1): 1 for k in range(t + 1)})
        scan = locality_scan(coboundary_cocycle(cfg, v_data), level_window, threads=threads)
        report.add(CheckRecord.build(f"finiteness:V:t={t}", scan.is_local and scan.upper_bound == t,
                                     upper_bound=scan.upper_bound, lower_bound=scan.lower_bound,
                                     verdict=scan.verdict))
        w_data = CoboundaryData.of("W", {(t, 1): 1})
        scan = locality_scan(coboundary_cocycle(cfg, w_data), level_window, threads=threads)
        passed = scan.is_local and scan.upper_bound is not None and scan.upper_bound <= t
        report.add(CheckRecord.build(f"finiteness:W:t={t}", passed, upper_bound=scan.upper_bound,
                                     lower_bound=scan.lower_bound, verdict=scan.verdict))
    return report
