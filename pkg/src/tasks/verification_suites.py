"""
Suítes de verificação nomeadas, executadas pelo subcomando `verify`.

Cada suíte devolve um CheckReport; `run` agrega as suítes num RunReport e
transforma exceções da biblioteca em registros de erro.
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.algebra import OpKind, boundary_coefficient_check, structure_table
from src.cocycles import (
    CoboundaryData,
    CycleSpec,
    absorption_check,
    growth_witness_check,
    check_cocycle_properties,
    connection_locality_check,
    decomposition_roundtrip_check,
    extract_level_zero,
    finiteness_check,
    function_property_equivalence_check,
    geometric_cocycle,
    independence_check,
    level_zero_formula_check,
    locality_scan,
    point_cocycles,
    separating_cocycle,
    separating_witness_check,
    single_in_point_check,
    synthetic_cocycle,
)
from src.config import get_engine_config
from src.core.errors import KNCError
from src.core.laurent import clear_expansion_cache
from src.core.rat import format_rat
from src.core.reports import CheckRecord, CheckReport
from src.current import (
    FinDimLie,
    all_current_triples,
    current_cocycle_check,
    jacobi_check,
    psi_form,
    reductive_counterexample,
    sample_current_triples,
)
from src.forms import BasisIndex, MarkedConfig, get_basis, inverted_grading_report
from src.glinf import pullcyc_coefficients, std_cocycle_check, verify_pullcyc
from src.tools.report_tools import RunReport

logger = logging.getLogger(__name__)

KINDS = ("function", "vector", "mixing")
DUALITY_WEIGHTS = (-1, 0, 1, 2)
PULLCYC_WEIGHTS = (-1, 0, 1, 2, 3)


def _label(gamma) -> str:
    detail = ",".join(f"{k}={v}" for k, v in gamma.provenance.detail)
    return f"{gamma.provenance.source}[{detail}]" if detail else gamma.provenance.source


class VerificationSuites:
    """Suítes de verificação sobre uma janela de graus [−w, w]."""

    def __init__(self, window: Optional[int] = None, samples: Optional[int] = None,
                 seed: Optional[int] = None, threads: Optional[int] = None):
        """
        Args:
            window: Meia-largura da janela de graus (padrão: KNC_WINDOW)
            samples: Amostras aleatórias por propriedade (padrão: KNC_SAMPLES)
            seed: Semente (padrão: KNC_SEED)
            threads: Workers (padrão: KNC_THREADS)
        """
        engine = get_engine_config()
        self.window = window if window is not None else engine.window
        self.samples = samples if samples is not None else engine.samples
        self.seed = seed if seed is not None else engine.seed
        self.threads = threads

    @property
    def degree_window(self) -> Tuple[int, int]:
        return -self.window, self.window

    @property
    def suites(self) -> Dict[str, Callable[..., CheckReport]]:
        return {
            "duality": self.create_duality_suite,
            "almgrad": self.create_almgrad_suite,
            "virasoro": self.create_virasoro_suite,
            "locality": self.create_locality_suite,
            "levelzero": self.create_levelzero_suite,
            "pullcyc": self.create_pullcyc_suite,
            "properties": self.create_properties_suite,
            "decomposition": self.create_decomposition_suite,
            "affine": self.create_affine_suite,
            "growth": self.create_growth_suite,
            "inverted": self.create_inverted_suite,
        }

    def names(self) -> List[str]:
        return sorted(self.suites) + ["all"]

    def create_duality_suite(self, cfg: MarkedConfig, weights: Sequence[int] = DUALITY_WEIGHTS,
                             **_) -> CheckReport:
        """⟨f^λ_{n,p}, f^{1−λ}_{m,r}⟩ = δ_{−n}^m δ_p^r em toda a janela."""
        basis = get_basis(cfg)
        lo, hi = self.degree_window
        report = CheckReport("duality")
        for weight in weights:
            mismatches = []
            for n in range(lo, hi + 1):
                for p in range(1, cfg.K + 1):
                    left = basis.element(weight, n, p)
                    for m in range(lo, hi + 1):
                        for r in range(1, cfg.K + 1):
                            value = basis.pair(left, basis.element(1 - weight, m, r))
                            expected = 1 if (m == -n and p == r) else 0
                            if value != expected:
                                mismatches.append([n, p, m, r, value])
            report.add(CheckRecord.build(f"duality:lambda={weight}", not mismatches,
                                         window=[lo, hi], mismatches=mismatches[:5]))
        return report

    def create_almgrad_suite(self, cfg: MarkedConfig, weights: Sequence[int] = DUALITY_WEIGHTS,
                             **_) -> CheckReport:
        """Deslocamento inferior 0 e termo de grau n+m das quatro operações."""
        report = CheckReport("almgrad")
        operations = [(OpKind.FUN_MUL, None), (OpKind.VF_BRACKET, None), (OpKind.D1_BRACKET, None)]
        operations += [(OpKind.LIE_DERIVATIVE, w) for w in weights]
        for op_kind, weight in operations:
            table = structure_table(cfg, op_kind, weight, self.degree_window, self.threads)
            label = op_kind.value if weight is None else f"{op_kind.value}:lambda={weight}"
            report.add(CheckRecord.build(f"almgrad:{label}:lower_shift", table.lower_shift == 0,
                                         lower_shift=table.lower_shift, upper_shift=table.upper_shift))
            boundary = boundary_coefficient_check(table)
            report.add(CheckRecord.build(f"almgrad:{label}:boundary", boundary.passed,
                                         pairs=len(boundary.records),
                                         failures=[r.id for r in boundary.failures[:5]]))
        return report

    def create_virasoro_suite(self, cfg: Optional[MarkedConfig] = None, **_) -> CheckReport:
        """γ_S^{(v)}(e_n, e_m) = (n³−n)/12·δ_{n+m,0} na configuração clássica."""
        classical = MarkedConfig.classical()
        gamma = separating_cocycle(classical, "vector")
        lo, hi = self.degree_window
        report = CheckReport("virasoro")
        basis = get_basis(classical)
        for n in range(lo, hi + 1):
            for m in range(lo, hi + 1):
                value = gamma(basis.element(-1, n, 1), basis.element(-1, m, 1))
                expected = Fraction(n ** 3 - n, 12) if n + m == 0 else Fraction(0)
                if value != expected or n + m == 0:
                    report.add(CheckRecord.build(f"virasoro:n={n}:m={m}", value == expected,
                                                 expected=expected, actual=value))
        return report

    def virasoro_rows(self) -> List[Dict[str, str]]:
        """Linhas n, γ(e_n, e_{−n}) e o valor de (n³−n)/12."""
        classical = MarkedConfig.classical()
        basis = get_basis(classical)
        gamma = separating_cocycle(classical, "vector")
        rows = []
        for n in range(self.degree_window[0], self.degree_window[1] + 1):
            value = gamma(basis.element(-1, n, 1), basis.element(-1, -n, 1))
            rows.append({"n": n, "value": value, "(n³−n)/12": Fraction(n ** 3 - n, 12)})
        return rows

    def create_locality_suite(self, cfg: MarkedConfig, **_) -> CheckReport:
        """
        Cocíclos separadores locais com limite superior 0; para K ≥ 2 o cocíclo
        de ponto γ_{C_1} tem testemunha não nula em nível ≤ −2 onde γ_S se anula.
        """
        report = CheckReport("locality")
        levels = self.degree_window
        for kind in KINDS:
            scan = locality_scan(separating_cocycle(cfg, kind), levels, threads=self.threads)
            passed = scan.is_local and scan.upper_bound == 0
            report.add(CheckRecord.build(f"locality:separating:{kind}", passed, **scan.to_dict()))
        if cfg.K >= 2:
            point = geometric_cocycle(cfg, "function", CycleSpec.point(1))
            separating = separating_cocycle(cfg, "function")
            scan = locality_scan(point, levels, threads=self.threads)
            witnesses = [(level, pair) for level, (pair, _) in sorted(scan.witnesses.items()) if level <= -2]
            passed = False
            witness = {"nonzero_levels": list(scan.nonzero_levels)}
            for level, (x, y) in witnesses:
                if separating(x, y) == 0:
                    passed = True
                    witness.update(level=level, pair=[x.to_list(), y.to_list()], value=point(x, y))
                    break
            report.add(CheckRecord.build("locality:point_cycle_witness", passed, **witness))
        report.extend(connection_locality_check(cfg, (max(levels[0], -8), 4), self.threads))
        report.extend(finiteness_check(cfg, level_window=(max(levels[0], -6), 6), threads=self.threads))
        return report

    def create_levelzero_suite(self, cfg: MarkedConfig, **_) -> CheckReport:
        """Fórmulas de nível zero de γ_S com α = 1 e b = 0."""
        report = CheckReport("levelzero")
        for kind in KINDS:
            gamma = separating_cocycle(cfg, kind)
            params = extract_level_zero(gamma, kind)
            normalized = all(a == 1 for a in params.alpha) and all(b == 0 for b in params.b)
            report.add(CheckRecord.build(f"levelzero:{kind}:parameters", normalized, **params.to_dict()))
            report.extend(level_zero_formula_check(gamma, kind, self.degree_window))
        return report

    def create_pullcyc_suite(self, cfg: MarkedConfig, weights: Sequence[int] = PULLCYC_WEIGHTS,
                             **_) -> CheckReport:
        """Recuo do cocíclo de ḡl(∞) para cada peso λ."""
        report = CheckReport("pullcyc")
        for weight in weights:
            report.extend(verify_pullcyc(cfg, weight))
        return report

    def create_properties_suite(self, cfg: MarkedConfig, **_) -> CheckReport:
        """Propriedades dos cocíclos geométricos e do cocíclo padrão de ḡl(∞)."""
        report = CheckReport("properties")
        window = self.degree_window
        plan = [
            ("function", ("antisymmetry", "cocycle_condition", "multiplicative", "l_invariant")),
            ("vector", ("antisymmetry", "cocycle_condition")),
            ("mixing", ("cocycle_condition",)),
        ]
        for kind, properties in plan:
            cocycles = [separating_cocycle(cfg, kind)] + point_cocycles(cfg, kind)
            for gamma in cocycles:
                for prop in properties:
                    result = check_cocycle_properties(gamma, prop, window=window, count=self.samples,
                                                      seed=self.seed)
                    report.add(CheckRecord.build(f"properties:{kind}:{_label(gamma)}:{prop}",
                                                 result.passed, samples=len(result.records),
                                                 failures=[r.witness for r in result.failures[:3]]))
        report.extend(std_cocycle_check(count=min(self.samples, 50), seed=self.seed))
        return report

    def create_decomposition_suite(self, cfg: MarkedConfig, **_) -> CheckReport:
        """Ida e volta da decomposição, independência e absorção nas conexões."""
        report = CheckReport("decomposition")
        count = min(self.samples, 20)
        for kind in KINDS:
            report.extend(decomposition_roundtrip_check(cfg, kind, count=count, seed=self.seed,
                                                        support=6, threads=self.threads))
        report.extend(independence_check(cfg))
        report.extend(function_property_equivalence_check(cfg, seed=self.seed))
        for kind, cob_kind in (("vector", "W"), ("mixing", "V")):
            coboundary = CoboundaryData.of(cob_kind, {(0, 1): 1, (1, 1): -2})
            gamma = synthetic_cocycle(cfg, kind, [2] * cfg.K, coboundary)
            report.extend(absorption_check(gamma, threads=self.threads))
        if cfg.K == 1:
            report.extend(single_in_point_check(cfg, threads=self.threads))
        return report

    def create_affine_suite(self, cfg: MarkedConfig, **_) -> CheckReport:
        """Jacobi de ŝl(2) ⊗ A com a·γ_S e o contraexemplo redutivo em gl(2)."""
        report = CheckReport("affine")
        sl2 = FinDimLie.sl2()
        report.extend(sl2.check())
        gamma = separating_cocycle(cfg, "function") * 3
        triples = all_current_triples(sl2, cfg, (-min(self.window, 4), min(self.window, 4)))
        logger.info(f"Jacobi afim em {len(triples)} triplas")
        report.extend(jacobi_check(sl2, gamma, triples))

        gl2 = FinDimLie.gl(2)
        counterexample = reductive_counterexample(gl2, cfg)
        sampled = sample_current_triples(gl2, cfg, count=min(self.samples, 50), seed=self.seed)
        report.extend(current_cocycle_check(counterexample, sampled))
        low, high = BasisIndex(0, 0, 1), BasisIndex(0, 3, 1)
        multiplicative = check_cocycle_properties(psi_form(cfg), "multiplicative", [(low, low, high)])
        report.add(CheckRecord.build("affine:psi_not_multiplicative", not multiplicative.passed,
                                     failures=len(multiplicative.failures)))
        return report

    def create_growth_suite(self, cfg: MarkedConfig, **_) -> CheckReport:
        """Identidades dos elementos g_n, e_n, f_n e testemunhas do ciclo separador."""
        report = growth_witness_check(max(self.window, 30))
        if cfg.K >= 2:
            report.extend(separating_witness_check(cfg))
        return report

    def create_inverted_suite(self, cfg: MarkedConfig, **_) -> CheckReport:
        """Reexpansão de funções e campos na graduação invertida."""
        report = CheckReport("inverted")
        window = (-min(self.window, 4), min(self.window, 4))
        for weight in (0, -1):
            report.extend(inverted_grading_report(cfg, weight, window))
        return report

    def run(self, name: str, cfg: MarkedConfig, **options) -> RunReport:
        """
        Executa uma suíte (ou todas com 'all').

        Raises:
            ValueError: suíte desconhecida
        """
        if name == "all":
            selected = sorted(self.suites)
        elif name in self.suites:
            selected = [name]
        else:
            raise ValueError(f"Suíte '{name}' não existe. Suítes disponíveis: {', '.join(self.names())}")
        run = RunReport(name, summary={"config": str(cfg), "window": list(self.degree_window)})
        for suite in selected:
            logger.info(f"Iniciando suíte {suite} em {cfg}")
            try:
                run.add(self.suites[suite](cfg, **options))
            except KNCError as exc:
                run.add_error(f"{suite}:error", exc)
            logger.info(f"Suíte {suite} concluída")
        clear_expansion_cache()
        if "pullcyc" in selected:
            weights = options.get("weights", PULLCYC_WEIGHTS)
            run.summary["coefficients"] = {str(w): [format_rat(c) for c in pullcyc_coefficients(w)] for w in weights}
        if "virasoro" in selected:
            run.rows = [{k: format_rat(Fraction(v)) for k, v in row.items()} for row in self.virasoro_rows()]
        return run
