"""
Aplicação principal do knc: motor simbólico exato para álgebras de
Krichever–Novikov em P¹.
"""

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from dotenv import load_dotenv

# Carrega variáveis de ambiente ANTES de importar outros módulos
load_dotenv()

from pydantic import ValidationError  # noqa: E402

from src.algebra import OpKind, boundary_coefficient_check, structure_table  # noqa: E402
from src.cocycles import (  # noqa: E402
    CoboundaryData,
    CocycleKind,
    decompose_bounded,
    extract_level_zero,
    geometric_cocycle,
    locality_scan,
    parse_cycle,
    synthetic_cocycle,
)
from src.cocycles.level_zero import level_zero_pair, level_zero_value  # noqa: E402
from src.config import get_engine_config, validate_config  # noqa: E402
from src.config.engine_config import OutputFormat  # noqa: E402
from src.core.errors import ConfigValidationError, KNCError  # noqa: E402
from src.core.rat import format_rat, parse_rat  # noqa: E402
from src.core.reports import CheckRecord, CheckReport  # noqa: E402
from src.current import FinDimLie, all_current_triples, jacobi_check  # noqa: E402
from src.forms import Form, MarkedConfig, ensure_valid, format_form, get_basis  # noqa: E402
from src.glinf import pullcyc_coefficients, verify_pullcyc  # noqa: E402
from src.tasks import VerificationSuites  # noqa: E402
from src.tools import EXIT_USAGE, RunReport, emit_report  # noqa: E402

# Fórmula normalizada (α = 1, b = 0) de cada tipo no nível zero
LEVEL_ZERO_COLUMNS = {
    CocycleKind.FUNCTION: ("n", lambda n: Fraction(n)),
    CocycleKind.VECTOR: ("(n³−n)/12", lambda n: Fraction(n ** 3 - n, 12)),
    CocycleKind.MIXING: ("n(n−1)", lambda n: Fraction(n * (n - 1))),
}


class UsageError(Exception):
    """Argumentos ou arquivos de entrada inválidos (código de saída 2)."""


def _status(message: str) -> None:
    print(message, file=sys.stderr)


def _load_json(path: str) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError:
        raise UsageError(f"Arquivo não encontrado: {path}")
    except json.JSONDecodeError as e:
        raise UsageError(f"JSON inválido em {path}: {e}")


class KNCApp:
    """Aplicação de linha de comando: um método por subcomando."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.window = args.window if args.window is not None else get_engine_config().window
        self.cfg = self._load_config(args.config)

    @staticmethod
    def _load_config(path: Optional[str]) -> MarkedConfig:
        """Lê a configuração (padrão: clássica I=(0), O=(∞)) e valida."""
        if path is None:
            return MarkedConfig.classical()
        try:
            return ensure_valid(MarkedConfig.from_dict(_load_json(path)))
        except ConfigValidationError:
            raise
        except (ValueError, KNCError) as e:
            raise UsageError(f"Configuração inválida em {path}: {e}")

    @property
    def degree_window(self):
        return -self.window, self.window

    def _weight(self) -> int:
        if self.args.weight is None:
            raise UsageError("--lambda é obrigatório para este subcomando")
        return self.args.weight

    def basis(self) -> RunReport:
        """f^λ_{n,p} renderizada, fatorada sobre os pontos finitos."""
        form = get_basis(self.cfg).element(self._weight(), self.args.n, self.args.p)
        text = format_form(form, [p.value for p in self.cfg.finite_points])
        print(text)
        return RunReport("basis", summary={"form": text, "config": str(self.cfg),
                                           "index": [self.args.weight, self.args.n, self.args.p]})

    def pair(self) -> RunReport:
        """⟨f, g⟩ por índices de base ou por arquivos de forma."""
        basis = get_basis(self.cfg)
        if self.args.left and self.args.right:
            left = Form.from_dict(_load_json(self.args.left))
            right = Form.from_dict(_load_json(self.args.right))
        else:
            weight = self._weight()
            left = basis.element(weight, self.args.n, self.args.p)
            right = basis.element(1 - weight, self.args.m, self.args.r)
        value = basis.pair(left, right)
        print(format_rat(value))
        return RunReport("pair", summary={"value": format_rat(value), "left": str(left), "right": str(right)})

    def table(self) -> RunReport:
        """Tabela de constantes de estrutura com a verificação do termo de fronteira."""
        op_kind = OpKind.from_string(self.args.op)
        weight = self.args.weight if op_kind is OpKind.LIE_DERIVATIVE else None
        table = structure_table(self.cfg, op_kind, weight, self.degree_window)
        run = RunReport(f"table:{op_kind.value}", rows=table.rows(),
                        summary={"lower_shift": table.lower_shift, "upper_shift": table.upper_shift,
                                 "config": str(self.cfg), "window": list(self.degree_window)})
        run.add(boundary_coefficient_check(table))
        return run

    def _cocycle(self):
        kind = CocycleKind.from_string(self.args.kind)
        if kind is CocycleKind.D1:
            raise UsageError("--kind deve ser function, vector ou mixing")
        return kind, geometric_cocycle(self.cfg, kind, parse_cycle(self.args.cycle))

    def cocycle(self) -> RunReport:
        """Tabela de nível zero do cocíclo geométrico contra a fórmula normalizada."""
        kind, gamma = self._cocycle()
        params = extract_level_zero(gamma, kind)
        column, formula = LEVEL_ZERO_COLUMNS[kind]
        run = RunReport(f"cocycle:{kind.value}:{self.args.cycle}", summary=params.to_dict())
        report = CheckReport("cocycle")
        for r in range(1, self.cfg.K + 1):
            for n in range(self.degree_window[0], self.degree_window[1] + 1):
                x, y = level_zero_pair(kind, n, r, r)
                value = gamma(x, y)
                row = {"n": n, "value": format_rat(value), column: format_rat(formula(n))}
                if self.cfg.K > 1:
                    row["r"] = r
                run.rows.append(row)
                expected = level_zero_value(params, n, r, r)
                report.add(CheckRecord.build(f"cocycle:{kind.value}:n={n}:r={r}", value == expected,
                                             expected=expected, actual=value))
        run.add(report)
        return run

    def scan(self) -> RunReport:
        """Varredura de localidade com veredito relativo à janela."""
        kind, gamma = self._cocycle()
        result = locality_scan(gamma, self.degree_window)
        run = RunReport(f"scan:{kind.value}:{self.args.cycle}", summary=result.to_dict())
        run.records.append(CheckRecord.build(f"scan:{kind.value}", result.is_local,
                                             verdict=result.verdict, upper_bound=result.upper_bound,
                                             lower_bound=result.lower_bound))
        return run

    def decompose(self) -> RunReport:
        """Decompõe Σ α_i γ_{C_i} + cobordo e compara com os dados de entrada."""
        kind = CocycleKind.from_string(self.args.kind)
        if not self.args.alpha:
            raise UsageError("--alpha é obrigatório (ex.: --alpha 1,2)")
        try:
            alpha = [parse_rat(a.strip()) for a in self.args.alpha.split(",")]
        except (KNCError, ValueError) as e:
            raise UsageError(f"--alpha inválido: {e}")
        coboundary = CoboundaryData.from_file(self.args.coboundary) if self.args.coboundary else None
        gamma = synthetic_cocycle(self.cfg, kind, alpha, coboundary)
        result = decompose_bounded(gamma, kind, window=min(self.window, 6))
        run = RunReport(f"decompose:{kind.value}", summary=result.to_dict())
        same_cob = coboundary is None or coboundary.is_empty or result.coboundary == coboundary
        run.records.append(CheckRecord.build(f"decompose:{kind.value}", list(result.alpha) == alpha and same_cob,
                                             alpha=alpha, recovered=list(result.alpha),
                                             coboundary=str(result.coboundary)))
        return run

    def pullcyc(self) -> RunReport:
        """γ_λ = recuo do cocíclo de ḡl(∞) e seus coeficientes."""
        weight = self._weight()
        report = verify_pullcyc(self.cfg, weight, self.args.glinf_window)
        return RunReport.from_checks(f"pullcyc:lambda={weight}", [report],
                                     coefficients=[format_rat(c) for c in pullcyc_coefficients(weight)])

    def affine(self) -> RunReport:
        """Identidade de Jacobi de g ⊗ A estendida por a·γ_S."""
        lie = FinDimLie.from_file(self.args.lie) if self.args.lie else FinDimLie.sl2()
        scale = parse_rat(self.args.scale)
        gamma = geometric_cocycle(self.cfg, "function") * scale
        reach = min(self.window, 4)
        triples = all_current_triples(lie, self.cfg, (-reach, reach))
        _status(f"🔍 Jacobi em {len(triples)} triplas (graus em [{-reach}, {reach}])")
        return RunReport.from_checks("affine", [lie.check(), jacobi_check(lie, gamma, triples)],
                                     lie="/".join(lie.labels), scale=format_rat(scale))

    def verify(self) -> RunReport:
        suites = VerificationSuites(self.window, self.args.samples, self.args.seed)
        options = {}
        if self.args.weight is not None:
            options["weights"] = (self.args.weight,)
        try:
            return suites.run(self.args.suite, self.cfg, **options)
        except ValueError as e:
            raise UsageError(str(e))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knc", description="Motor exato para álgebras de Krichever–Novikov em P¹")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='Arquivo JSON {in_points, out_points} (padrão: I=(0), O=(inf))')
    common.add_argument('--window', type=int, default=None, help='Meia-largura da janela de graus (padrão: 8)')
    common.add_argument('--format', default='json', choices=[f.value for f in OutputFormat],
                        help='Formato do relatório')
    common.add_argument('--out', default=None, help='Arquivo de saída (padrão: stdout)')
    common.add_argument('--lambda', dest='weight', type=int, default=None, help='Peso λ')

    subparsers = parser.add_subparsers(dest='command', required=True)

    basis = subparsers.add_parser('basis', parents=[common], help='Elemento de base f^λ_{n,p}')
    basis.add_argument('--n', type=int, required=True)
    basis.add_argument('--p', type=int, default=1)

    pair = subparsers.add_parser('pair', parents=[common], help='Pareamento KN ⟨f^λ_{n,p}, f^{1−λ}_{m,r}⟩')
    pair.add_argument('--n', type=int, default=0)
    pair.add_argument('--p', type=int, default=1)
    pair.add_argument('--m', type=int, default=0)
    pair.add_argument('--r', type=int, default=1)
    pair.add_argument('--left', help='Arquivo JSON de forma (peso λ)')
    pair.add_argument('--right', help='Arquivo JSON de forma (peso 1−λ)')

    table = subparsers.add_parser('table', parents=[common], help='Constantes de estrutura')
    table.add_argument('--op', required=True, choices=[k.value for k in OpKind])

    for name, text in (('cocycle', 'Tabela de nível zero de um cocíclo geométrico'),
                       ('scan', 'Varredura de localidade')):
        sub = subparsers.add_parser(name, parents=[common], help=text)
        sub.add_argument('--kind', required=True, choices=['function', 'vector', 'mixing'])
        sub.add_argument('--cycle', default='sep', help='"sep", "P:1", "Q:2", "P:1+2*P:2"')

    decompose = subparsers.add_parser('decompose', parents=[common], help='Decomposição de cocíclo limitado')
    decompose.add_argument('--kind', required=True, choices=['function', 'vector', 'mixing'])
    decompose.add_argument('--alpha', help='Coeficientes α_i separados por vírgula')
    decompose.add_argument('--coboundary', help='Arquivo JSON {kind: V|W, terms: [[n, r, "c"]]}')

    pullcyc = subparsers.add_parser('pullcyc', parents=[common], help='Recuo do cocíclo de gl(∞)')
    pullcyc.add_argument('--glinf-window', type=int, default=None, help='Meia-largura inicial dos índices ι')

    affine = subparsers.add_parser('affine', parents=[common], help='Jacobi da álgebra afim g ⊗ A')
    affine.add_argument('--lie', help='Arquivo JSON da álgebra g (padrão: sl(2))')
    affine.add_argument('--scale', default='1', help='Múltiplo a de γ_S')

    verify = subparsers.add_parser('verify', parents=[common], help='Suítes de verificação')
    verify.add_argument('--suite', required=True)
    verify.add_argument('--samples', type=int, default=None)
    verify.add_argument('--seed', type=int, default=None)
    return parser


def run_command(argv: Sequence[str]) -> RunReport:
    """
    Executa um subcomando e emite o relatório.

    Args:
        argv: Argumentos sem o nome do programa

    Returns:
        RunReport com o código de saída (0 ok, 1 falha, 2 uso/configuração)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        if e.code == 0:
            raise
        return RunReport.usage_error("knc", "argumentos inválidos")

    try:
        app = KNCApp(args)
        report = getattr(app, args.command)()
    except (UsageError, ConfigValidationError) as e:
        _status(f"❌ Erro de uso: {e}")
        report = RunReport.usage_error(args.command, str(e))
    except (ValidationError, ValueError) as e:
        _status(f"❌ Entrada inválida: {e}")
        report = RunReport.usage_error(args.command, str(e))
    except KNCError as e:
        report = RunReport(args.command)
        report.add_error(f"{args.command}:error", e)

    if args.command in ("basis", "pair") and args.out is None:
        return report
    text = emit_report(report, args.format, args.out)
    if args.out is None:
        sys.stdout.write(text)
    else:
        _status(f"📁 Relatório salvo em {args.out}")
    return report


def main(argv: Optional[List[str]] = None) -> int:
    """Função principal."""
    validation = validate_config()
    if not validation['valid']:
        for error in validation['errors']:
            _status(f"❌ {error}")
        return EXIT_USAGE
    for warning in validation['warnings']:
        _status(f"⚠️ {warning}")

    report = run_command(sys.argv[1:] if argv is None else argv)
    failures = [r for r in report.records if not r.passed]
    if report.status == 0:
        _status(f"✅ {report.suite}: {len(report.records)} verificações aprovadas")
    elif report.status == 1:
        _status(f"❌ {report.suite}: {len(failures)} de {len(report.records)} verificações falharam")
        for record in failures[:5]:
            _status(f"   - {record.id}")
    return report.status


if __name__ == "__main__":
    sys.exit(main())
