"""
Ferramentas de emissão de relatórios: JSON, CSV e Markdown.

A saída padrão é estável byte a byte (sem datas, chaves ordenadas).
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Union

import pandas as pd

from src.config.engine_config import OutputFormat
from src.core.reports import ERROR, CheckRecord, CheckReport

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


@dataclass
class RunReport:
    """
    Resultado de uma execução da linha de comando.

    Attributes:
        suite: nome da suíte ou do subcomando
        records: registros de verificação na ordem de execução
        rows: tabela de valores opcional (tabelas de estrutura, cocíclos)
        summary: dados agregados (coeficientes, veredito, limites)
        exit_status: 2 para erro de uso; caso contrário derivado dos registros
    """

    suite: str
    records: List[CheckRecord] = field(default_factory=list)
    rows: List[Dict[str, Any]] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)
    exit_status: Optional[int] = None

    @classmethod
    def from_checks(cls, suite: str, reports: Iterable[CheckReport], **summary) -> 'RunReport':
        run = cls(suite, summary=dict(summary))
        for report in reports:
            run.add(report)
        return run

    @classmethod
    def usage_error(cls, suite: str, message: str) -> 'RunReport':
        return cls(suite, [CheckRecord(f"{suite}:usage", ERROR, {"error": message})], exit_status=EXIT_USAGE)

    def add(self, report: CheckReport) -> None:
        self.records.extend(report.records)

    def add_error(self, check_id: str, exc: Exception) -> None:
        """Converte uma exceção da biblioteca num registro 'error'."""
        logger.error(f"{check_id}: {type(exc).__name__}: {exc}")
        witness: Dict[str, Any] = {"error": str(exc), "type": type(exc).__name__}
        extra = getattr(exc, "witness", None)
        if isinstance(extra, dict):
            witness["witness"] = json.loads(json.dumps(extra, default=str))
        self.records.append(CheckRecord(check_id, ERROR, witness))

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def status(self) -> int:
        if self.exit_status is not None:
            return self.exit_status
        return EXIT_OK if self.passed else EXIT_FAILED

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "exit_status": self.status,
            "summary": self.summary,
            "records": [r.to_dict() for r in self.records],
            "rows": self.rows,
        }


class ReportTools:
    """Renderização de RunReport nos formatos suportados."""

    @staticmethod
    def records_frame(report: RunReport) -> pd.DataFrame:
        """Uma linha por registro; testemunha serializada como JSON ordenado."""
        data = [
            {
                "id": r.id,
                "status": r.status,
                "witness": json.dumps(r.witness, sort_keys=True, ensure_ascii=False),
            }
            for r in report.records
        ]
        return pd.DataFrame(data, columns=["id", "status", "witness"])

    @staticmethod
    def rows_frame(report: RunReport) -> pd.DataFrame:
        frame = pd.DataFrame(report.rows)
        return frame.astype(str) if not frame.empty else frame

    @staticmethod
    def render_json(report: RunReport) -> str:
        return json.dumps(report.to_dict(), indent=2, sort_keys=True, ensure_ascii=False, default=str) + "\n"

    @staticmethod
    def render_csv(report: RunReport) -> str:
        frame = ReportTools.rows_frame(report) if report.rows else ReportTools.records_frame(report)
        return frame.to_csv(index=False, lineterminator="\n")

    @staticmethod
    def render_md(report: RunReport) -> str:
        """Cabeçalho, resumo, tabela de valores (se houver) e registros."""
        status = "pass" if report.passed else "fail"
        lines = [f"# {report.suite}", "", f"status: {status} (exit {report.status})", ""]
        for key in sorted(report.summary):
            lines.append(f"- {key}: {report.summary[key]}")
        if report.summary:
            lines.append("")
        if report.rows:
            lines.append(ReportTools.rows_frame(report).to_markdown(index=False))
            lines.append("")
        if report.records:
            lines.append(ReportTools.records_frame(report).to_markdown(index=False))
            lines.append("")
        return "\n".join(lines)

    @staticmethod
    def render(report: RunReport, fmt: Union[OutputFormat, str]) -> str:
        fmt = OutputFormat.from_string(fmt)
        if fmt is OutputFormat.JSON:
            return ReportTools.render_json(report)
        if fmt is OutputFormat.CSV:
            return ReportTools.render_csv(report)
        return ReportTools.render_md(report)


def emit_report(report: RunReport, fmt: Union[OutputFormat, str] = "json",
                path: Optional[Union[str, Path]] = None) -> str:
    """
    Renderiza o relatório e, se `path` for dado, grava o arquivo.

    Args:
        report: Relatório da execução
        fmt: json, csv ou md
        path: Arquivo de saída (diretórios criados quando necessário)

    Returns:
        O texto emitido

    Raises:
        ValueError: formato desconhecido
    """
    text = ReportTools.render(report, fmt)
    if path is not None:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        logger.info(f"Relatório {report.suite} gravado em {target}")
    return text
