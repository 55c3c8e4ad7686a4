"""
Testes da emissão de relatórios em JSON, CSV e Markdown.
"""

import json

import pytest

from src.core.errors import ReconstructionError
from src.core.reports import CheckRecord, CheckReport
from src.tools import EXIT_FAILED, EXIT_OK, EXIT_USAGE, ReportTools, RunReport, emit_report


@pytest.fixture
def sample_report():
    """Relatório com um registro aprovado e uma tabela de valores."""
    checks = CheckReport("virasoro")
    checks.add(CheckRecord.build("virasoro:n=2", True))
    run = RunReport.from_checks("virasoro", [checks], config="I=(0) O=(inf)")
    run.rows = [{"n": "2", "(n³−n)/12": "1/2"}, {"n": "3", "(n³−n)/12": "2"}]
    return run


class TestRunReport:
    """Testes do estado do relatório."""

    def test_status_from_records(self, sample_report):
        """Testa o código 0 com todos os registros aprovados."""
        assert sample_report.passed
        assert sample_report.status == EXIT_OK
        sample_report.records.append(CheckRecord.build("virasoro:n=3", False, actual=1))
        assert sample_report.status == EXIT_FAILED

    def test_usage_error(self):
        """Testa o código 2 para erros de uso."""
        report = RunReport.usage_error("verify", "suíte inexistente")
        assert report.status == EXIT_USAGE
        assert report.records[0].status == "error"

    def test_add_error_keeps_witness(self):
        """Testa que a testemunha da exceção vai para o registro."""
        report = RunReport("decompose")
        report.add_error("decompose:error", ReconstructionError("sem solução", {"level": 3}))
        record = report.records[0]
        assert record.witness["type"] == "ReconstructionError"
        assert record.witness["witness"] == {"level": 3}
        assert report.status == EXIT_FAILED


class TestRendering:
    """Testes dos formatos de saída."""

    def test_json_is_deterministic(self, sample_report):
        """Testa chaves ordenadas e quebra de linha final."""
        first = ReportTools.render_json(sample_report)
        assert first == ReportTools.render_json(sample_report)
        assert first.endswith("\n")
        data = json.loads(first)
        assert list(data) == sorted(data)
        assert data["exit_status"] == 0

    def test_csv_uses_rows(self, sample_report):
        """Testa que a tabela de valores tem prioridade no CSV."""
        lines = ReportTools.render_csv(sample_report).splitlines()
        assert lines[0] == "n,(n³−n)/12"
        assert lines[1:] == ["2,1/2", "3,2"]

    def test_csv_falls_back_to_records(self):
        """Testa o CSV de registros sem tabela."""
        report = RunReport("scan")
        report.records.append(CheckRecord.build("scan:vector", True, verdict="local-in-window"))
        lines = ReportTools.render_csv(report).splitlines()
        assert lines[0] == "id,status,witness"
        assert lines[1].startswith("scan:vector,pass,")

    def test_markdown(self, sample_report):
        """Testa cabeçalho, resumo e tabela."""
        text = ReportTools.render_md(sample_report)
        assert text.startswith("# virasoro")
        assert "status: pass (exit 0)" in text
        assert "- config: I=(0) O=(inf)" in text
        assert "(n³−n)/12" in text

    def test_unknown_format(self, sample_report):
        """Testa a recusa de formatos desconhecidos."""
        with pytest.raises(ValueError):
            ReportTools.render(sample_report, "xml")


class TestEmitReport:
    """Testes da gravação dos relatórios."""

    def test_writes_file(self, sample_report, tmp_path):
        """Testa a criação de diretórios e o conteúdo gravado."""
        target = tmp_path / "reports" / "virasoro.json"
        text = emit_report(sample_report, "json", target)
        assert target.read_text(encoding="utf-8") == text

    def test_returns_text_without_path(self, sample_report):
        """Testa a emissão sem arquivo."""
        assert emit_report(sample_report, "md").startswith("# virasoro")
