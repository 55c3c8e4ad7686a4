"""
Ferramentas da camada de saída do knc: relatórios de execução e emissão em
JSON, CSV e Markdown.
"""

from .report_tools import EXIT_FAILED, EXIT_OK, EXIT_USAGE, ReportTools, RunReport, emit_report

__all__ = [
    "RunReport",
    "ReportTools",
    "emit_report",
    "EXIT_OK",
    "EXIT_FAILED",
    "EXIT_USAGE",
]
