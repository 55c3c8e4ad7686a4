"""
Hierarquia de exceções do motor exato.

O código de biblioteca sempre levanta estas exceções; a camada de ferramentas
(`src.tools`) e o `main.py` as capturam, registram no log e convertem em
registros de relatório ou códigos de saída.
"""

from typing import Any, Dict, List, Optional


class KNCError(Exception):
    """Exceção base de todo o pacote."""


class ArithmeticDomainError(KNCError):
    """Operação fora do domínio (divisão pela função zero, polo fora dos pontos marcados)."""


class ConfigValidationError(KNCError):
    """Configuração de pontos marcados inválida."""

    def __init__(self, errors: List[str]):
        self.errors = list(errors)
        super().__init__("Configuração inválida: " + "; ".join(self.errors))


class WeightMismatchError(KNCError):
    """Pesos das formas incompatíveis com a operação solicitada."""


class ResidueTheoremViolation(KNCError):
    """Soma dos resíduos nos pontos de entrada difere da soma nos pontos de saída."""


class ReconstructionError(KNCError):
    """Reconstrução de uma expansão ou decomposição não confere exatamente."""

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        self.witness = dict(witness or {})
        super().__init__(message)


class WindowTooSmallError(KNCError):
    """Janela de índices pequena demais para garantir exatidão."""

    def __init__(self, required: int, given: int):
        self.required = required
        self.given = given
        super().__init__(f"Janela pequena demais: necessário {required}, recebido {given}")


class NotBoundedError(KNCError):
    """O cociclo não é limitado superiormente na janela examinada."""


class PropertyViolation(KNCError):
    """Uma identidade algébrica falhou; carrega a testemunha."""

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        self.witness = dict(witness or {})
        super().__init__(message)
