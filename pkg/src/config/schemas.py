"""
Esquemas pydantic dos documentos JSON lidos pela ferramenta.
"""

from typing import List, Literal, Optional, Union

from pydantic import BaseModel, Field, field_validator


class MarkedConfigFile(BaseModel):
    """Input schema para a configuração de pontos marcados."""
    in_points: List[Union[int, str]] = Field(..., description="Pontos de entrada I (\"p\", \"p/q\")")
    out_points: List[Union[int, str]] = Field(..., description="Pontos de saída O (\"p\", \"p/q\" ou \"inf\")")


class FormFile(BaseModel):
    """Input schema para uma forma f(z) dz^λ."""
    weight: int = Field(..., description="Peso λ da forma")
    num: List[Union[int, str]] = Field(..., description="Coeficientes do numerador em ordem crescente")
    den: List[Union[int, str]] = Field(default_factory=lambda: ["1"], description="Coeficientes do denominador em ordem crescente")


class FinDimLieFile(BaseModel):
    """Input schema para uma álgebra de Lie de dimensão finita."""
    dim: int = Field(..., ge=1, description="Dimensão da álgebra")
    labels: Optional[List[str]] = Field(default=None, description="Rótulos da base")
    brackets: List[List[Union[int, str]]] = Field(default_factory=list, description="Entradas [i, j, k, \"c\"] com [x_i, x_j] ∋ c·x_k")
    form: List[List[Union[int, str]]] = Field(..., description="Matriz da forma bilinear B_ij")

    @field_validator('brackets')
    @classmethod
    def _check_brackets(cls, value: List[List[Union[int, str]]]) -> List[List[Union[int, str]]]:
        for entry in value:
            if len(entry) != 4:
                raise ValueError(f"Entrada de colchete deve ter 4 campos: {entry}")
        return value


class CoboundaryFile(BaseModel):
    """Input schema para dados de cobordo V (1-formas) ou W (diferenciais quadráticos)."""
    kind: Literal["V", "W"] = Field(..., description="V para E_V, W para D_W")
    terms: List[List[Union[int, str]]] = Field(default_factory=list, description="Termos [n, r, \"c\"]")

    @field_validator('terms')
    @classmethod
    def _check_terms(cls, value: List[List[Union[int, str]]]) -> List[List[Union[int, str]]]:
        for entry in value:
            if len(entry) != 3:
                raise ValueError(f"Termo de cobordo deve ter 3 campos: {entry}")
        return value
