"""
Registros de verificação produzidos pelas operações de checagem.

As checagens nunca levantam exceção por uma identidade falha: cada amostra
vira um `CheckRecord` e o conjunto forma um `CheckReport`.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

from .rat import format_rat

PASS = "pass"
FAIL = "fail"
ERROR = "error"


def _stringify(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rat(value)
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _stringify(v) for k, v in value.items()}
    return str(value)


@dataclass
class CheckRecord:
    """Resultado de uma verificação individual; testemunhas como strings racionais."""

    id: str
    status: str
    witness: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def build(cls, check_id: str, passed: bool, **witness) -> 'CheckRecord':
        return cls(check_id, PASS if passed else FAIL,
                   {k: _stringify(v) for k, v in witness.items()})

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> Dict[str, Any]:
        return {"id": self.id, "status": self.status, "witness": self.witness}


@dataclass
class CheckReport:
    """Coleção de registros com o nome da verificação."""

    name: str
    records: List[CheckRecord] = field(default_factory=list)

    def add(self, record: CheckRecord) -> None:
        self.records.append(record)

    def extend(self, other: 'CheckReport') -> None:
        self.records.extend(other.records)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> List[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "records": [r.to_dict() for r in self.records],
        }
