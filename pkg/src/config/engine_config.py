"""
Configuração do motor de cálculo: paralelismo, janelas padrão e amostragem.
Valores lidos de variáveis de ambiente KNC_* (arquivo .env opcional).
"""

import os
from typing import Optional, Dict, Any
from dataclasses import dataclass
from enum import Enum
import logging
from pathlib import Path

logger = logging.getLogger(__name__)

# Carrega o arquivo .env se disponível
try:
    from dotenv import load_dotenv
    project_root = Path(__file__).parent.parent.parent
    env_path = project_root / '.env'
    if env_path.exists():
        load_dotenv(env_path)
        logger.debug(f"Arquivo .env carregado: {env_path}")
    elif Path('.env').exists():
        load_dotenv()
        logger.debug("Arquivo .env carregado do diretório atual")
except ImportError:
    logger.warning("python-dotenv não instalado. Configure as variáveis de ambiente manualmente.")


class OutputFormat(Enum):
    """Formatos de relatório suportados"""
    JSON = "json"
    CSV = "csv"
    MD = "md"

    @classmethod
    def from_string(cls, value: str) -> 'OutputFormat':
        """Converte string para enum OutputFormat"""
        if isinstance(value, cls):
            return value
        for fmt in cls:
            if fmt.value == value.lower():
                return fmt
        raise ValueError(f"Formato '{value}' não é suportado. Formatos disponíveis: {', '.join([f.value for f in cls])}")


@dataclass
class EngineConfig:
    """Configuração do motor exato"""
    threads: int = 1
    window: int = 8
    glinf_window: int = 24
    samples: int = 200
    seed: int = 20240101


class EngineConfigManager:
    """Gerenciador da configuração do motor"""

    MAX_DEFAULT_THREADS = 8

    def __init__(self):
        self.config = self._load_config()

    def _load_config(self) -> EngineConfig:
        """Carrega a configuração a partir das variáveis de ambiente"""
        default_threads = min(os.cpu_count() or 1, self.MAX_DEFAULT_THREADS)
        config = EngineConfig(
            threads=self._int_env('KNC_THREADS', default_threads),
            window=self._int_env('KNC_WINDOW', 8),
            glinf_window=self._int_env('KNC_GLINF_WINDOW', 24),
            samples=self._int_env('KNC_SAMPLES', 200),
            seed=self._int_env('KNC_SEED', 20240101),
        )
        logger.info(f"Motor configurado: threads={config.threads}, janela={config.window}")
        return config

    @staticmethod
    def _int_env(name: str, default: int) -> int:
        raw = os.getenv(name)
        if raw is None or raw.strip() == '':
            return default
        try:
            return int(raw)
        except ValueError:
            logger.warning(f"{name}='{raw}' não é inteiro. Usando {default}.")
            return default

    def get_threads(self) -> int:
        """Número de workers para preenchimentos paralelos (mínimo 1)"""
        return max(1, self.config.threads)

    def validate(self) -> Dict[str, Any]:
        """Valida a configuração do motor"""
        validation = {
            'valid': True,
            'errors': [],
            'warnings': []
        }

        if self.config.threads < 1:
            validation['valid'] = False
            validation['errors'].append(f"KNC_THREADS deve ser >= 1 (recebido {self.config.threads})")

        if self.config.window < 2:
            validation['warnings'].append("KNC_WINDOW < 2: as fórmulas de nível zero usam graus até 2")

        if self.config.samples < 1:
            validation['valid'] = False
            validation['errors'].append("KNC_SAMPLES deve ser positivo")

        if self.config.glinf_window < 1:
            validation['valid'] = False
            validation['errors'].append("KNC_GLINF_WINDOW deve ser positivo")

        return validation

    def summary(self, overrides: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        data = {
            'threads': self.config.threads,
            'window': self.config.window,
            'glinf_window': self.config.glinf_window,
            'samples': self.config.samples,
            'seed': self.config.seed,
        }
        data.update(overrides or {})
        return data
