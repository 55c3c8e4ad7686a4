"""
Configuração central do knc: aplicação (nível de log), motor de cálculo
(KNC_*) e esquemas dos arquivos JSON de entrada.
"""

import logging
import os
import sys
from dataclasses import dataclass
from typing import Any, Dict

from .engine_config import EngineConfig, EngineConfigManager, OutputFormat
from .schemas import CoboundaryFile, FinDimLieFile, FormFile, MarkedConfigFile

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_DATEFMT = '%Y-%m-%d %H:%M:%S'
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass
class AppConfig:
    """Configuração geral da aplicação"""
    name: str = "knc"
    version: str = "1.0.0"
    debug: bool = False
    log_level: str = "INFO"


class ConfigManager:
    """Aplicação + motor; o log vai para stderr (stdout é reservado aos relatórios)."""

    def __init__(self):
        self.app_config = self._load_app_config()
        self._setup_logging()
        self.engine_manager = EngineConfigManager()
        logger.debug(f"{self.app_config.name} v{self.app_config.version}: {self.engine_manager.summary()}")

    @staticmethod
    def _load_app_config() -> AppConfig:
        return AppConfig(
            name=os.getenv('APP_NAME', 'knc'),
            version=os.getenv('APP_VERSION', '1.0.0'),
            debug=os.getenv('DEBUG', 'false').lower() == 'true',
            log_level=os.getenv('LOG_LEVEL', 'INFO').upper(),
        )

    def _setup_logging(self):
        level = logging.DEBUG if self.app_config.debug else getattr(logging, self.app_config.log_level, logging.INFO)
        logging.basicConfig(level=level, format=LOG_FORMAT, datefmt=LOG_DATEFMT, stream=sys.stderr)

    @property
    def engine(self) -> EngineConfig:
        return self.engine_manager.config

    def get_configuration_summary(self) -> Dict[str, Any]:
        return {
            'app': {
                'name': self.app_config.name,
                'version': self.app_config.version,
                'debug': self.app_config.debug,
                'log_level': self.app_config.log_level,
            },
            'engine': self.engine_manager.summary(),
        }

    def validate_configuration(self) -> Dict[str, Any]:
        """Validação do motor mais o aviso para LOG_LEVEL desconhecido."""
        validation = self.engine_manager.validate()
        if self.app_config.log_level not in LOG_LEVELS:
            validation['warnings'].append(
                f"LOG_LEVEL '{self.app_config.log_level}' desconhecido. Níveis disponíveis: {', '.join(LOG_LEVELS)}"
            )
        return validation


# Instância global do gerenciador
config_manager = ConfigManager()


# Funções de conveniência para acesso global
def get_engine_config() -> EngineConfig:
    """Obtém a configuração do motor"""
    return config_manager.engine


def get_threads() -> int:
    """Obtém o número de workers"""
    return config_manager.engine_manager.get_threads()


def get_config_summary():
    """Obtém resumo das configurações"""
    return config_manager.get_configuration_summary()


def validate_config():
    """Valida configurações"""
    return config_manager.validate_configuration()


__all__ = [
    "AppConfig",
    "ConfigManager",
    "EngineConfig",
    "EngineConfigManager",
    "OutputFormat",
    "MarkedConfigFile",
    "FormFile",
    "FinDimLieFile",
    "CoboundaryFile",
    "config_manager",
    "get_engine_config",
    "get_threads",
    "get_config_summary",
    "validate_config",
]
