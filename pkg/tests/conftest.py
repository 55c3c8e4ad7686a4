"""
Fixtures compartilhadas: configurações de pontos marcados usadas nos testes.
"""

import pytest

from src.forms import MarkedConfig


@pytest.fixture
def classical():
    """I = (0), O = (∞): Witt/Virasoro."""
    return MarkedConfig.classical()


@pytest.fixture
def two_in():
    """I = (0, 1), O = (∞)."""
    return MarkedConfig.build(["0", "1"], ["inf"])


@pytest.fixture
def two_two():
    """I = (0, 1), O = (−1, ∞)."""
    return MarkedConfig.build(["0", "1"], ["-1", "inf"])


@pytest.fixture
def three_in():
    """I = (0, 1, −1), O = (∞)."""
    return MarkedConfig.build(["0", "1", "-1"], ["inf"])


@pytest.fixture(params=["classical", "two_in", "two_two", "three_in"])
def any_config(request):
    """Todas as configurações de referência."""
    return request.getfixturevalue(request.param)


@pytest.fixture
def write_json(tmp_path):
    """Grava um dicionário como JSON e devolve o caminho."""
    import json

    def _write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return _write
