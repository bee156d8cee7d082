# tests/conftest.py
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from monomial_intersection.utils.settings import reset_settings  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: Abnahme-Suiten in voller Größe (J³, Graphen-Korpus)")


@pytest.fixture(autouse=True)
def _fresh_settings(monkeypatch):
    for key in ("MAX_N", "MAX_GENERATORS", "TAYLOR_MAX_GENERATORS", "FORCE_LARGE",
                "JOBS", "CHARACTERISTIC", "PROGRESS"):
        monkeypatch.delenv("MONOIDEAL_" + key, raising=False)
    reset_settings()
    yield
    reset_settings()
