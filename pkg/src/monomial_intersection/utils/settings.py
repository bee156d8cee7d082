# settings.py
# ============================================================================
#  Laufzeit-Konfiguration: Defaults < Umgebung/.env < CLI-Flags
# ============================================================================
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from typing import Final

from dotenv import load_dotenv
from sympy import isprime

from .errors import PreconditionError

log = logging.getLogger(__name__)

ENV_PREFIX: Final[str] = "MONOIDEAL_"

# --------------------------------------------------------------------------- #
# Defaults
# --------------------------------------------------------------------------- #
DEFAULT_MAX_N: Final[int] = 24
DEFAULT_MAX_GENERATORS: Final[int] = 64
DEFAULT_TAYLOR_MAX_GENERATORS: Final[int] = 14
DEFAULT_JOBS: Final[int] = 1
DEFAULT_CHARACTERISTIC: Final[int] = 0


@dataclass(frozen=True)
class Settings:
    max_n: int = DEFAULT_MAX_N
    max_generators: int = DEFAULT_MAX_GENERATORS
    taylor_max_generators: int = DEFAULT_TAYLOR_MAX_GENERATORS
    force_large: bool = False
    jobs: int = DEFAULT_JOBS
    characteristic: int = DEFAULT_CHARACTERISTIC
    progress: bool = False

    @property
    def field_name(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(ENV_PREFIX + name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        log.warning("%s%s=%r ist keine Zahl – nutze %d", ENV_PREFIX, name, raw, default)
        return default


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(ENV_PREFIX + name)
    if raw is None:
        return default
    return raw.strip().lower() in {"1", "true", "yes", "on", "ja"}


def load_settings() -> Settings:
    """liest .env (falls vorhanden) und die MONOIDEAL_*-Variablen"""
    load_dotenv()
    return Settings(
        max_n=_env_int("MAX_N", DEFAULT_MAX_N),
        max_generators=_env_int("MAX_GENERATORS", DEFAULT_MAX_GENERATORS),
        taylor_max_generators=_env_int(
            "TAYLOR_MAX_GENERATORS", DEFAULT_TAYLOR_MAX_GENERATORS
        ),
        force_large=_env_bool("FORCE_LARGE", False),
        jobs=max(1, _env_int("JOBS", DEFAULT_JOBS)),
        characteristic=_env_int("CHARACTERISTIC", DEFAULT_CHARACTERISTIC),
        progress=_env_bool("PROGRESS", False),
    )


_current: Settings | None = None


def get_settings() -> Settings:
    global _current
    if _current is None:
        _current = load_settings()
    return _current


def configure(**overrides) -> Settings:
    """ersetzt einzelne Werte (CLI-Flags, Tests); None-Werte werden ignoriert"""
    global _current
    clean = {k: v for k, v in overrides.items() if v is not None}
    new = replace(get_settings(), **clean)
    if new.characteristic != 0 and not isprime(new.characteristic):
        raise PreconditionError(f"ungültige Charakteristik {new.characteristic}")
    _current = new
    log.debug("Settings: %s", _current)
    return _current


def reset_settings() -> None:
    global _current
    _current = None
