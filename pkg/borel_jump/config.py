"""Centralized configuration management for Borel Jump."""

# Load .env before the Config class reads os.getenv()
from pathlib import Path
from dotenv import load_dotenv
import os

ENV_PATH = Path(__file__).resolve().parent / ".env"
if ENV_PATH.exists():
    load_dotenv(dotenv_path=ENV_PATH, override=False, encoding="utf-8")
# A .env in the working directory also counts; explicit environment wins
load_dotenv(override=False)

from typing import List

from .errors import ConfigError

OUTPUT_FORMATS = ("text", "json")
CONVENTIONS = ("paper", "meets-r")


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw.strip())
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on")


class Config:
    """Borel Jump configuration.

    Reads environment variables at instance creation time so that .env is loaded first.
    """

    def __init__(self):
        # =========================
        # Guards
        # =========================
        self._MAX_STATES = _env_int("BOREL_MAX_STATES", 20)
        self._LAR_MAX_VERTICES = _env_int("BOREL_LAR_MAX_VERTICES", 8)

        # =========================
        # Reproducibility
        # =========================
        self._SEED = _env_int("BOREL_SEED", 0)
        self._SELFTEST_SAMPLES = _env_int("BOREL_SELFTEST_SAMPLES", 1)

        # =========================
        # Output
        # =========================
        self._OUTPUT_FORMAT = os.getenv("BOREL_OUTPUT_FORMAT", "text").strip().lower()
        self._CONVENTION = os.getenv("BOREL_CONVENTION", "paper").strip().lower()

        # =========================
        # Logging
        # =========================
        self._LOG_LEVEL = os.getenv("BOREL_LOG_LEVEL", "WARNING").upper()
        self._JSON_LOGGING = _env_bool("BOREL_JSON_LOGGING", False)

        # =========================
        # Monitoring
        # =========================
        self._METRICS_ENABLED = _env_bool("BOREL_METRICS_ENABLED", True)

    # ===== Properties =====
    @property
    def MAX_STATES(self) -> int:
        return self._MAX_STATES

    @property
    def LAR_MAX_VERTICES(self) -> int:
        return self._LAR_MAX_VERTICES

    @property
    def SEED(self) -> int:
        return self._SEED

    @property
    def SELFTEST_SAMPLES(self) -> int:
        return self._SELFTEST_SAMPLES

    @property
    def OUTPUT_FORMAT(self) -> str:
        return self._OUTPUT_FORMAT

    @property
    def CONVENTION(self) -> str:
        return self._CONVENTION

    @property
    def LOG_LEVEL(self) -> str:
        return self._LOG_LEVEL

    @property
    def JSON_LOGGING(self) -> bool:
        return self._JSON_LOGGING

    @property
    def METRICS_ENABLED(self) -> bool:
        return self._METRICS_ENABLED

    @classmethod
    def validate(cls) -> List[str]:
        warnings = []
        instance = cls()

        if instance.MAX_STATES < 1:
            warnings.append(f"BOREL_MAX_STATES={instance.MAX_STATES} is below 1; every loop enumeration will fail")

        if instance.LAR_MAX_VERTICES < 1:
            warnings.append(f"BOREL_LAR_MAX_VERTICES={instance.LAR_MAX_VERTICES} is below 1; Muller games cannot be solved")

        if instance.OUTPUT_FORMAT not in OUTPUT_FORMATS:
            warnings.append(
                f"BOREL_OUTPUT_FORMAT={instance.OUTPUT_FORMAT!r} is unknown; use one of {', '.join(OUTPUT_FORMATS)}"
            )

        if instance.CONVENTION not in CONVENTIONS:
            warnings.append(
                f"BOREL_CONVENTION={instance.CONVENTION!r} is unknown; use one of {', '.join(CONVENTIONS)}"
            )

        if instance.SELFTEST_SAMPLES < 1:
            warnings.append("BOREL_SELFTEST_SAMPLES below 1 disables the random self-test suites")

        return warnings


# Global config instance (created AFTER .env is loaded)
config = Config()
