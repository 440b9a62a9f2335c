"""Runtime settings read from the environment."""

import os
from dataclasses import dataclass

from .debug import debug as logger

DEFAULT_CAP = 100_000
DEFAULT_THREADS = 1


def _read_positive_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring {name}={raw!r}: not an integer, using {default}")
        return default
    if value <= 0:
        logger.warning(f"Ignoring {name}={raw!r}: must be positive, using {default}")
        return default
    return value


@dataclass(frozen=True)
class Settings:
    """
    Enumeration and logging settings.

    Attributes:
        cap: Maximum number of ornamentations an enumeration may produce.
        threads: Worker processes used for enumeration and searches.
        debug_mode: Whether DEBUG logging was requested.
    """

    cap: int = DEFAULT_CAP
    threads: int = DEFAULT_THREADS
    debug_mode: bool = False

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from ORNALAT_CAP, ORNALAT_THREADS and DEBUG_MODE."""
        return cls(
            cap=_read_positive_int("ORNALAT_CAP", DEFAULT_CAP),
            threads=_read_positive_int("ORNALAT_THREADS", DEFAULT_THREADS),
            debug_mode=os.environ.get("DEBUG_MODE", "false").lower() == "true",
        )


def default_cap() -> int:
    """Enumeration cap, honouring ORNALAT_CAP."""
    return Settings.from_env().cap


def default_threads() -> int:
    """Worker count, honouring ORNALAT_THREADS."""
    return Settings.from_env().threads
