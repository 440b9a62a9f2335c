"""
Utilities shared by the ornamentation-lattice modules.

This module provides logging setup and runtime configuration.

Classes:
    Settings: Enumeration cap, worker count and debug flag from the environment
"""

from .config import Settings, default_cap, default_threads
from .debug import debug, debug_cli, summarize_for_logging
from .logging_config import get_logger

__all__ = [
    "Settings",
    "debug",
    "debug_cli",
    "default_cap",
    "default_threads",
    "get_logger",
    "summarize_for_logging",
]
