"""
Centralized debugging and logging utility.

This module provides pre-configured logger instances for the two sides of
the package:

- `debug`: the package logger (`ornalat`). Library modules import it as
  `from ..utils.debug import debug as logger`.
- `debug_cli`: the logger for the command-line front end.
- `summarize_for_logging`: bounded rendering of long values.

The log level is controlled by the `DEBUG_MODE` environment variable.
Set `DEBUG_MODE=true` for detailed `DEBUG` level output.
Defaults to `WARNING` so library calls stay quiet.
"""

from .logging_config import get_logger, summarize_for_logging

# Library side: enumeration, searches, verifications
debug = get_logger("ornalat")

# Command-line side
debug_cli = get_logger("ornalat.cli")

__all__ = ["debug", "debug_cli", "summarize_for_logging"]
