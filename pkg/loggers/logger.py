# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import logging
import os
import sys

from pythonjsonlogger import (
    json
)

LOG_LEVEL_ENV = "CF_LATTICE_LOG_LEVEL"

_created: list[logging.Logger] = []

def _resolve_level() -> int:
    level = logging.getLevelName(os.environ.get(LOG_LEVEL_ENV, "INFO").upper())
    return level if isinstance(level, int) else logging.INFO

def get_logger(filename: str) -> logging.Logger:
    """
    Create and return a structured JSON logger.

    Parameters
    ----------
    filename: str
        Name of the module requesting the logger.

    Returns
    -------
    logging.Logger
        Configured logger instance writing JSON lines to stderr.
    """
    _logger = logging.getLogger(filename)
    _logger.setLevel(_resolve_level())

    if not _logger.handlers:
        # stdout may carry CSV output
        stream_handler = logging.StreamHandler(sys.stderr)

        log_format = "%(asctime)s %(name)s %(levelname)s %(message)s"
        formatter = json.JsonFormatter(log_format)

        stream_handler.setFormatter(formatter)
        _logger.addHandler(stream_handler)
        _logger.propagate = False
        _created.append(_logger)

    return _logger

def refresh_log_level() -> None:
    """Re-apply the environment log level to every logger created so far."""
    level = _resolve_level()
    for _logger in _created:
        _logger.setLevel(level)
