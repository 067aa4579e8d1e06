# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from .logger import (
    get_logger,
    refresh_log_level,
)

__all__ = [
    'get_logger',
    'refresh_log_level',
]
