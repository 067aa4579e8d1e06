# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from .processor import (
    sweep,
    SweepProcessor,
    THREADS_ENV,
    worker_count,
)

__all__ = [
    # processor.py
    'sweep',
    'SweepProcessor',
    'THREADS_ENV',
    'worker_count',
]
