# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from .records import (
    ErrorRateCurve,
    ErrorRatePoint,
    TrialRecord,
)
from .fading_processor import (
    FadingTrialProcessor,
    run_fading_trial,
)
from .gaussian_processor import (
    GaussianTrialProcessor,
    run_gaussian_trial,
    shared_sum_codebook,
)

__all__ = [
    # records.py
    'ErrorRateCurve',
    'ErrorRatePoint',
    'TrialRecord',

    # fading_processor.py
    'FadingTrialProcessor',
    'run_fading_trial',

    # gaussian_processor.py
    'GaussianTrialProcessor',
    'run_gaussian_trial',
    'shared_sum_codebook',
]
