# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from scipy import (
    stats
)

def wilson_interval(errors: int, trials: int, confidence: float = 0.95) -> tuple[float, float]:
    """
    Wilson score interval (no continuity correction) of a binomial proportion.

    Parameters
    ----------
    errors: int
        Number of observed error events.
    trials: int
        Number of trials, at least 1.
    confidence: float
        Confidence level of the interval.

    Returns
    -------
    tuple[float, float]
        Lower and upper interval bounds.
    """
    interval = stats.binomtest(errors, trials).proportion_ci(
        confidence_level=confidence, method="wilson"
    )
    return float(interval.low), float(interval.high)

def wilson_half_width(errors: int, trials: int, confidence: float = 0.95) -> float:
    low, high = wilson_interval(errors, trials, confidence)
    return (high - low) / 2.0
