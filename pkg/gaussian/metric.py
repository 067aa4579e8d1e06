# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import math

from dataclasses import (
    dataclass
)

import numpy as np

from gaussian.sum_codebook import (
    SumCodebook
)
from lattices.enumeration import (
    TIE_SLACK
)
from lattices.lattice import (
    DecodeOutcome
)
from utils.exceptions import (
    InvalidParameter,
    ShapeMismatch,
)

@dataclass(frozen=True)
class NoiseRatio:
    """beta = sigma / sigma_s; zero is accepted as the noiseless limit."""
    value: float

    def __post_init__(self):
        if not (math.isfinite(self.value) and self.value >= 0):
            raise InvalidParameter(f"noise ratio must be finite and nonnegative, got {self.value}")
        object.__setattr__(self, "value", float(self.value))

    @classmethod
    def from_variances(cls, noise_variance: float, model_variance: float) -> "NoiseRatio":
        return cls(math.sqrt(noise_variance / model_variance))

def map_metric(point: np.ndarray, y: np.ndarray, beta: NoiseRatio) -> float:
    """||y - lambda||^2 + beta^2 ||lambda||^2."""
    lam = np.asarray(point, dtype=float)
    received = np.asarray(y, dtype=float)
    if lam.shape != received.shape:
        raise ShapeMismatch(f"point {lam.shape} and observation {received.shape} differ")
    return float(np.sum((received - lam) ** 2) + beta.value ** 2 * np.sum(lam ** 2))

def argmin_support(scores: np.ndarray) -> int:
    """Index of the smallest score; the lexicographically smallest coefficients win ties."""
    best = float(np.min(scores))
    return int(np.flatnonzero(scores <= best + TIE_SLACK * max(1.0, abs(best)))[0])

def map_metric_scan(y: np.ndarray, sum_codebook: SumCodebook, beta: NoiseRatio) -> DecodeOutcome:
    """Minimize the MAP metric by scanning the whole sum-codebook support."""
    received = np.asarray(y, dtype=float)
    points = sum_codebook.points
    scores = np.sum((received - points) ** 2, axis=1) + beta.value ** 2 * np.sum(points ** 2, axis=1)
    index = argmin_support(scores)
    return DecodeOutcome(points[index], sum_codebook.coeffs[index], float(scores[index]), sum_codebook.size)
