# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import math

from dataclasses import (
    dataclass
)
from functools import (
    lru_cache
)

import numpy as np

from gaussian.metric import (
    NoiseRatio
)

@dataclass(frozen=True, eq=False)
class GdfeFilters:
    """
    MMSE-GDFE forward and backward filters.

    They satisfy B^T B = (1 + beta^2) I and F^T B = I, so that
    ||y - lambda||^2 + beta^2 ||lambda||^2 = ||F y - B lambda||^2 + y^T (I - F^T F) y.
    """
    forward: np.ndarray
    backward: np.ndarray
    beta: NoiseRatio

    @property
    def dimension(self) -> int:
        return self.forward.shape[0]

@lru_cache(maxsize=256)
def mmse_gdfe_filters(beta: NoiseRatio, n: int) -> GdfeFilters:
    """Canonical filters B = sqrt(1 + beta^2) I and F = B / (1 + beta^2)."""
    scale = math.sqrt(1.0 + beta.value ** 2)
    backward = scale * np.eye(n)
    forward = backward / (1.0 + beta.value ** 2)
    backward.setflags(write=False)
    forward.setflags(write=False)
    return GdfeFilters(forward, backward, beta)

def gdfe_residual(y: np.ndarray, filters: GdfeFilters) -> float:
    """Gamma(y) = y^T (I - F^T F) y, the part of the MAP metric independent of lambda."""
    received = np.asarray(y, dtype=float)
    gain = np.eye(filters.dimension) - filters.forward.T @ filters.forward
    return float(received @ gain @ received)

def gdfe_effective_noise(filters: GdfeFilters, model_variance: float, noise_variance: float,
                         rng: np.random.Generator, samples: int = 10_000) -> tuple[float, float]:
    """
    Monte Carlo estimate of the per-dimension effective noise (F - B) lambda + F z.

    lambda is drawn from the Gaussian model N(0, sigma_s^2 I) and z from N(0, sigma^2 I);
    the minimum mean value is sigma_s^2 beta^2.

    Returns
    -------
    tuple[float, float]
        Sample mean and its standard error.
    """
    n = filters.dimension
    lam = rng.normal(0.0, math.sqrt(model_variance), size=(samples, n))
    noise = rng.normal(0.0, math.sqrt(noise_variance), size=(samples, n))
    effective = lam @ (filters.forward - filters.backward).T + noise @ filters.forward.T
    energy = np.sum(effective ** 2, axis=1) / n
    return float(energy.mean()), float(energy.std(ddof=1) / math.sqrt(samples))
