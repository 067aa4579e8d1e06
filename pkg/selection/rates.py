# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import math

import numpy as np

from lattices.enumeration import (
    shortest_vector
)
from selection.channel import (
    ChannelRealization,
    NetworkCodeVector,
)

def computation_rate(ch: ChannelRealization, a: NetworkCodeVector, alpha: float) -> float:
    """
    Achievable rate of decoding sum_i a_i x_i after scaling by ``alpha``.

    R = 1/2 log2+( rho / (alpha^2 + rho ||alpha h - a||^2) ), in bits per real dimension.
    """
    rho = ch.snr
    mismatch = alpha * ch.h - a.as_array()
    denominator = alpha ** 2 + rho * float(mismatch @ mismatch)
    return 0.5 * max(math.log2(rho / denominator), 0.0)

def optimal_alpha(ch: ChannelRealization, a: NetworkCodeVector) -> float:
    """MMSE scaling rho h^T a / (1 + rho ||h||^2)."""
    rho = ch.snr
    return rho * float(ch.h @ a.as_array()) / (1.0 + rho * float(ch.h @ ch.h))

def coefficient_gram(ch: ChannelRealization) -> np.ndarray:
    """G = I - rho / (1 + rho ||h||^2) h h^T, whose shortest vector maximizes the rate."""
    rho = ch.snr
    return np.eye(ch.sources) - rho / (1.0 + rho * float(ch.h @ ch.h)) * np.outer(ch.h, ch.h)

def optimal_coefficients(ch: ChannelRealization) -> NetworkCodeVector:
    coeffs, _ = shortest_vector(coefficient_gram(ch))
    return NetworkCodeVector(coeffs)

def best_rate(ch: ChannelRealization) -> tuple[NetworkCodeVector, float, float]:
    """Optimal code vector, its MMSE scaling and the resulting computation rate."""
    a = optimal_coefficients(ch)
    alpha = optimal_alpha(ch, a)
    return a, alpha, computation_rate(ch, a, alpha)
