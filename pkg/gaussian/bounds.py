# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import math

import numpy as np

from scipy.special import (
    erfc
)
from scipy.stats import (
    norm
)

from gaussian.sum_codebook import (
    SumCodebook
)
from utils.exceptions import (
    DegenerateGeometry,
    ZeroProbability,
)

def _pair_priors(lam: np.ndarray, lam_hat: np.ndarray, sum_codebook: SumCodebook) -> tuple[float, float, float]:
    prior, prior_hat = sum_codebook.probability(lam), sum_codebook.probability(lam_hat)
    if prior <= 0 or prior_hat <= 0:
        raise ZeroProbability("both sum codewords must have positive probability")
    distance = float(np.linalg.norm(np.asarray(lam, dtype=float) - np.asarray(lam_hat, dtype=float)))
    if distance == 0:
        raise DegenerateGeometry("pairwise error needs two distinct points")
    return prior, prior_hat, distance

def pairwise_error_prob(lam: np.ndarray, lam_hat: np.ndarray, sigma: float, sum_codebook: SumCodebook) -> float:
    """
    Probability that the MAP rule prefers ``lam_hat`` when ``lam`` was sent.

    Q(d / (2 sigma) + (sigma / d) ln(p(lam) / p(lam_hat))) with d = ||lam - lam_hat||.
    """
    prior, prior_hat, distance = _pair_priors(lam, lam_hat, sum_codebook)
    return float(norm.sf(distance / (2.0 * sigma) + sigma / distance * math.log(prior / prior_hat)))

def simulate_pairwise_error(lam: np.ndarray, lam_hat: np.ndarray, sigma: float, sum_codebook: SumCodebook,
                            rng: np.random.Generator, samples: int = 1_000_000) -> tuple[float, float]:
    """
    Monte Carlo frequency of the pairwise MAP error event, with its standard error.

    The event is -ln p(lam_hat) + ||y - lam_hat||^2 / (2 sigma^2) < -ln p(lam) + ||y - lam||^2 / (2 sigma^2)
    for y = lam + z.
    """
    prior, prior_hat, _ = _pair_priors(lam, lam_hat, sum_codebook)
    sent = np.asarray(lam, dtype=float)
    rival = np.asarray(lam_hat, dtype=float)
    received = sent + rng.normal(0.0, sigma, size=(samples, sent.shape[0]))
    score_sent = -math.log(prior) + np.sum((received - sent) ** 2, axis=1) / (2.0 * sigma ** 2)
    score_rival = -math.log(prior_hat) + np.sum((received - rival) ** 2, axis=1) / (2.0 * sigma ** 2)
    frequency = float(np.mean(score_rival < score_sent))
    return frequency, math.sqrt(max(frequency * (1.0 - frequency), 1.0 / samples) / samples)

def union_bound(sum_codebook: SumCodebook, d_min: float, sigma: float) -> float:
    """
    Union bound estimate of the MAP error probability.

    1/2 sum_i sum_{j != i} p_i erfc(sqrt(A) + B_ij / sqrt(A)) with A = d_min^2 / (8 sigma^2)
    and B_ij = ln(p_i / p_j) / 4. Every pair is charged the minimum distance.
    """
    pmf = sum_codebook.pmf
    root = math.sqrt(d_min ** 2 / (8.0 * sigma ** 2))
    log_ratio = 0.25 * np.log(pmf[:, None] / pmf[None, :])
    terms = pmf[:, None] * erfc(root + log_ratio / root)
    np.fill_diagonal(terms, 0.0)
    return float(0.5 * terms.sum())
