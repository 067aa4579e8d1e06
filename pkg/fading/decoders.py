# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import math

import numpy as np

from diophantine.euclid import (
    PairSolutionFamily
)
from fading.approximation import (
    select_combination
)
from fading.geometry import (
    candidate_set,
    LikelihoodGeometry,
    log_likelihood,
    ScaledObservation,
)
from lattices.codes import (
    codebook_cap
)
from selection.channel import (
    NetworkCodeVector
)
from utils.exceptions import (
    DegenerateGeometry,
    TooLarge,
)

def conventional_decode_1d(obs: ScaledObservation, a: NetworkCodeVector, bound: int) -> int:
    """Round the scaled output to the nearest integer, clamped to the candidate set."""
    box = candidate_set(a, bound)
    return min(max(math.floor(obs.y + 0.5), box.lower[0]), box.upper[0])

def ml_log_scores(obs: ScaledObservation, a: NetworkCodeVector, bound: int,
                  cap: int | None = None) -> dict[int, float]:
    """
    log phi(t) for every reachable t, summed directly over the pairs (x1, x2) of the
    constellation with a1 x1 + a2 x2 = t.
    """
    cap = codebook_cap() if cap is None else cap
    side = 2 * bound + 1
    if side * side > cap:
        raise TooLarge(f"{side * side} constellation pairs exceed cap {cap}")
    if obs.noise_variance <= 0:
        raise DegenerateGeometry("ML decoding needs a positive scaled noise variance")

    grid = np.arange(-bound, bound + 1)
    x1, x2 = (axis.ravel() for axis in np.meshgrid(grid, grid, indexing="ij"))
    combos = a[0] * x1 + a[1] * x2
    residuals = obs.y - obs.h[0] * x1 - obs.h[1] * x2
    log_terms = -residuals ** 2 / (2.0 * obs.noise_variance)

    offset = combos.min()
    peak = log_terms.max()
    sums = np.bincount(combos - offset, weights=np.exp(log_terms - peak))
    present = np.unique(combos - offset)
    with np.errstate(divide="ignore"):
        logs = peak + np.log(sums[present])
    return {int(index + offset): float(value) for index, value in zip(present, logs)}

def exhaustive_ml_decode(obs: ScaledObservation, a: NetworkCodeVector, bound: int,
                         cap: int | None = None) -> int:
    """Exact ML estimate of t; ties go to smaller |t|, then smaller t."""
    scores = ml_log_scores(obs, a, bound, cap)
    return select_combination({t: -value for t, value in scores.items()})

def likelihood_decode(obs: ScaledObservation, geom: LikelihoodGeometry, family: PairSolutionFamily) -> int:
    """Argmax of the family-parameterized likelihood over the candidate set."""
    scores = {}
    for t in range(geom.candidates.lower[0], geom.candidates.upper[0] + 1):
        if t % family.g:
            continue
        value = log_likelihood(t, geom, obs, family, geom.constellation)
        if value > -math.inf:
            scores[t] = -value
    return select_combination(scores)
