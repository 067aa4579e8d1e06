# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from functools import (
    lru_cache
)

import numpy as np

from gaussian.filters import (
    GdfeFilters
)
from gaussian.metric import (
    argmin_support,
    NoiseRatio,
)
from gaussian.sum_codebook import (
    SumCodebook
)
from lattices.codes import (
    codebook_cap,
    NestedLatticeCode,
)
from lattices.enumeration import (
    closest_point
)
from lattices.lattice import (
    DecodeOutcome,
    Lattice,
)
from selection.channel import (
    ChannelRealization,
    NetworkCodeVector,
)
from selection.rates import (
    optimal_alpha
)
from utils.exceptions import (
    TooLarge
)

@lru_cache(maxsize=256)
def _augmented_lattice(code: NestedLatticeCode, beta: NoiseRatio) -> Lattice:
    generator = code.fine.generator
    return Lattice(np.vstack([generator, beta.value * generator]))

@lru_cache(maxsize=256)
def _filtered_lattice(code: NestedLatticeCode, filters: GdfeFilters) -> Lattice:
    return Lattice(filters.backward @ code.fine.generator)

def _constrained(lattice: Lattice, target: np.ndarray, code: NestedLatticeCode,
                 sum_codebook: SumCodebook) -> DecodeOutcome:
    outcome = closest_point(lattice, target, constraint=sum_codebook.box, support=sum_codebook.admissible)
    return DecodeOutcome(code.fine.point(outcome.coeffs), outcome.coeffs, outcome.metric, outcome.nodes)

def map_decode_augmented(y: np.ndarray, code: NestedLatticeCode, sum_codebook: SumCodebook,
                         beta: NoiseRatio) -> DecodeOutcome:
    """
    MAP decision as a constrained closest-vector search.

    The lattice generated by [M; beta M] and the target [y; 0] turn
    ||y - M u||^2 + beta^2 ||M u||^2 into a squared distance, minimized over the exact
    sum-codebook support.
    """
    received = np.asarray(y, dtype=float)
    target = np.concatenate([received, np.zeros(received.shape[0])])
    return _constrained(_augmented_lattice(code, beta), target, code, sum_codebook)

def map_decode_gdfe(y: np.ndarray, code: NestedLatticeCode, sum_codebook: SumCodebook,
                    filters: GdfeFilters) -> DecodeOutcome:
    """
    MMSE-GDFE preprocessed minimum-distance decision argmin ||F y - B lambda||^2.

    The reported metric excludes Gamma(y); decisions equal :func:`map_decode_augmented`.
    """
    target = filters.forward @ np.asarray(y, dtype=float)
    return _constrained(_filtered_lattice(code, filters), target, code, sum_codebook)

def exhaustive_map_decode(y: np.ndarray, sum_codebook: SumCodebook, noise_variance: float,
                          cap: int | None = None) -> DecodeOutcome:
    """Exact MAP rule -ln p(lambda) + ||y - lambda||^2 / (2 sigma^2) over the true pmf."""
    cap = codebook_cap() if cap is None else cap
    if sum_codebook.size > cap:
        raise TooLarge(f"support of {sum_codebook.size} points exceeds cap {cap}")
    received = np.asarray(y, dtype=float)
    points = sum_codebook.points
    scores = -np.log(sum_codebook.pmf) + np.sum((received - points) ** 2, axis=1) / (2.0 * noise_variance)
    index = argmin_support(scores)
    return DecodeOutcome(points[index], sum_codebook.coeffs[index], float(scores[index]), sum_codebook.size)

def conventional_decode(y: np.ndarray, code: NestedLatticeCode, sum_codebook: SumCodebook,
                        ch: ChannelRealization) -> DecodeOutcome:
    """
    MMSE scaling followed by minimum-distance decoding on the whole fine lattice.

    The scaling uses the sum channel h = a = (1, ..., 1) at the noise level and power of
    ``ch``. Neither the sum-codebook support nor its pmf enters the decision, so the
    estimate of the sum may fall outside the support; its coset modulo the coarse lattice
    is ``code.coset_index(outcome.point)``.
    """
    ones = np.ones(sum_codebook.sources)
    sum_channel = ChannelRealization(ones, ch.noise_variance, ch.power)
    alpha = optimal_alpha(sum_channel, NetworkCodeVector(tuple(int(v) for v in ones)))
    return closest_point(code.fine, alpha * np.asarray(y, dtype=float), reduce=True)
