# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from .geometry import (
    candidate_set,
    GAMMA_EPS,
    ida_objective,
    likelihood,
    likelihood_profile,
    LikelihoodGeometry,
    log_likelihood,
    near_ties,
    ScaledObservation,
)
from .approximation import (
    admissible_intervals,
    convergents,
    diophantine_candidate,
    ida_decode,
    ida_exhaustive,
    select_combination,
    tie_bound,
)
from .decoders import (
    conventional_decode_1d,
    exhaustive_ml_decode,
    likelihood_decode,
    ml_log_scores,
)

__all__ = [
    # geometry.py
    'candidate_set',
    'GAMMA_EPS',
    'ida_objective',
    'likelihood',
    'likelihood_profile',
    'LikelihoodGeometry',
    'log_likelihood',
    'near_ties',
    'ScaledObservation',

    # approximation.py
    'admissible_intervals',
    'convergents',
    'diophantine_candidate',
    'ida_decode',
    'ida_exhaustive',
    'select_combination',
    'tie_bound',

    # decoders.py
    'conventional_decode_1d',
    'exhaustive_ml_decode',
    'likelihood_decode',
    'ml_log_scores',
]
