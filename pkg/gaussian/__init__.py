# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from .sum_codebook import (
    build_sum_codebook,
    SumCodebook,
)
from .metric import (
    argmin_support,
    map_metric,
    map_metric_scan,
    NoiseRatio,
)
from .filters import (
    gdfe_effective_noise,
    gdfe_residual,
    GdfeFilters,
    mmse_gdfe_filters,
)
from .decoders import (
    conventional_decode,
    exhaustive_map_decode,
    map_decode_augmented,
    map_decode_gdfe,
)
from .bounds import (
    pairwise_error_prob,
    simulate_pairwise_error,
    union_bound,
)

__all__ = [
    # sum_codebook.py
    'build_sum_codebook',
    'SumCodebook',

    # metric.py
    'argmin_support',
    'map_metric',
    'map_metric_scan',
    'NoiseRatio',

    # filters.py
    'gdfe_effective_noise',
    'gdfe_residual',
    'GdfeFilters',
    'mmse_gdfe_filters',

    # decoders.py
    'conventional_decode',
    'exhaustive_map_decode',
    'map_decode_augmented',
    'map_decode_gdfe',

    # bounds.py
    'pairwise_error_prob',
    'simulate_pairwise_error',
    'union_bound',
]
