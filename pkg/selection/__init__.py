# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from .channel import (
    ChannelRealization,
    db_to_linear,
    NetworkCodeVector,
)
from .rates import (
    best_rate,
    coefficient_gram,
    computation_rate,
    optimal_alpha,
    optimal_coefficients,
)

__all__ = [
    # channel.py
    'ChannelRealization',
    'db_to_linear',
    'NetworkCodeVector',

    # rates.py
    'best_rate',
    'coefficient_gram',
    'computation_rate',
    'optimal_alpha',
    'optimal_coefficients',
]
