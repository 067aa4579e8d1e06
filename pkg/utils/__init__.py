# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from .argument_parser import (
    parse_arguments,
    SUBCOMMANDS,
)
from .curves import (
    crossing_snr,
    diversity_order,
    horizontal_gap,
)
from .exceptions import (
    BothZero,
    CFLatticeError,
    ConfigError,
    DegenerateGeometry,
    EmptyCodebook,
    EmptyConstraint,
    InvalidChannel,
    InvalidCodeVector,
    InvalidParameter,
    NoSolution,
    NotInLattice,
    NotIntegral,
    NotNested,
    NotPositiveDefinite,
    PowerExceeded,
    RankDeficient,
    ShapeMismatch,
    TooLarge,
    ZeroProbability,
)
from .statistics import (
    wilson_half_width,
    wilson_interval,
)
from .streams import (
    TrialStream
)

__all__ = [
    # argument_parser.py
    'parse_arguments',
    'SUBCOMMANDS',

    # curves.py
    'crossing_snr',
    'diversity_order',
    'horizontal_gap',

    # exceptions.py
    'BothZero',
    'CFLatticeError',
    'ConfigError',
    'DegenerateGeometry',
    'EmptyCodebook',
    'EmptyConstraint',
    'InvalidChannel',
    'InvalidCodeVector',
    'InvalidParameter',
    'NoSolution',
    'NotInLattice',
    'NotIntegral',
    'NotNested',
    'NotPositiveDefinite',
    'PowerExceeded',
    'RankDeficient',
    'ShapeMismatch',
    'TooLarge',
    'ZeroProbability',

    # statistics.py
    'wilson_half_width',
    'wilson_interval',

    # streams.py
    'TrialStream',
]
