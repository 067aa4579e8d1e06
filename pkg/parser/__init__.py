# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from .config_format import (
    build_code,
    ChannelSweepConfig,
    CodeConfig,
    CodeSweepConfig,
    FADING_DECODERS,
    FADING_SCENARIO,
    GAUSSIAN_DECODERS,
    GAUSSIAN_SCENARIO,
    PROFILE_PRESETS,
    ProfileConfig,
    read_config_document,
    SimConfig,
)
from .csv_format import (
    BOUND_HEADER,
    COEFFS_HEADER,
    curve_rows,
    CURVE_HEADER,
    format_value,
    HISTOGRAM_HEADER,
    PROFILE_HEADER,
    RATE_HEADER,
    write_table,
)

__all__ = [
    # config_format.py
    'build_code',
    'ChannelSweepConfig',
    'CodeConfig',
    'CodeSweepConfig',
    'FADING_DECODERS',
    'FADING_SCENARIO',
    'GAUSSIAN_DECODERS',
    'GAUSSIAN_SCENARIO',
    'PROFILE_PRESETS',
    'ProfileConfig',
    'read_config_document',
    'SimConfig',

    # csv_format.py
    'BOUND_HEADER',
    'COEFFS_HEADER',
    'curve_rows',
    'CURVE_HEADER',
    'format_value',
    'HISTOGRAM_HEADER',
    'PROFILE_HEADER',
    'RATE_HEADER',
    'write_table',
]
