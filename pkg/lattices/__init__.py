# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from .lattice import (
    DecodeOutcome,
    EPS_RANK,
    IntegerBox,
    Lattice,
)
from .reduction import (
    lll_reduce
)
from .enumeration import (
    closest_point,
    minimum_distance,
    shortest_vector,
)
from .codes import (
    codebook_cap,
    enumerate_codebook,
    in_voronoi,
    mod_lattice,
    NestedLatticeCode,
    second_moment,
)

__all__ = [
    # lattice.py
    'DecodeOutcome',
    'EPS_RANK',
    'IntegerBox',
    'Lattice',

    # reduction.py
    'lll_reduce',

    # enumeration.py
    'closest_point',
    'minimum_distance',
    'shortest_vector',

    # codes.py
    'codebook_cap',
    'enumerate_codebook',
    'in_voronoi',
    'mod_lattice',
    'NestedLatticeCode',
    'second_moment',
]
