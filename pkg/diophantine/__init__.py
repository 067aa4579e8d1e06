# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from .euclid import (
    bounded_family,
    extended_gcd,
    family_k_interval,
    PairSolutionFamily,
    solve_pair,
)
from .hnf import (
    hermite_normal_form,
    hnf_solve,
    HnfDecomposition,
    HnfSolution,
)

__all__ = [
    # euclid.py
    'bounded_family',
    'extended_gcd',
    'family_k_interval',
    'PairSolutionFamily',
    'solve_pair',

    # hnf.py
    'hermite_normal_form',
    'hnf_solve',
    'HnfDecomposition',
    'HnfSolution',
]
