# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from dataclasses import (
    dataclass
)

import numpy as np

@dataclass(frozen=True)
class TrialStream:
    """
    Identifier of one Monte Carlo trial.

    The random generator of a trial is derived from ``(seed, point_index, trial_index)``
    alone, so a trial can be replayed without running any other trial.
    """
    seed: int
    point_index: int
    trial_index: int

    def generator(self) -> np.random.Generator:
        return np.random.default_rng([self.seed, self.point_index, self.trial_index])

    @property
    def stream_id(self) -> str:
        return f"{self.seed}:{self.point_index}:{self.trial_index}"
