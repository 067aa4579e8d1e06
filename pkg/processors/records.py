# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from dataclasses import (
    dataclass,
    field,
)
from typing import (
    Any
)

from utils.exceptions import (
    InvalidParameter
)
from utils.streams import (
    TrialStream
)

@dataclass(frozen=True)
class TrialRecord:
    """
    Everything drawn and decided in one Monte Carlo trial.

    Attributes
    ----------
    stream: TrialStream
        Seed-derived identifier the trial is reproducible from.
    snr_db: float
        Operating point of the trial.
    truth: Any
        Transmitted combination (an integer t, or the coefficient tuple of the sum codeword).
    draws: dict
        Sampled fading, codewords and noise.
    decisions: dict
        Decision of every decoder, None when the decoder failed.
    correct: dict
        Correctness flag of every decoder.
    failures: dict
        Error message of every decoder that raised.
    """
    stream: TrialStream
    snr_db: float
    truth: Any
    draws: dict = field(default_factory=dict)
    decisions: dict = field(default_factory=dict)
    correct: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ErrorRatePoint:
    snr_db: float
    trials: int
    errors: int
    pe: float
    ci95_half: float

    def __post_init__(self):
        if not 0 <= self.errors <= self.trials:
            raise InvalidParameter(f"errors {self.errors} must lie in [0, {self.trials}]")


@dataclass
class ErrorRateCurve:
    """Per-SNR error estimates of one decoder."""
    scenario: str
    decoder: str
    points: list[ErrorRatePoint] = field(default_factory=list)

    @property
    def snr_db(self) -> list[float]:
        return [point.snr_db for point in self.points]

    @property
    def pe(self) -> list[float]:
        return [point.pe for point in self.points]
