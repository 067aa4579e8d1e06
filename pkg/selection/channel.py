# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import math

from collections.abc import (
    Iterable
)
from dataclasses import (
    dataclass
)

import numpy as np

from utils.exceptions import (
    InvalidChannel,
    InvalidCodeVector,
)

def db_to_linear(snr_db: float) -> float:
    return 10.0 ** (float(snr_db) / 10.0)


@dataclass(frozen=True, eq=False)
class ChannelRealization:
    """
    One use of the real multiple-access channel y = sum_i h_i x_i + z.

    Attributes
    ----------
    h: np.ndarray
        Fading vector of length N.
    noise_variance: float
        Variance sigma^2 of z.
    power: float
        Per-dimension transmit power P.
    """
    h: np.ndarray
    noise_variance: float
    power: float = 1.0

    def __post_init__(self):
        h = np.array(self.h, dtype=float).reshape(-1)
        if h.size < 1 or not np.all(np.isfinite(h)):
            raise InvalidChannel("fading vector must be finite with at least one entry")
        if not self.noise_variance > 0:
            raise InvalidChannel(f"noise variance must be positive, got {self.noise_variance}")
        if not self.power > 0:
            raise InvalidChannel(f"power must be positive, got {self.power}")
        h.setflags(write=False)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "noise_variance", float(self.noise_variance))
        object.__setattr__(self, "power", float(self.power))

    @classmethod
    def from_snr_db(cls, h: Iterable[float], snr_db: float, power: float = 1.0) -> "ChannelRealization":
        """Channel whose SNR P / sigma^2 equals ``snr_db``."""
        return cls(np.asarray(list(h), dtype=float), power / db_to_linear(snr_db), power)

    @property
    def sources(self) -> int:
        return self.h.size

    @property
    def snr(self) -> float:
        return self.power / self.noise_variance

    @property
    def snr_db(self) -> float:
        return 10.0 * math.log10(self.snr)


@dataclass(frozen=True)
class NetworkCodeVector:
    """Integer coefficients of the combination a relay decodes."""
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(v) for v in self.coeffs)
        if not coeffs or all(v == 0 for v in coeffs):
            raise InvalidCodeVector("network code vector must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, index: int) -> int:
        return self.coeffs[index]

    @property
    def gcd(self) -> int:
        return math.gcd(*self.coeffs)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=float)

    def normalized(self) -> "NetworkCodeVector":
        """Representative of {a, -a} whose first nonzero entry is positive."""
        first = next(v for v in self.coeffs if v != 0)
        return self if first > 0 else NetworkCodeVector(tuple(-v for v in self.coeffs))

    def require_coprime(self) -> "NetworkCodeVector":
        if self.gcd != 1:
            raise InvalidCodeVector(f"coefficients {self.coeffs} are not coprime")
        return self
