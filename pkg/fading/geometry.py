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

from scipy.special import (
    logsumexp
)

from diophantine.euclid import (
    bounded_family,
    PairSolutionFamily,
)
from lattices.lattice import (
    IntegerBox
)
from selection.channel import (
    ChannelRealization,
    NetworkCodeVector,
)
from utils.exceptions import (
    DegenerateGeometry,
    NoSolution,
)

GAMMA_EPS = 1e-9

@dataclass(frozen=True)
class ScaledObservation:
    """
    Channel output after MMSE scaling: y~ = alpha y, h~ = alpha h, sigma~^2 = alpha^2 sigma^2.
    """
    y: float
    h: tuple[float, float]
    noise_variance: float

    @classmethod
    def from_channel(cls, y: float, ch: ChannelRealization, alpha: float) -> "ScaledObservation":
        return cls(
            float(alpha * y),
            tuple(float(alpha * v) for v in ch.h),
            float(alpha ** 2 * ch.noise_variance),
        )


def candidate_set(a: NetworkCodeVector, bound: int) -> IntegerBox:
    """Range of a1 x1 + a2 x2 over the constellation [-bound, bound]^2."""
    reach = (abs(a[0]) + abs(a[1])) * bound
    return IntegerBox((-reach,), (reach,))


@dataclass(frozen=True)
class LikelihoodGeometry:
    """
    Scalars of the reparameterized likelihood.

    Along the solution family, h~1 x1 + h~2 x2 = (gamma t - beta k) / g with
    gamma = h~1 u1 + h~2 u2 and beta = a1 h~2 - a2 h~1.

    Attributes
    ----------
    gamma: float
    beta: float
    y: float
        Scaled observation y~.
    g: int
        gcd of the code vector.
    candidates: IntegerBox
        Candidate set A_t of the combination t.
    constellation: IntegerBox
        Shaping box of (x1, x2).
    """
    gamma: float
    beta: float
    y: float
    g: int
    candidates: IntegerBox
    constellation: IntegerBox

    @classmethod
    def build(cls, obs: ScaledObservation, family: PairSolutionFamily, bound: int) -> "LikelihoodGeometry":
        gamma = obs.h[0] * family.u1 + obs.h[1] * family.u2
        beta = family.a1 * obs.h[1] - family.a2 * obs.h[0]
        a = NetworkCodeVector((family.a1, family.a2))
        return cls(gamma, beta, obs.y, family.g, candidate_set(a, bound), IntegerBox.symmetric(2, bound))

    @property
    def degenerate(self) -> bool:
        return abs(self.gamma) < GAMMA_EPS

    @property
    def beta_ratio(self) -> float:
        """beta' = beta / gamma."""
        if self.degenerate:
            raise DegenerateGeometry(f"|gamma| = {abs(self.gamma):.3e} is below {GAMMA_EPS}")
        return self.beta / self.gamma

    @property
    def shift(self) -> float:
        """y' = -y~ / gamma."""
        if self.degenerate:
            raise DegenerateGeometry(f"|gamma| = {abs(self.gamma):.3e} is below {GAMMA_EPS}")
        return -self.y / self.gamma

    def residual(self, t: int, k: int) -> float:
        """y~ - h~1 x1(t, k) - h~2 x2(t, k)."""
        return self.y - (self.gamma * t - self.beta * k) / self.g


def ida_objective(geom: LikelihoodGeometry, t: int, k: int) -> float:
    """F(t, k) = |beta' k - t - y'|."""
    return abs(geom.beta_ratio * k - t - geom.shift)

def _log_terms(t: int, geom: LikelihoodGeometry, obs: ScaledObservation,
               family: PairSolutionFamily, box: IntegerBox) -> np.ndarray:
    if obs.noise_variance <= 0:
        raise DegenerateGeometry("likelihood needs a positive scaled noise variance")
    members = bounded_family(family.retarget(t), box)
    residuals = np.array([geom.residual(t, k) for k, _, _ in members])
    return -residuals ** 2 / (2.0 * obs.noise_variance)

def likelihood(t: int, geom: LikelihoodGeometry, obs: ScaledObservation,
               family: PairSolutionFamily, box: IntegerBox) -> float:
    """
    phi(t) = sum over admissible k of exp(-(y~ - gamma t + beta k)^2 / (2 sigma~^2)).

    The sum runs over exactly the k keeping (x1, x2) inside ``box``.

    Raises
    ------
    NoSolution
        When gcd(a1, a2) does not divide t.
    """
    return float(np.sum(np.exp(_log_terms(t, geom, obs, family, box))))

def log_likelihood(t: int, geom: LikelihoodGeometry, obs: ScaledObservation,
                   family: PairSolutionFamily, box: IntegerBox) -> float:
    """log phi(t) without underflow; -inf when no k is admissible."""
    terms = _log_terms(t, geom, obs, family, box)
    if terms.size == 0:
        return -math.inf
    return float(logsumexp(terms))

def likelihood_profile(geom: LikelihoodGeometry, obs: ScaledObservation, family: PairSolutionFamily,
                       box: IntegerBox, t_range: Iterable[int] | None = None) -> list[tuple[int, float]]:
    """Table of (t, phi(t)); t defaults to the candidate set, unreachable t score 0."""
    if t_range is None:
        t_range = range(geom.candidates.lower[0], geom.candidates.upper[0] + 1)
    profile = []
    for t in t_range:
        try:
            profile.append((int(t), likelihood(t, geom, obs, family, box)))
        except NoSolution:
            profile.append((int(t), 0.0))
    return profile

def near_ties(profile: list[tuple[int, float]], tolerance: float = 1e-3) -> list[int]:
    """
    Values of t whose likelihood is within a relative ``tolerance`` of the maximum,
    best first.
    """
    peak = max(phi for _, phi in profile)
    if peak <= 0:
        return []
    ranked = sorted(profile, key=lambda row: (-row[1], abs(row[0]), row[0]))
    return [t for t, phi in ranked if (peak - phi) / peak < tolerance]
