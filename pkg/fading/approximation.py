# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import math

from diophantine.euclid import (
    family_k_interval,
    PairSolutionFamily,
)
from fading.geometry import (
    ida_objective,
    LikelihoodGeometry,
    ScaledObservation,
)
from lattices.enumeration import (
    TIE_SLACK
)
from utils.exceptions import (
    EmptyConstraint,
    InvalidCodeVector,
)

CF_REMAINDER_EPS = 1e-12
MAX_PARTIAL_QUOTIENTS = 64

def convergents(x: float, max_denominator: int) -> list[tuple[int, int]]:
    """
    Continued-fraction convergents p/q of ``x`` with 0 < q <= max_denominator.
    """
    quotient = math.floor(x)
    remainder = x - quotient
    p_prev, p = 1, quotient
    q_prev, q = 0, 1
    result = [(p, q)]
    while remainder > CF_REMAINDER_EPS and len(result) < MAX_PARTIAL_QUOTIENTS:
        x = 1.0 / remainder
        quotient = math.floor(x)
        remainder = x - quotient
        p_prev, p = p, quotient * p + p_prev
        q_prev, q = q, quotient * q + q_prev
        if q > max_denominator:
            break
        result.append((p, q))
    return result

def _distance_to_integer(value: float) -> float:
    return abs(value - math.floor(value + 0.5))

def diophantine_candidate(ratio: float, shift: float, k_lo: int, k_hi: int) -> int:
    """
    Integer k in [k_lo, k_hi] making ratio k - shift close to an integer.

    Greedy descent over the convergent denominators of ``ratio``, largest step first:
    each q moves ratio k by nearly an integer plus a small signed remainder, so repeated
    steps walk the fractional part towards the target.
    """
    k = k_lo
    best = _distance_to_integer(ratio * k - shift)
    steps = sorted({q for _, q in convergents(ratio, max(1, k_hi - k_lo))}, reverse=True)
    for step in steps:
        for direction in (1, -1):
            while k_lo <= k + direction * step <= k_hi:
                value = _distance_to_integer(ratio * (k + direction * step) - shift)
                if value >= best:
                    break
                k += direction * step
                best = value
    return k

def admissible_intervals(geom: LikelihoodGeometry, family: PairSolutionFamily) -> dict[int, tuple[int, int]]:
    """For every t of the candidate set, the k-interval keeping (x1, x2) in the constellation."""
    intervals = {}
    for t in range(geom.candidates.lower[0], geom.candidates.upper[0] + 1):
        if t % family.g:
            continue
        interval = family_k_interval(family.retarget(t), geom.constellation)
        if interval is not None:
            intervals[t] = interval
    return intervals

def tie_bound(best: float) -> float:
    """Largest score still tied with ``best``."""
    return best + TIE_SLACK * max(1.0, best)

def select_combination(scores: dict[int, float]) -> int:
    """Smallest score; ties go to smaller |t|, then smaller t."""
    bound = tie_bound(min(scores.values()))
    tied = [t for t, score in scores.items() if score <= bound]
    return min(tied, key=lambda t: (abs(t), t))

def _best_over_k(geom: LikelihoodGeometry, t: int, k_lo: int, k_hi: int) -> float:
    candidates = {k_lo, k_hi}
    ratio = geom.beta_ratio
    if ratio != 0:
        root = (t + geom.shift) / ratio
        if math.isfinite(root):
            base = math.floor(root)
            candidates.update(min(max(base + d, k_lo), k_hi) for d in (-1, 0, 1, 2))
    return min(ida_objective(geom, t, k) for k in candidates)

def ida_exhaustive(geom: LikelihoodGeometry, family: PairSolutionFamily) -> int:
    """Bounded exhaustive minimizer of F(t, k) over every admissible pair."""
    intervals = admissible_intervals(geom, family)
    if not intervals:
        raise EmptyConstraint("no admissible combination")
    scores = {
        t: min(ida_objective(geom, t, k) for k in range(k_lo, k_hi + 1))
        for t, (k_lo, k_hi) in intervals.items()
    }
    return select_combination(scores)

def ida_decode(obs: ScaledObservation, geom: LikelihoodGeometry, family: PairSolutionFamily) -> int:
    """
    Near-ML estimate of t by inhomogeneous diophantine approximation.

    Minimizes F(t, k) = |beta' k - t - y'| over t in A_t and the k admissible for it. A
    convergent-guided candidate gives an initial radius; every t whose reachable values
    beta' k - y' stay farther than that radius is skipped, the rest are minimized over k
    exactly. The answer equals :func:`ida_exhaustive`.

    Raises
    ------
    DegenerateGeometry
        When |gamma| < 1e-9.
    """
    ratio, shift = geom.beta_ratio, geom.shift
    if family.g != 1:
        raise InvalidCodeVector(f"IDA decoding needs coprime coefficients, gcd is {family.g}")
    intervals = admissible_intervals(geom, family)
    if not intervals:
        raise EmptyConstraint("no admissible combination")

    k_lo = min(lo for lo, _ in intervals.values())
    k_hi = max(hi for _, hi in intervals.values())
    k_star = diophantine_candidate(ratio, shift, k_lo, k_hi)
    t_star = math.floor(ratio * k_star - shift + 0.5)
    radius = math.inf
    if t_star in intervals and intervals[t_star][0] <= k_star <= intervals[t_star][1]:
        radius = ida_objective(geom, t_star, k_star)
    radius = tie_bound(radius)

    scores = {}
    for t, (lo, hi) in intervals.items():
        ends = (ratio * lo - shift, ratio * hi - shift)
        gap = max(min(ends) - t, t - max(ends), 0.0)
        if gap > radius:
            continue
        scores[t] = _best_over_k(geom, t, lo, hi)
    return select_combination(scores)
