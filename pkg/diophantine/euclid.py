# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from dataclasses import (
    dataclass
)

from lattices.lattice import (
    IntegerBox
)
from utils.exceptions import (
    BothZero,
    NoSolution,
    ShapeMismatch,
)

def _sign(value: int) -> int:
    return (value > 0) - (value < 0)

def _ceil_div(numerator: int, denominator: int) -> int:
    return -((-numerator) // denominator)

def extended_gcd(a1: int, a2: int) -> tuple[int, int, int]:
    """
    Extended Euclid: g = gcd(a1, a2) >= 1 and a1 u1 + a2 u2 = g.

    The Bezout pair is canonical: u1 is reduced modulo |a2 / g| into the symmetric range,
    the positive representative winning a tie.

    Raises
    ------
    BothZero
        When a1 = a2 = 0.
    """
    a1, a2 = int(a1), int(a2)
    if a1 == 0 and a2 == 0:
        raise BothZero("gcd(0, 0) is undefined")
    if a2 == 0:
        return abs(a1), _sign(a1), 0
    if a1 == 0:
        return abs(a2), 0, _sign(a2)

    old_r, r = abs(a1), abs(a2)
    old_s, s = 1, 0
    while r:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
    g = old_r
    u1 = old_s * _sign(a1)

    period = abs(a2) // g
    u1 %= period
    if 2 * u1 > period:
        u1 -= period
    u2 = (g - a1 * u1) // a2
    return g, u1, u2


@dataclass(frozen=True)
class PairSolutionFamily:
    """
    All integer solutions of a1 x1 + a2 x2 = t.

    x1(k) = (u1 / g) t + (a2 / g) k and x2(k) = (u2 / g) t - (a1 / g) k for integer k.
    """
    a1: int
    a2: int
    g: int
    u1: int
    u2: int
    t: int

    def solution(self, k: int) -> tuple[int, int]:
        scale = self.t // self.g
        return (self.u1 * scale + (self.a2 // self.g) * k,
                self.u2 * scale - (self.a1 // self.g) * k)

    def retarget(self, t: int) -> "PairSolutionFamily":
        """Same coefficients and Bezout pair, new right-hand side."""
        if int(t) % self.g:
            raise NoSolution(f"gcd {self.g} does not divide {t}")
        return PairSolutionFamily(self.a1, self.a2, self.g, self.u1, self.u2, int(t))

def solve_pair(a1: int, a2: int, t: int) -> PairSolutionFamily:
    g, u1, u2 = extended_gcd(a1, a2)
    if int(t) % g:
        raise NoSolution(f"gcd {g} does not divide {t}")
    return PairSolutionFamily(int(a1), int(a2), g, u1, u2, int(t))

def family_k_interval(family: PairSolutionFamily, box: IntegerBox) -> tuple[int, int] | None:
    """
    Inclusive k-interval keeping both coordinates of the family inside ``box``.

    Each coordinate x = p + s k gives one linear constraint on k; the two resulting
    intervals are intersected. Returns None when the intersection is empty.
    """
    if box.dimension != 2:
        raise ShapeMismatch("pair families live in a 2-D box")
    origin = family.solution(0)
    steps = (family.a2 // family.g, -(family.a1 // family.g))
    k_lo, k_hi = None, None
    for p, s, lo, hi in zip(origin, steps, box.lower, box.upper):
        if s == 0:
            if not lo <= p <= hi:
                return None
            continue
        if s > 0:
            first, last = _ceil_div(lo - p, s), (hi - p) // s
        else:
            first, last = _ceil_div(hi - p, s), (lo - p) // s
        k_lo = first if k_lo is None else max(k_lo, first)
        k_hi = last if k_hi is None else min(k_hi, last)
    if k_lo is None or k_lo > k_hi:
        return None
    return k_lo, k_hi

def bounded_family(family: PairSolutionFamily, box: IntegerBox) -> list[tuple[int, int, int]]:
    """Members (k, x1, x2) of the family whose coordinates lie in ``box``."""
    interval = family_k_interval(family, box)
    if interval is None:
        return []
    return [(k, *family.solution(k)) for k in range(interval[0], interval[1] + 1)]
