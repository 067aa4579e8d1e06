# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import math

from collections.abc import (
    Callable,
    Collection,
    Iterator,
)

import numpy as np

from lattices.lattice import (
    DecodeOutcome,
    IntegerBox,
    Lattice,
)
from lattices.reduction import (
    lll_reduce
)
from utils.exceptions import (
    EmptyConstraint,
    NotPositiveDefinite,
    ShapeMismatch,
    TooLarge,
)

TIE_SLACK = 1e-12
ENUMERATION_DIMENSION_CAP = 16

Admit = Callable[[tuple[int, ...]], tuple[int, ...] | None]

def _slack(cost: float) -> float:
    return TIE_SLACK * max(1.0, cost)

def _zigzag(center: float, lo: int, hi: int) -> Iterator[int]:
    """Integers of [lo, hi] by increasing distance to ``center``, lower one first on ties."""
    left = math.floor(center)
    right = left + 1
    if left > hi:
        left, right = hi, hi + 1
    elif right < lo:
        left, right = lo - 1, lo
    while left >= lo or right <= hi:
        if left >= lo and (right > hi or center - left <= right - center):
            yield left
            left -= 1
        else:
            yield right
            right += 1

def _babai(upper: np.ndarray, center: np.ndarray, lower_bounds: list, upper_bounds: list) -> tuple[np.ndarray, float]:
    """Successive rounding on the triangular system, clamped to the bounds."""
    n = upper.shape[1]
    coeffs = np.zeros(n)
    cost = 0.0
    for level in range(n - 1, -1, -1):
        residual = center[level] - upper[level, level + 1:] @ coeffs[level + 1:]
        value = math.floor(residual / upper[level, level] + 0.5)
        if lower_bounds[level] is not None:
            value = min(max(value, lower_bounds[level]), upper_bounds[level])
        coeffs[level] = value
        cost = cost + (residual - upper[level, level] * value) ** 2
    return coeffs, cost


class _SphereSearch:
    """
    Depth-first Fincke-Pohst enumeration of min ||center - upper @ s||^2.

    Coordinates are fixed from the last to the first; each level visits its integer
    interval in zig-zag order around the projected center, clamped to the box. The radius
    shrinks on every improvement. Candidates within the tie slack of the best cost are
    kept when their key (``admit`` output) is lexicographically smaller.
    """

    def __init__(self, upper: np.ndarray, center: np.ndarray, lower_bounds: list, upper_bounds: list,
                 radius: float, admit: Admit):
        self.upper = upper
        self.center = center
        self.lower_bounds = lower_bounds
        self.upper_bounds = upper_bounds
        self.admit = admit
        self.best_cost = radius
        self.best_key: tuple[int, ...] | None = None
        self.nodes = 0
        self.current = np.zeros(upper.shape[1])

    def run(self) -> "_SphereSearch":
        self._descend(self.upper.shape[1] - 1, 0.0)
        return self

    def _limit(self) -> float:
        return self.best_cost + _slack(self.best_cost)

    def _descend(self, level: int, partial: float) -> None:
        diag = self.upper[level, level]
        residual = self.center[level] - self.upper[level, level + 1:] @ self.current[level + 1:]
        center = residual / diag

        lo, hi = self.lower_bounds[level], self.upper_bounds[level]
        budget = self._limit() - partial
        if budget < 0:
            return
        if np.isfinite(budget):
            width = math.sqrt(budget) / abs(diag)
            lo = math.ceil(center - width) if lo is None else max(lo, math.ceil(center - width))
            hi = math.floor(center + width) if hi is None else min(hi, math.floor(center + width))
        elif lo is None:
            raise EmptyConstraint("unbounded search without an initial radius")
        if lo > hi:
            return

        for value in _zigzag(center, lo, hi):
            cost = partial + (residual - diag * value) ** 2
            self.nodes += 1
            if cost > self._limit():
                break
            self.current[level] = value
            if level == 0:
                self._leaf(cost)
            else:
                self._descend(level - 1, cost)

    def _leaf(self, cost: float) -> None:
        key = self.admit(tuple(int(v) for v in self.current))
        if key is None:
            return
        if self.best_key is not None:
            slack = _slack(self.best_cost)
            if cost > self.best_cost + slack:
                return
            if cost >= self.best_cost - slack and key >= self.best_key:
                return
            self.best_cost = min(cost, self.best_cost)
        else:
            self.best_cost = cost
        self.best_key = key


def _bounds(constraint: IntegerBox | None, n: int) -> tuple[list, list]:
    if constraint is None:
        return [None] * n, [None] * n
    return list(constraint.lower), list(constraint.upper)

def closest_point(lattice: Lattice,
                  target: np.ndarray,
                  constraint: IntegerBox | None = None,
                  support: Collection[tuple[int, ...]] | None = None,
                  reduce: bool = False) -> DecodeOutcome:
    """
    Closest lattice point to ``target`` with coefficients restricted to a box.

    Parameters
    ----------
    lattice: Lattice
        Lattice to search.
    target: np.ndarray
        Vector of the lattice's ambient dimension.
    constraint: IntegerBox | None
        Inclusive box on the coefficient vector; all of Z^n when absent.
    support: Collection[tuple[int, ...]] | None
        Optional finite set of admissible coefficient vectors. When given without a box,
        the bounding box of the set is used.
    reduce: bool
        LLL-reduce the basis first. Only applies to unconstrained searches; the answer,
        tie-break included, is the same either way.

    Returns
    -------
    DecodeOutcome
        Minimizing point, its coefficients, the squared distance and the node count.
        Ties within a relative 1e-12 are broken by the lexicographically smallest
        coefficient vector.
    """
    y = np.asarray(target, dtype=float).reshape(-1)
    if y.shape[0] != lattice.ambient_dimension:
        raise ShapeMismatch(f"target has dimension {y.shape[0]}, lattice {lattice.ambient_dimension}")

    admissible = None
    if support is not None:
        admissible = support if isinstance(support, (set, frozenset)) else frozenset(
            tuple(int(v) for v in coeffs) for coeffs in support
        )
        if not admissible:
            raise EmptyConstraint("empty admissible set")
        if constraint is None:
            constraint = IntegerBox.bounding(admissible)
    if constraint is not None and constraint.dimension != lattice.dimension:
        raise ShapeMismatch(f"box has dimension {constraint.dimension}, lattice {lattice.dimension}")

    if reduce and constraint is None:
        reduced, transform = lll_reduce(lattice.generator)
        q, r = np.linalg.qr(reduced)

        def admit(coeffs: tuple[int, ...]) -> tuple[int, ...]:
            return tuple(int(v) for v in transform @ np.asarray(coeffs, dtype=np.int64))
    else:
        q, r = lattice.triangular

        def admit(coeffs: tuple[int, ...]) -> tuple[int, ...] | None:
            return coeffs if admissible is None or coeffs in admissible else None

    lower_bounds, upper_bounds = _bounds(constraint, lattice.dimension)
    center = q.T @ y
    babai, cost = _babai(r, center, lower_bounds, upper_bounds)
    radius = cost if admit(tuple(int(v) for v in babai)) is not None else math.inf

    search = _SphereSearch(r, center, lower_bounds, upper_bounds, radius, admit).run()
    if search.best_key is None:
        raise EmptyConstraint("no admissible lattice point")

    point = lattice.point(search.best_key)
    return DecodeOutcome(point, search.best_key, float(np.sum((y - point) ** 2)), search.nodes)

def shortest_vector(gram: np.ndarray) -> tuple[tuple[int, ...], float]:
    """
    Nonzero integer vector minimizing a^T G a.

    Among all minimizers (both signs) the lexicographically smallest is selected and then
    sign-normalized so that its first nonzero coordinate is positive.

    Raises
    ------
    NotPositiveDefinite
        When ``gram`` is not symmetric positive definite.
    """
    g = np.asarray(gram, dtype=float)
    if g.ndim != 2 or g.shape[0] != g.shape[1] or not np.allclose(g, g.T, rtol=1e-10, atol=1e-12):
        raise NotPositiveDefinite("Gram matrix must be square and symmetric")
    try:
        chol = np.linalg.cholesky(g)
    except np.linalg.LinAlgError as e:
        raise NotPositiveDefinite("Gram matrix is not positive definite") from e

    n = g.shape[0]
    zero = (0,) * n
    search = _SphereSearch(
        chol.T, np.zeros(n), [None] * n, [None] * n,
        float(np.min(np.diag(g))),
        lambda coeffs: None if coeffs == zero else coeffs,
    ).run()

    coeffs = search.best_key
    first = next(v for v in coeffs if v != 0)
    if first < 0:
        coeffs = tuple(-v for v in coeffs)
    vector = np.asarray(coeffs, dtype=float)
    return coeffs, float(vector @ g @ vector)

def minimum_distance(lattice: Lattice, cap: int = ENUMERATION_DIMENSION_CAP) -> float:
    """Length of the shortest nonzero lattice vector."""
    if lattice.dimension > cap:
        raise TooLarge(f"dimension {lattice.dimension} exceeds enumeration cap {cap}")
    _, norm2 = shortest_vector(lattice.gram)
    return math.sqrt(norm2)
