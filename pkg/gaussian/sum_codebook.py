# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from collections import (
    Counter
)
from dataclasses import (
    dataclass
)
from functools import (
    cached_property
)

import numpy as np

from lattices.codes import (
    codebook_cap,
    NestedLatticeCode,
)
from lattices.lattice import (
    IntegerBox,
    Lattice,
)
from utils.exceptions import (
    EmptyCodebook,
    TooLarge,
)

@dataclass(frozen=True, eq=False)
class SumCodebook:
    """
    Distribution of lambda_s = x_1 + ... + x_N for i.i.d. uniform codewords.

    Support points are kept in lexicographic order of their fine coefficients, so the
    first minimizer of any score over the support is the lexicographic tie-break winner.

    Attributes
    ----------
    lattice: Lattice
        Fine lattice the support lives in.
    coeffs: tuple[tuple[int, ...], ...]
        Integer coordinates of the support points.
    points: np.ndarray
        Support points, one per row.
    counts: tuple[int, ...]
        Number of codeword N-tuples summing to each point.
    pmf: np.ndarray
        Exact probabilities counts / K^N.
    model_variance: float
        sigma_s^2 = N sigma_x^2 of the Gaussian model.
    sources: int
        Number of summed codewords N.
    """
    lattice: Lattice
    coeffs: tuple[tuple[int, ...], ...]
    points: np.ndarray
    counts: tuple[int, ...]
    pmf: np.ndarray
    model_variance: float
    sources: int

    @property
    def size(self) -> int:
        return len(self.coeffs)

    @cached_property
    def admissible(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.coeffs)

    @cached_property
    def box(self) -> IntegerBox:
        return IntegerBox.bounding(self.coeffs)

    @cached_property
    def _position(self) -> dict[tuple[int, ...], int]:
        return {c: i for i, c in enumerate(self.coeffs)}

    def coeffs_of(self, point: np.ndarray) -> tuple[int, ...]:
        solved = np.linalg.solve(self.lattice.generator, np.asarray(point, dtype=float))
        return tuple(int(v) for v in np.rint(solved))

    def index_of(self, point: np.ndarray) -> int | None:
        return self._position.get(self.coeffs_of(point))

    def probability(self, point: np.ndarray) -> float:
        index = self.index_of(point)
        return 0.0 if index is None else float(self.pmf[index])

    def model_pmf(self) -> np.ndarray:
        """Discrete Gaussian exp(-||lambda||^2 / (2 sigma_s^2)) normalized over the support."""
        log_weights = -np.sum(self.points ** 2, axis=1) / (2.0 * self.model_variance)
        weights = np.exp(log_weights - log_weights.max())
        return weights / weights.sum()

def build_sum_codebook(code: NestedLatticeCode, sources: int, cap: int | None = None) -> SumCodebook:
    """
    Exact N-fold sum distribution by iterated convolution of codeword multiplicities.

    Raises
    ------
    TooLarge
        When an intermediate support exceeds the cap.
    """
    cap = codebook_cap() if cap is None else cap
    if sources < 1:
        raise EmptyCodebook("at least one source is needed")
    if code.second_moment <= 0:
        raise EmptyCodebook("the codebook has zero energy")

    base = [tuple(int(v) for v in row) for row in code.fine_coefficients]
    current = Counter({(0,) * code.dimension: 1})
    for _ in range(sources):
        convolved = Counter()
        for partial, multiplicity in current.items():
            for coeffs in base:
                convolved[tuple(p + c for p, c in zip(partial, coeffs))] += multiplicity
        if len(convolved) > cap:
            raise TooLarge(f"sum support of {len(convolved)} points exceeds cap {cap}")
        current = convolved

    support = sorted(current)
    counts = tuple(current[c] for c in support)
    total = len(base) ** sources
    points = np.array([code.fine.point(c) for c in support])
    pmf = np.array(counts, dtype=float) / total
    points.setflags(write=False)
    pmf.setflags(write=False)
    return SumCodebook(
        code.fine,
        tuple(support),
        points,
        counts,
        pmf,
        sources * code.second_moment,
        sources,
    )
