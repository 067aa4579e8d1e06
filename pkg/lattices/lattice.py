# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import itertools

from collections.abc import (
    Iterable,
    Iterator,
)
from dataclasses import (
    dataclass,
    field,
)
from functools import (
    cached_property
)

import numpy as np

from utils.exceptions import (
    EmptyConstraint,
    RankDeficient,
    ShapeMismatch,
)

EPS_RANK = 1e-10

@dataclass(frozen=True, eq=False)
class Lattice:
    """
    Real lattice {M s : s integer} with generator columns (x = M s).

    The generator may be tall (m x n with m >= n), which covers stacked generators
    such as the augmented MAP lattice. The array is copied and frozen on construction.

    Attributes
    ----------
    generator: np.ndarray
        Real m x n generator matrix.
    """
    generator: np.ndarray = field(repr=True)

    def __post_init__(self):
        generator = np.array(self.generator, dtype=float)
        if generator.ndim == 1:
            generator = generator.reshape(1, -1)
        if generator.ndim != 2 or generator.shape[1] == 0 or generator.shape[0] < generator.shape[1]:
            raise RankDeficient(f"generator must be m x n with m >= n >= 1, got {generator.shape}")
        if not np.all(np.isfinite(generator)):
            raise RankDeficient("generator has non-finite entries")
        generator.setflags(write=False)
        object.__setattr__(self, "generator", generator)
        if self.volume <= EPS_RANK:
            raise RankDeficient(f"generator is rank deficient (volume {self.volume:.3e})")

    @classmethod
    def integer(cls, n: int, scale: float = 1.0) -> "Lattice":
        """The scaled integer lattice scale * Z^n."""
        return cls(scale * np.eye(n))

    @property
    def dimension(self) -> int:
        return self.generator.shape[1]

    @property
    def ambient_dimension(self) -> int:
        return self.generator.shape[0]

    @cached_property
    def gram(self) -> np.ndarray:
        gram = self.generator.T @ self.generator
        gram.setflags(write=False)
        return gram

    @cached_property
    def volume(self) -> float:
        """Fundamental volume; |det M| for square generators."""
        if self.ambient_dimension == self.dimension:
            return float(abs(np.linalg.det(self.generator)))
        return float(np.sqrt(max(np.linalg.det(self.generator.T @ self.generator), 0.0)))

    @cached_property
    def triangular(self) -> tuple[np.ndarray, np.ndarray]:
        """Reduced QR factors (Q, R) of the generator."""
        q, r = np.linalg.qr(self.generator)
        q.setflags(write=False)
        r.setflags(write=False)
        return q, r

    def point(self, coeffs: Iterable[int]) -> np.ndarray:
        return self.generator @ np.asarray(list(coeffs), dtype=float)

    def scaled(self, factor: float) -> "Lattice":
        return Lattice(factor * self.generator)


@dataclass(frozen=True)
class IntegerBox:
    """
    Inclusive per-coordinate integer bounds on a coefficient vector.
    """
    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self):
        lower = tuple(int(v) for v in self.lower)
        upper = tuple(int(v) for v in self.upper)
        if len(lower) != len(upper) or not lower:
            raise ShapeMismatch("box bounds must be nonempty and of equal length")
        if any(lo > hi for lo, hi in zip(lower, upper)):
            raise EmptyConstraint(f"empty box: lower {lower} exceeds upper {upper}")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def symmetric(cls, n: int, bound: int) -> "IntegerBox":
        """The box [-bound, bound]^n."""
        return cls((-bound,) * n, (bound,) * n)

    @classmethod
    def bounding(cls, vectors: Iterable[tuple[int, ...]]) -> "IntegerBox":
        stacked = np.array(list(vectors), dtype=np.int64)
        if stacked.size == 0:
            raise EmptyConstraint("cannot bound an empty set of vectors")
        return cls(tuple(stacked.min(axis=0)), tuple(stacked.max(axis=0)))

    @property
    def dimension(self) -> int:
        return len(self.lower)

    @property
    def size(self) -> int:
        total = 1
        for lo, hi in zip(self.lower, self.upper):
            total *= hi - lo + 1
        return total

    def contains(self, coeffs: Iterable[int]) -> bool:
        values = tuple(coeffs)
        return len(values) == self.dimension and all(
            lo <= v <= hi for lo, v, hi in zip(self.lower, values, self.upper)
        )

    def points(self) -> Iterator[tuple[int, ...]]:
        """All integer vectors of the box in lexicographic order."""
        return itertools.product(*(range(lo, hi + 1) for lo, hi in zip(self.lower, self.upper)))


@dataclass(frozen=True, eq=False)
class DecodeOutcome:
    """
    Result of a lattice search.

    Attributes
    ----------
    point: np.ndarray
        Decoded lattice point.
    coeffs: tuple[int, ...]
        Integer coefficient vector of the point.
    metric: float
        Value of the minimized metric (squared distance for plain searches).
    nodes: int
        Number of enumeration nodes visited.
    """
    point: np.ndarray
    coeffs: tuple[int, ...]
    metric: float
    nodes: int = 0

    def __iter__(self):
        yield self.point
        yield self.coeffs
        yield self.metric
