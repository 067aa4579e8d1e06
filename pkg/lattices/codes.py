# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import itertools
import math
import os

from dataclasses import (
    dataclass
)
from functools import (
    cached_property
)

import numpy as np

from lattices.enumeration import (
    closest_point
)
from lattices.lattice import (
    IntegerBox,
    Lattice,
)
from utils.exceptions import (
    EmptyCodebook,
    NotNested,
    PowerExceeded,
    ShapeMismatch,
    TooLarge,
)

NESTING_TOL = 1e-9
DEFAULT_CODEBOOK_CAP = 10 ** 6
CODEBOOK_CAP_ENV = "CF_LATTICE_MAX_CODEBOOK"

def codebook_cap() -> int:
    """Codebook and enumeration size cap, overridable through the environment."""
    return int(os.environ.get(CODEBOOK_CAP_ENV, DEFAULT_CODEBOOK_CAP))

def mod_lattice(x: np.ndarray, coarse: Lattice) -> np.ndarray:
    """
    [x] mod coarse = x - Q(x), which lies in the fundamental Voronoi region.

    On a Voronoi boundary Q takes the tied coarse point with the lexicographically
    largest coefficients, so the kept half of the boundary faces the negative side:
    10Z reduces the integers to [-5, 5).
    """
    vector = np.asarray(x, dtype=float).reshape(-1)
    return vector + closest_point(coarse, -vector).point

def in_voronoi(x: np.ndarray, lattice: Lattice, tol: float = NESTING_TOL) -> bool:
    """True when the origin is a closest lattice point to ``x`` (boundary included)."""
    vector = np.asarray(x, dtype=float).reshape(-1)
    norm2 = float(vector @ vector)
    return closest_point(lattice, vector).metric >= norm2 - tol * max(1.0, norm2)

def _relative_basis(fine: Lattice, coarse: Lattice) -> np.ndarray:
    if fine.dimension != coarse.dimension or fine.ambient_dimension != fine.dimension \
            or coarse.ambient_dimension != coarse.dimension:
        raise ShapeMismatch("nested lattices must be square and of equal dimension")
    relative = np.linalg.solve(fine.generator, coarse.generator)
    rounded = np.rint(relative)
    if np.max(np.abs(relative - rounded)) > NESTING_TOL:
        raise NotNested("coarse basis vectors do not have integer fine coordinates")
    return rounded

def enumerate_codebook(fine: Lattice, coarse: Lattice, cap: int | None = None) -> np.ndarray:
    """
    Codewords [lambda] mod coarse over the cosets of the coarse lattice in the fine one.

    Coset representatives are the integer points of the fundamental parallelepiped of the
    coarse basis expressed in fine coordinates.

    Returns
    -------
    np.ndarray
        K x n array of codewords, K = |det coarse| / |det fine|, sorted lexicographically.
    """
    cap = codebook_cap() if cap is None else cap
    relative = _relative_basis(fine, coarse)
    n = fine.dimension
    index = int(round(abs(np.linalg.det(relative))))
    if index > cap:
        raise TooLarge(f"codebook size {index} exceeds cap {cap}")

    corners = relative @ np.array(list(itertools.product((0, 1), repeat=n)), dtype=float).T
    box = IntegerBox(
        tuple(math.floor(v) for v in corners.min(axis=1)),
        tuple(math.ceil(v) for v in corners.max(axis=1)),
    )
    if box.size > (2 ** n) * cap:
        raise TooLarge(f"coset search box of {box.size} points exceeds cap")

    grid = np.array(list(box.points()), dtype=float)
    frac = grid @ np.linalg.inv(relative).T
    keep = np.all((frac > -NESTING_TOL) & (frac < 1.0 - NESTING_TOL), axis=1)
    representatives = grid[keep]
    if representatives.shape[0] != index:
        raise NotNested(f"found {representatives.shape[0]} coset representatives, expected {index}")

    codewords = np.array([mod_lattice(fine.generator @ rep, coarse) for rep in representatives])
    order = np.lexsort(codewords.T[::-1])
    return codewords[order]

def second_moment(codebook: np.ndarray, n: int) -> float:
    """Per-dimension energy (1/n) mean ||lambda||^2."""
    points = np.asarray(codebook, dtype=float)
    if points.size == 0:
        raise EmptyCodebook("second moment of an empty codebook")
    return float(np.mean(np.sum(points.reshape(len(points), -1) ** 2, axis=1)) / n)


@dataclass(frozen=True, eq=False)
class NestedLatticeCode:
    """
    Nested lattice code: fine-lattice points reduced into the Voronoi region of the coarse
    lattice.

    Attributes
    ----------
    fine: Lattice
        Fine (coding) lattice.
    coarse: Lattice
        Coarse (shaping) lattice, a sublattice of ``fine``.
    codebook: np.ndarray
        K x n codewords.
    second_moment: float
        Per-dimension energy of the codebook.
    power: float
        Power bound P, at least the second moment.
    message_dim: int | None
        Optional message length k over F_p.
    field_size: int | None
        Optional prime p.
    """
    fine: Lattice
    coarse: Lattice
    codebook: np.ndarray
    second_moment: float
    power: float
    message_dim: int | None = None
    field_size: int | None = None

    @classmethod
    def build(cls, fine: Lattice, coarse: Lattice, power: float | None = None,
              message_dim: int | None = None, field_size: int | None = None,
              cap: int | None = None) -> "NestedLatticeCode":
        codebook = enumerate_codebook(fine, coarse, cap)
        codebook.setflags(write=False)
        sigma2 = second_moment(codebook, fine.dimension)
        power = sigma2 if power is None else float(power)
        if sigma2 > power * (1.0 + 1e-12):
            raise PowerExceeded(f"second moment {sigma2:.6g} exceeds power {power:.6g}")
        return cls(fine, coarse, codebook, sigma2, power, message_dim, field_size)

    @classmethod
    def integer_constellation(cls, bound: int) -> "NestedLatticeCode":
        """The 1-D constellation [-bound, bound] as Z nested in (2 bound + 1) Z."""
        return cls.build(Lattice.integer(1), Lattice.integer(1, 2 * bound + 1))

    @property
    def dimension(self) -> int:
        return self.fine.dimension

    @property
    def size(self) -> int:
        return self.codebook.shape[0]

    @property
    def nesting_index(self) -> float:
        return self.coarse.volume / self.fine.volume

    @property
    def message_rate(self) -> float | None:
        """r = (k / n) log2 p when the message metadata is known."""
        if self.message_dim is None or self.field_size is None:
            return None
        return self.message_dim / self.dimension * math.log2(self.field_size)

    @cached_property
    def fine_coefficients(self) -> np.ndarray:
        """Integer fine-lattice coordinates of every codeword."""
        coeffs = np.rint(np.linalg.solve(self.fine.generator, self.codebook.T).T).astype(np.int64)
        coeffs.setflags(write=False)
        return coeffs

    @cached_property
    def _index_by_coeffs(self) -> dict[tuple[int, ...], int]:
        return {tuple(int(v) for v in row): i for i, row in enumerate(self.fine_coefficients)}

    def coset_index(self, point: np.ndarray) -> int:
        """Index of the codeword congruent to a fine-lattice point modulo the coarse lattice."""
        reduced = mod_lattice(point, self.coarse)
        coeffs = tuple(int(v) for v in np.rint(np.linalg.solve(self.fine.generator, reduced)))
        return self._index_by_coeffs[coeffs]
