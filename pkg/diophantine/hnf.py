# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from collections.abc import (
    Sequence
)
from dataclasses import (
    dataclass
)

import numpy as np
import sympy

from diophantine.euclid import (
    extended_gcd
)
from utils.exceptions import (
    NotInLattice,
    NotIntegral,
    RankDeficient,
    ShapeMismatch,
)

IntMatrix = list[list[int]]

def _as_int_matrix(matrix) -> IntMatrix:
    array = np.asarray(matrix)
    if array.ndim == 1:
        array = array.reshape(1, -1)
    if array.ndim != 2:
        raise ShapeMismatch(f"expected a matrix, got shape {array.shape}")
    rows = []
    for row in array.tolist():
        converted = []
        for value in row:
            if int(value) != value:
                raise NotIntegral(f"non-integer entry {value}")
            converted.append(int(value))
        rows.append(converted)
    return rows

def _combine_columns(matrix: IntMatrix, left: int, right: int,
                     coefficients: tuple[int, int, int, int]) -> None:
    """(col_left, col_right) <- (p col_left + q col_right, r col_left + s col_right)."""
    p, q, r, s = coefficients
    for row in matrix:
        a, b = row[left], row[right]
        row[left], row[right] = p * a + q * b, r * a + s * b


@dataclass(frozen=True)
class HnfDecomposition:
    """
    Column-style Hermite normal form M~ U = [0 | B].

    Attributes
    ----------
    matrix: tuple[tuple[int, ...], ...]
        Input n x m integer matrix M~ with full row rank, m >= n.
    transform: tuple[tuple[int, ...], ...]
        Unimodular m x m matrix U.
    right_block: tuple[tuple[int, ...], ...]
        Upper-triangular n x n block B with positive diagonal; entries right of a pivot
        are reduced into [0, pivot).
    """
    matrix: tuple[tuple[int, ...], ...]
    transform: tuple[tuple[int, ...], ...]
    right_block: tuple[tuple[int, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.matrix)

    @property
    def columns(self) -> int:
        return len(self.transform)

    def verify(self) -> None:
        """Recompute M~ U and det U exactly; raise ShapeMismatch on any inconsistency."""
        product = sympy.Matrix(self.matrix) * sympy.Matrix(self.transform)
        n, m = self.rows, self.columns
        expected = sympy.zeros(n, m - n).row_join(sympy.Matrix(self.right_block))
        if product != expected:
            raise ShapeMismatch("M~ U does not equal [0 | B]")
        if abs(sympy.Matrix(self.transform).det(method="bareiss")) != 1:
            raise ShapeMismatch("transform is not unimodular")

    def source_blocks(self, source: int, dimension: int) -> tuple[sympy.Matrix, sympy.Matrix]:
        """
        Row block of U belonging to one source, split as (U_i, V_i).

        Rows ``source * dimension`` to ``(source + 1) * dimension`` of U, with U_i the first
        m - n columns (the homogeneous part) and V_i the last n columns.
        """
        m = self.columns
        if m % dimension or self.rows != dimension or not 0 <= source < m // dimension:
            raise ShapeMismatch(
                f"cannot take source {source} blocks of width {dimension} from a {self.rows} x {m} system"
            )
        block = sympy.Matrix(self.transform)[source * dimension:(source + 1) * dimension, :]
        homogeneous, particular = block[:, :m - dimension], block[:, m - dimension:]
        if homogeneous.shape != (dimension, m - dimension) or particular.shape != (dimension, dimension):
            raise ShapeMismatch("unexpected block shapes")
        return homogeneous, particular

def hermite_normal_form(matrix) -> HnfDecomposition:
    """
    Unimodular column reduction of an integer n x m matrix (m >= n, full row rank).

    Rows are processed from the bottom. In row i the pivot sits in column m - n + i; every
    entry to its left is cleared with a 2 x 2 Bezout transform, the pivot is made positive,
    and the entries to its right are reduced modulo the pivot. All arithmetic is on Python
    integers.

    Raises
    ------
    RankDeficient
        When a pivot vanishes.
    """
    original = _as_int_matrix(matrix)
    work = [list(row) for row in original]
    n, m = len(work), len(work[0])
    if m < n:
        raise RankDeficient(f"{n} x {m} matrix cannot have full row rank")
    transform = [[int(i == j) for j in range(m)] for i in range(m)]

    for i in range(n - 1, -1, -1):
        pivot = m - n + i
        for j in range(pivot):
            b = work[i][j]
            if b == 0:
                continue
            a = work[i][pivot]
            g, x, y = extended_gcd(a, b)
            coefficients = (x, y, -b // g, a // g)
            _combine_columns(work, pivot, j, coefficients)
            _combine_columns(transform, pivot, j, coefficients)
        if work[i][pivot] == 0:
            raise RankDeficient("matrix does not have full row rank")
        if work[i][pivot] < 0:
            for target in (work, transform):
                for row in target:
                    row[pivot] = -row[pivot]
        for j in range(pivot + 1, m):
            q = work[i][j] // work[i][pivot]
            if q:
                _combine_columns(work, j, pivot, (1, -q, 0, 1))
                _combine_columns(transform, j, pivot, (1, -q, 0, 1))

    decomposition = HnfDecomposition(
        tuple(tuple(row) for row in original),
        tuple(tuple(row) for row in transform),
        tuple(tuple(row[m - n:]) for row in work),
    )
    decomposition.verify()
    return decomposition


@dataclass(frozen=True)
class HnfSolution:
    """
    Solution set of sum_i a_i x_i = t over the fine lattice.

    x_i = v_i + (M U_i) w, where the integer vector w is shared by all sources.

    Attributes
    ----------
    offsets: tuple[sympy.Matrix, ...]
        Particular solutions v_i = M V_i B^-1 t (exact rationals).
    homogeneous_bases: tuple[sympy.Matrix, ...]
        Generators M U_i, each n x n(N - 1).
    integral: bool
        True when B^-1 t is integral, i.e. the offsets are fine-lattice points.
    decomposition: HnfDecomposition
        Hermite decomposition of [a_1 M | ... | a_N M].
    """
    offsets: tuple
    homogeneous_bases: tuple
    integral: bool
    decomposition: HnfDecomposition

    @property
    def free_dimension(self) -> int:
        return self.homogeneous_bases[0].shape[1]

    def sample(self, w: Sequence[int]) -> list[sympy.Matrix]:
        """Solutions x_i for one shared integer parameter vector ``w``."""
        if len(w) != self.free_dimension:
            raise ShapeMismatch(f"expected {self.free_dimension} parameters, got {len(w)}")
        if self.free_dimension == 0:
            return list(self.offsets)
        column = sympy.Matrix([int(v) for v in w])
        return [v + basis * column for v, basis in zip(self.offsets, self.homogeneous_bases)]

def hnf_solve(generator, a: Sequence[int], t) -> HnfSolution:
    """
    Solve sum_i a_i x_i = t for fine-lattice points x_i through the Hermite normal form.

    Parameters
    ----------
    generator: array-like
        Integer n x n fine generator M of full rank.
    a: Sequence[int]
        Network code vector (a_1, ..., a_N).
    t: array-like
        Fine-lattice point of length n.

    Raises
    ------
    NotInLattice
        When M^-1 t is not an integer vector.
    RankDeficient
        When M is singular.
    """
    m_matrix = sympy.Matrix(_as_int_matrix(generator))
    n = m_matrix.rows
    if m_matrix.cols != n:
        raise ShapeMismatch("fine generator must be square")
    if m_matrix.det(method="bareiss") == 0:
        raise RankDeficient("fine generator is singular")

    target = sympy.Matrix([sympy.nsimplify(v, rational=True) for v in np.asarray(t).reshape(-1).tolist()])
    if target.rows != n:
        raise ShapeMismatch(f"target has length {target.rows}, expected {n}")
    if not all(value.is_integer for value in m_matrix.LUsolve(target)):
        raise NotInLattice("target is not a point of the fine lattice")

    coefficients = [int(v) for v in a]
    stacked = sympy.Matrix.hstack(*(c * m_matrix for c in coefficients))
    decomposition = hermite_normal_form(stacked.tolist())

    particular = sympy.Matrix(decomposition.right_block).upper_triangular_solve(target)
    offsets, bases = [], []
    for source in range(len(coefficients)):
        homogeneous, selector = decomposition.source_blocks(source, n)
        offsets.append(m_matrix * selector * particular)
        bases.append(m_matrix * homogeneous)

    return HnfSolution(
        tuple(offsets),
        tuple(bases),
        all(value.is_integer for value in particular),
        decomposition,
    )
