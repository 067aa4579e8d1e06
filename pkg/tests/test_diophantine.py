# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import math
import unittest

import numpy as np
import sympy

from diophantine import (
    bounded_family,
    extended_gcd,
    family_k_interval,
    hermite_normal_form,
    hnf_solve,
    solve_pair,
)
from lattices import (
    IntegerBox
)
from utils.exceptions import (
    BothZero,
    NoSolution,
    NotInLattice,
    NotIntegral,
    RankDeficient,
)

LATTICE_2D = [[2, 3], [3, -1]]


class TestExtendedGcd(unittest.TestCase):

    def test_known_pairs(self):
        self.assertEqual(extended_gcd(-1, 1), (1, 0, 1))
        self.assertEqual(extended_gcd(3, 5), (1, 2, -1))
        self.assertEqual(extended_gcd(12, 18), (6, -1, 1))

    def test_zero_entries(self):
        self.assertEqual(extended_gcd(-4, 0), (4, -1, 0))
        self.assertEqual(extended_gcd(0, 7), (7, 0, 1))
        with self.assertRaises(BothZero):
            extended_gcd(0, 0)

    def test_bezout_identity_and_canonical_range(self):
        for a1 in range(-12, 13):
            for a2 in range(-12, 13):
                if a1 == 0 and a2 == 0:
                    continue
                g, u1, u2 = extended_gcd(a1, a2)
                self.assertEqual(g, math.gcd(a1, a2))
                self.assertEqual(a1 * u1 + a2 * u2, g)
                if a1 and a2:
                    period = abs(a2) // g
                    self.assertLessEqual(2 * abs(u1), period)


class TestPairFamilies(unittest.TestCase):

    def test_solutions_satisfy_equation(self):
        family = solve_pair(3, 5, 7)
        for k in range(-4, 5):
            x1, x2 = family.solution(k)
            self.assertEqual(3 * x1 + 5 * x2, 7)

    def test_no_solution(self):
        with self.assertRaises(NoSolution):
            solve_pair(2, 4, 3)
        with self.assertRaises(NoSolution):
            solve_pair(2, 4, 0).retarget(5)

    def test_bounded_family(self):
        members = bounded_family(solve_pair(1, 1, -1), IntegerBox.symmetric(2, 5))
        self.assertEqual([k for k, _, _ in members], list(range(-5, 5)))
        for _, x1, x2 in members:
            self.assertEqual(x1 + x2, -1)

    def test_interval_matches_scan(self):
        box = IntegerBox.symmetric(2, 5)
        for a1, a2 in ((1, 1), (-1, 2), (3, -2), (2, 0), (0, -1), (4, 6)):
            family = solve_pair(a1, a2, 0)
            for t in range(-25, 26):
                try:
                    shifted = family.retarget(t)
                except NoSolution:
                    continue
                expected = sorted(
                    (x1, x2) for x1, x2 in box.points() if a1 * x1 + a2 * x2 == t
                )
                found = sorted((x1, x2) for _, x1, x2 in bounded_family(shifted, box))
                self.assertEqual(found, expected)

    def test_empty_interval(self):
        self.assertIsNone(family_k_interval(solve_pair(1, 1, 20), IntegerBox.symmetric(2, 5)))


class TestHermiteNormalForm(unittest.TestCase):

    def test_random_matrices_verify(self):
        rng = np.random.default_rng(2)
        for _ in range(30):
            matrix = rng.integers(-6, 7, size=(2, 4))
            if np.linalg.matrix_rank(matrix) < 2:
                continue
            decomposition = hermite_normal_form(matrix)
            decomposition.verify()
            block = decomposition.right_block
            self.assertEqual(block[1][0], 0)
            self.assertGreater(block[0][0], 0)
            self.assertGreater(block[1][1], 0)
            self.assertTrue(0 <= block[0][1] < block[0][0])

    def test_rank_deficient(self):
        with self.assertRaises(RankDeficient):
            hermite_normal_form([[1, 2, 3], [2, 4, 6]])

    def test_not_integral(self):
        with self.assertRaises(NotIntegral):
            hermite_normal_form([[1.5, 2.0]])


class TestHnfSolve(unittest.TestCase):

    def test_two_source_reconstruction(self):
        m_matrix = sympy.Matrix(LATTICE_2D)
        t = [5, 2]
        solution = hnf_solve(LATTICE_2D, (1, 1), t)
        self.assertTrue(solution.integral)
        self.assertEqual(solution.free_dimension, 2)
        for w in ((0, 0), (1, -2), (3, 4)):
            x1, x2 = solution.sample(w)
            self.assertEqual(x1 + x2, sympy.Matrix(t))
            for x in (x1, x2):
                self.assertTrue(all(v.is_integer for v in m_matrix.LUsolve(x)))

    def test_weighted_three_sources(self):
        solution = hnf_solve(LATTICE_2D, (2, -1, 3), [2, 3])
        x1, x2, x3 = solution.sample((1, 0, -1, 2))
        self.assertEqual(2 * x1 - x2 + 3 * x3, sympy.Matrix([2, 3]))

    def test_target_outside_lattice(self):
        with self.assertRaises(NotInLattice):
            hnf_solve(LATTICE_2D, (1, 1), [1, 0])

    def test_singular_generator(self):
        with self.assertRaises(RankDeficient):
            hnf_solve([[1, 2], [2, 4]], (1, 1), [0, 0])

    def test_random_systems_reconstruct_exactly(self):
        rng = np.random.default_rng(10)
        checked = 0
        while checked < 1000:
            n, sources = int(rng.integers(1, 4)), int(rng.integers(1, 4))
            generator = rng.integers(-5, 6, size=(n, n))
            a = tuple(int(v) for v in rng.integers(-5, 6, size=sources))
            if round(abs(np.linalg.det(generator))) == 0 or not any(a):
                continue
            g = math.gcd(*a)
            t = generator @ (g * rng.integers(-3, 4, size=n))
            solution = hnf_solve(generator.tolist(), a, t.tolist())
            solution.decomposition.verify()
            self.assertTrue(solution.integral)
            m_matrix = sympy.Matrix(generator.tolist())
            for _ in range(3):
                w = rng.integers(-3, 4, size=solution.free_dimension).tolist()
                xs = solution.sample(w)
                self.assertEqual(sum((c * x for c, x in zip(a, xs)), sympy.zeros(n, 1)), sympy.Matrix(t.tolist()))
                for x in xs:
                    self.assertTrue(all(v.is_integer for v in m_matrix.LUsolve(x)))
            checked += 1

    def test_weighted_pair_on_two_dimensional_lattice(self):
        rng = np.random.default_rng(4)
        m_matrix = sympy.Matrix(LATTICE_2D)
        t = m_matrix * sympy.Matrix([1, 1])
        solution = hnf_solve(LATTICE_2D, (1, 2), list(t))
        self.assertTrue(solution.integral)
        for _ in range(100):
            x1, x2 = solution.sample(rng.integers(-20, 21, size=solution.free_dimension).tolist())
            self.assertEqual(x1 + 2 * x2, t)

    def test_one_dimensional_form_is_gcd(self):
        for a1, a2 in ((-1, 1), (3, 5), (4, 6), (0, -7), (12, -18)):
            decomposition = hermite_normal_form([[a1, a2]])
            self.assertEqual(decomposition.right_block, ((math.gcd(a1, a2),),))
            self.assertEqual(sum(a * u for a, u in zip((a1, a2), (row[0] for row in decomposition.transform))), 0)

    def test_single_source_is_identity(self):
        t = [5, 2]
        solution = hnf_solve(LATTICE_2D, (1,), t)
        self.assertEqual(solution.free_dimension, 0)
        self.assertEqual(solution.offsets[0], sympy.Matrix(t))
        self.assertEqual(solution.sample(()), [sympy.Matrix(t)])
