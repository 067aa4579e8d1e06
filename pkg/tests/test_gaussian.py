# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import math
import unittest

import numpy as np

from scipy.special import (
    erfc
)

from gaussian import (
    build_sum_codebook,
    conventional_decode,
    exhaustive_map_decode,
    gdfe_effective_noise,
    gdfe_residual,
    map_decode_augmented,
    map_decode_gdfe,
    map_metric,
    map_metric_scan,
    mmse_gdfe_filters,
    NoiseRatio,
    pairwise_error_prob,
    simulate_pairwise_error,
    union_bound,
)
from lattices import (
    closest_point,
    Lattice,
    minimum_distance,
    NestedLatticeCode,
)
from selection import (
    ChannelRealization
)
from utils.exceptions import (
    CFLatticeError,
    DegenerateGeometry,
    EmptyCodebook,
    InvalidParameter,
    TooLarge,
    ZeroProbability,
)

LATTICE_2D = [[2.0, 3.0], [3.0, -1.0]]

def two_dim_code() -> NestedLatticeCode:
    return NestedLatticeCode.build(Lattice(LATTICE_2D), Lattice.integer(2, 11.0))

def binary_code() -> NestedLatticeCode:
    return NestedLatticeCode.build(Lattice.integer(1), Lattice.integer(1, 2.0))


class TestSumCodebook(unittest.TestCase):

    def test_binary_sum_distribution(self):
        sum_codebook = build_sum_codebook(binary_code(), 2)
        self.assertEqual(sum_codebook.coeffs, ((-2,), (-1,), (0,)))
        np.testing.assert_allclose(sum_codebook.pmf, [0.25, 0.5, 0.25])
        self.assertEqual(sum_codebook.counts, (1, 2, 1))
        self.assertAlmostEqual(sum_codebook.model_variance, 1.0)

    def test_pmf_matches_sampling(self):
        code = two_dim_code()
        sum_codebook = build_sum_codebook(code, 3)
        self.assertAlmostEqual(float(sum_codebook.pmf.sum()), 1.0)
        rng = np.random.default_rng(1)
        samples = 40_000
        indices = rng.integers(0, code.size, size=(samples, 3))
        sums = code.codebook[indices].sum(axis=1)
        origin = float(np.mean(np.all(sums == 0.0, axis=1)))
        expected = sum_codebook.probability(np.zeros(2))
        self.assertLess(abs(origin - expected), 4.0 * math.sqrt(expected * (1 - expected) / samples))

    def test_support_is_sumset(self):
        code = two_dim_code()
        sum_codebook = build_sum_codebook(code, 2)
        sums = {tuple(a + b) for a in code.codebook for b in code.codebook}
        self.assertEqual({tuple(p) for p in sum_codebook.points}, sums)
        self.assertEqual(sum_codebook.probability(np.array([110.0, 0.0])), 0.0)

    def test_model_pmf(self):
        sum_codebook = build_sum_codebook(two_dim_code(), 2)
        model = sum_codebook.model_pmf()
        self.assertAlmostEqual(float(model.sum()), 1.0)
        origin = sum_codebook.index_of(np.zeros(2))
        self.assertEqual(int(np.argmax(model)), origin)

    def test_limits(self):
        with self.assertRaises(EmptyCodebook):
            build_sum_codebook(binary_code(), 0)
        with self.assertRaises(TooLarge):
            build_sum_codebook(two_dim_code(), 3, cap=20)


class TestMetricAndFilters(unittest.TestCase):

    def test_noise_ratio(self):
        self.assertAlmostEqual(NoiseRatio.from_variances(2.0, 8.0).value, 0.5)
        self.assertEqual(NoiseRatio(0.0).value, 0.0)
        with self.assertRaises(InvalidParameter):
            NoiseRatio(-0.1)
        with self.assertRaises(CFLatticeError):
            NoiseRatio(math.inf)

    def test_filter_identities(self):
        for value in (0.1, 0.5, 0.7, 1.0, 2.0):
            gain = 1.0 + value ** 2
            for n in (2, 3, 4):
                filters = mmse_gdfe_filters(NoiseRatio(value), n)
                np.testing.assert_allclose(filters.backward.T @ filters.backward, gain * np.eye(n))
                np.testing.assert_allclose(filters.forward.T @ filters.backward, np.eye(n), atol=1e-12)
                np.testing.assert_allclose(filters.forward, filters.backward / gain)
                self.assertAlmostEqual(float(np.trace(filters.forward.T @ filters.forward)), n / gain)
        self.assertIs(mmse_gdfe_filters(NoiseRatio(0.7), 3), mmse_gdfe_filters(NoiseRatio(0.7), 3))

    def test_noiseless_filters_are_identity(self):
        filters = mmse_gdfe_filters(NoiseRatio(0.0), 2)
        np.testing.assert_allclose(filters.forward, np.eye(2))
        np.testing.assert_allclose(filters.backward, np.eye(2))
        self.assertAlmostEqual(gdfe_residual(np.array([3.0, -4.0]), filters), 0.0)

    def test_residual_identity(self):
        rng = np.random.default_rng(6)
        for _ in range(200):
            beta = NoiseRatio(float(rng.uniform(0.0, 2.0)))
            filters = mmse_gdfe_filters(beta, 2)
            y = rng.normal(scale=5.0, size=2)
            lam = rng.integers(-10, 11, size=2).astype(float)
            metric = map_metric(lam, y, beta)
            split = float(np.sum((filters.forward @ y - filters.backward @ lam) ** 2)) + gdfe_residual(y, filters)
            self.assertLess(abs(metric - split), 1e-9 * max(1.0, metric))

    def test_effective_noise(self):
        model_variance = 20.0
        rng = np.random.default_rng(12)
        for value in (0.1, 0.4, 0.5, 1.0, 2.0):
            beta = NoiseRatio(value)
            filters = mmse_gdfe_filters(beta, 2)
            mean, stderr = gdfe_effective_noise(
                filters, model_variance, value ** 2 * model_variance, rng, samples=20_000
            )
            self.assertLess(abs(mean - model_variance * value ** 2), 3.0 * stderr, value)


class TestMapDecoders(unittest.TestCase):

    def test_decoder_chain_agrees(self):
        code = two_dim_code()
        sum_codebook = build_sum_codebook(code, 2)
        rng = np.random.default_rng(7)
        for _ in range(10_000):
            snr_db = float(rng.uniform(0.0, 25.0))
            noise_variance = code.power / 10 ** (snr_db / 10)
            beta = NoiseRatio.from_variances(noise_variance, sum_codebook.model_variance)
            lam = code.codebook[rng.integers(0, code.size, size=2)].sum(axis=0)
            y = lam + rng.normal(0.0, math.sqrt(noise_variance), size=2)
            augmented = map_decode_augmented(y, code, sum_codebook, beta)
            scan = map_metric_scan(y, sum_codebook, beta)
            gdfe = map_decode_gdfe(y, code, sum_codebook, mmse_gdfe_filters(beta, 2))
            self.assertEqual(augmented.coeffs, scan.coeffs)
            self.assertEqual(gdfe.coeffs, scan.coeffs)
            self.assertIn(augmented.coeffs, sum_codebook.admissible)
            self.assertAlmostEqual(augmented.metric, scan.metric)

    def test_noiseless_limit_is_minimum_distance(self):
        code = two_dim_code()
        sum_codebook = build_sum_codebook(code, 2)
        rng = np.random.default_rng(13)
        for _ in range(100):
            y = rng.normal(scale=6.0, size=2)
            augmented = map_decode_augmented(y, code, sum_codebook, NoiseRatio(0.0))
            plain = closest_point(code.fine, y, constraint=sum_codebook.box, support=sum_codebook.admissible)
            self.assertEqual(augmented.coeffs, plain.coeffs)

    def test_exhaustive_map_prefers_likely_points(self):
        sum_codebook = build_sum_codebook(binary_code(), 2)
        self.assertEqual(exhaustive_map_decode(np.array([-0.55]), sum_codebook, 1.0).coeffs, (-1,))
        self.assertEqual(exhaustive_map_decode(np.array([0.2]), sum_codebook, 0.01).coeffs, (0,))
        with self.assertRaises(TooLarge):
            exhaustive_map_decode(np.array([0.0]), sum_codebook, 1.0, cap=2)

    def test_conventional_decoder_ignores_support(self):
        code = two_dim_code()
        sum_codebook = build_sum_codebook(code, 2)
        ch = ChannelRealization.from_snr_db(np.ones(2), 10.0, code.power)
        beta = NoiseRatio.from_variances(ch.noise_variance, sum_codebook.model_variance)
        y = np.array([40.0, 40.0])
        conventional = conventional_decode(y, code, sum_codebook, ch)
        constrained = map_decode_augmented(y, code, sum_codebook, beta)
        self.assertNotIn(conventional.coeffs, sum_codebook.admissible)
        self.assertIn(constrained.coeffs, sum_codebook.admissible)
        self.assertNotEqual(conventional.coeffs, constrained.coeffs)

        # alpha = rho N / (1 + rho N) with rho = 10 and N = 2
        scaled = 20.0 / 21.0 * y
        center = np.rint(np.linalg.solve(code.fine.generator, scaled)).astype(int)
        nearest = min(
            float(np.sum((scaled - code.fine.point(center + np.array([i, j]))) ** 2))
            for i in range(-3, 4) for j in range(-3, 4)
        )
        self.assertAlmostEqual(conventional.metric, nearest)
        self.assertIn(code.coset_index(conventional.point), range(code.size))

    def test_conventional_decoder_ignores_prior(self):
        code = binary_code()
        sum_codebook = build_sum_codebook(code, 2)
        ch = ChannelRealization.from_snr_db(np.ones(2), 0.0, code.power)
        y = np.array([-0.55])
        self.assertEqual(conventional_decode(y, code, sum_codebook, ch).coeffs, (0,))
        self.assertEqual(exhaustive_map_decode(y, sum_codebook, ch.noise_variance).coeffs, (-1,))

    def test_conventional_decoder_noiseless_recovery(self):
        code = two_dim_code()
        sum_codebook = build_sum_codebook(code, 2)
        ch = ChannelRealization.from_snr_db(np.ones(2), 60.0, code.power)
        for point, coeffs in zip(sum_codebook.points, sum_codebook.coeffs):
            self.assertEqual(conventional_decode(point, code, sum_codebook, ch).coeffs, coeffs)


class TestBounds(unittest.TestCase):

    def test_pairwise_probability_matches_simulation(self):
        sum_codebook = build_sum_codebook(two_dim_code(), 2)
        lam = sum_codebook.points[sum_codebook.index_of(np.zeros(2))]
        lam_hat = np.array([-3.0, 1.0])
        sigma = 2.0
        exact = pairwise_error_prob(lam, lam_hat, sigma, sum_codebook)
        frequency, stderr = simulate_pairwise_error(
            lam, lam_hat, sigma, sum_codebook, np.random.default_rng(3), samples=200_000
        )
        self.assertLess(abs(exact - frequency), 4.0 * stderr)

    def test_pairwise_errors(self):
        sum_codebook = build_sum_codebook(two_dim_code(), 2)
        with self.assertRaises(ZeroProbability):
            pairwise_error_prob(np.zeros(2), np.array([22.0, 0.0]), 1.0, sum_codebook)
        with self.assertRaises(DegenerateGeometry):
            pairwise_error_prob(np.zeros(2), np.zeros(2), 1.0, sum_codebook)

    def test_equal_priors_collapse(self):
        code = two_dim_code()
        sum_codebook = build_sum_codebook(code, 1)
        d_min = minimum_distance(code.fine)
        sigma = 1.3
        expected = 0.5 * (code.size - 1) * erfc(math.sqrt(d_min ** 2 / (8 * sigma ** 2)))
        self.assertAlmostEqual(union_bound(sum_codebook, d_min, sigma), expected)

    def test_bound_decreases_with_distance(self):
        sum_codebook = build_sum_codebook(two_dim_code(), 2)
        values = [union_bound(sum_codebook, d, 1.0) for d in (1.0, 2.0, 3.0, 4.0, 6.0)]
        self.assertTrue(all(a > b for a, b in zip(values, values[1:])))

    def test_bound_decreases_with_snr(self):
        code = two_dim_code()
        sum_codebook = build_sum_codebook(code, 2)
        d_min = minimum_distance(code.fine)
        values = [union_bound(sum_codebook, d_min, math.sqrt(code.power / 10 ** (s / 10))) for s in (5, 10, 15, 20)]
        self.assertTrue(all(a > b for a, b in zip(values, values[1:])))
