# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import math
import unittest

import numpy as np

from diophantine import (
    solve_pair
)
from fading import (
    candidate_set,
    conventional_decode_1d,
    convergents,
    diophantine_candidate,
    exhaustive_ml_decode,
    ida_decode,
    ida_exhaustive,
    likelihood,
    likelihood_decode,
    likelihood_profile,
    LikelihoodGeometry,
    log_likelihood,
    ml_log_scores,
    near_ties,
    ScaledObservation,
    select_combination,
    tie_bound,
)
from gaussian import metric
from lattices import (
    enumeration,
    IntegerBox,
    NestedLatticeCode,
)
from selection import (
    ChannelRealization,
    NetworkCodeVector,
    optimal_alpha,
    optimal_coefficients,
)
from utils.exceptions import (
    DegenerateGeometry,
    NoSolution,
    TooLarge,
)

def observe(h, x, snr_db, bound, a=None, noise=0.0):
    """Scaled observation, code vector and geometry of one two-source transmission."""
    energy = NestedLatticeCode.integer_constellation(bound).second_moment
    ch = ChannelRealization.from_snr_db(h, snr_db, energy)
    a = NetworkCodeVector(a) if a is not None else optimal_coefficients(ch)
    alpha = optimal_alpha(ch, a)
    y = float(ch.h @ np.asarray(x, dtype=float)) + noise
    obs = ScaledObservation.from_channel(y, ch, alpha)
    family = solve_pair(a[0], a[1], 0)
    return obs, a, family, LikelihoodGeometry.build(obs, family, bound), alpha

def brute_force_likelihood(obs, a, bound, t):
    total = 0.0
    for x1 in range(-bound, bound + 1):
        for x2 in range(-bound, bound + 1):
            if a[0] * x1 + a[1] * x2 == t:
                residual = obs.y - obs.h[0] * x1 - obs.h[1] * x2
                total += math.exp(-residual ** 2 / (2.0 * obs.noise_variance))
    return total


class TestApproximation(unittest.TestCase):

    def test_convergents_of_pi(self):
        self.assertEqual(convergents(math.pi, 113), [(3, 1), (22, 7), (333, 106), (355, 113)])

    def test_convergents_of_rational(self):
        self.assertEqual(convergents(0.5, 10), [(0, 1), (1, 2)])

    def test_diophantine_candidate_improves_on_start(self):
        ratio, shift = math.sqrt(2.0), 0.3
        k = diophantine_candidate(ratio, shift, -50, 50)
        self.assertTrue(-50 <= k <= 50)
        start = abs(ratio * -50 - shift - round(ratio * -50 - shift))
        self.assertLessEqual(abs(ratio * k - shift - round(ratio * k - shift)), start)

    def test_select_combination_ties(self):
        self.assertEqual(select_combination({2: 1.0, -2: 1.0, 3: 2.0}), -2)
        self.assertEqual(select_combination({4: 0.5, -1: 0.5, 1: 0.5}), -1)

    def test_tie_slack_is_shared(self):
        self.assertIs(metric.TIE_SLACK, enumeration.TIE_SLACK)
        self.assertEqual(tie_bound(0.5), 0.5 + enumeration.TIE_SLACK)
        self.assertEqual(tie_bound(4.0), 4.0 + 4.0 * enumeration.TIE_SLACK)
        self.assertEqual(tie_bound(math.inf), math.inf)
        self.assertEqual(select_combination({3: 1.0, -2: 1.0 + 5e-13}), -2)
        self.assertEqual(select_combination({3: 1.0, -2: 1.0 + 1e-9}), 3)

    def test_ida_matches_bounded_scan(self):
        rng = np.random.default_rng(21)
        for bound, trials in ((5, 1000), (10, 150)):
            checked = 0
            while checked < trials:
                h = rng.standard_normal(2)
                x = rng.integers(-bound, bound + 1, size=2)
                obs, a, family, geom, _ = observe(h, x, float(rng.uniform(0.0, 40.0)), bound,
                                                  noise=float(rng.normal()))
                if family.g != 1 or geom.degenerate:
                    continue
                self.assertEqual(ida_decode(obs, geom, family), ida_exhaustive(geom, family))
                checked += 1

    def test_degenerate_geometry(self):
        obs = ScaledObservation(0.3, (0.0, 1.0), 0.1)
        family = solve_pair(1, 0, 0)
        geom = LikelihoodGeometry.build(obs, family, 5)
        self.assertTrue(geom.degenerate)
        with self.assertRaises(DegenerateGeometry):
            ida_decode(obs, geom, family)


class TestLikelihood(unittest.TestCase):

    def test_candidate_set(self):
        self.assertEqual(candidate_set(NetworkCodeVector((1, 1)), 5), IntegerBox((-10,), (10,)))
        self.assertEqual(candidate_set(NetworkCodeVector((-1, 0)), 5), IntegerBox((-5,), (5,)))

    def test_likelihood_matches_direct_sum(self):
        rng = np.random.default_rng(4)
        for _ in range(20):
            obs, a, family, geom, _ = observe(rng.standard_normal(2), (1, -2), 5.0, 5,
                                              a=(1, -1), noise=float(rng.normal()))
            for t in range(-10, 11):
                expected = brute_force_likelihood(obs, a, 5, t)
                self.assertAlmostEqual(likelihood(t, geom, obs, family, geom.constellation), expected, places=9)

    def test_log_likelihood(self):
        obs, a, family, geom, _ = observe((1.2, 0.7), (2, 3), 5.0, 5, a=(2, 1), noise=0.4)
        for t in range(-5, 6):
            value = likelihood(t, geom, obs, family, geom.constellation)
            self.assertAlmostEqual(math.exp(log_likelihood(t, geom, obs, family, geom.constellation)), value)
        self.assertEqual(log_likelihood(16, geom, obs, family, geom.constellation), -math.inf)

    def test_no_solution(self):
        obs, _, family, geom, _ = observe((1.0, 1.0), (1, 1), 10.0, 5, a=(2, 2))
        with self.assertRaises(NoSolution):
            likelihood(3, geom, obs, family, geom.constellation)
        profile = dict(likelihood_profile(geom, obs, family, geom.constellation))
        self.assertEqual(profile[3], 0.0)

    def test_ml_scores_match_direct_sum(self):
        obs, a, _, _, _ = observe((0.9, -1.4), (3, 1), 8.0, 5, a=(1, 2), noise=0.2)
        scores = ml_log_scores(obs, a, 5)
        self.assertEqual(set(scores), set(range(-15, 16)))
        for t, value in scores.items():
            self.assertAlmostEqual(value, math.log(brute_force_likelihood(obs, a, 5, t)))

    def test_ml_cap(self):
        obs, a, _, _, _ = observe((0.9, -1.4), (3, 1), 8.0, 5)
        with self.assertRaises(TooLarge):
            ml_log_scores(obs, a, 5, cap=100)

    def test_family_decoder_matches_exhaustive_ml(self):
        rng = np.random.default_rng(9)
        for _ in range(100):
            x = rng.integers(-5, 6, size=2)
            obs, a, family, geom, _ = observe(rng.standard_normal(2), x, float(rng.uniform(0.0, 30.0)), 5,
                                              noise=float(rng.normal()))
            self.assertEqual(likelihood_decode(obs, geom, family), exhaustive_ml_decode(obs, a, 5))

    def test_conventional_decoder(self):
        a = NetworkCodeVector((1, 1))
        self.assertEqual(conventional_decode_1d(ScaledObservation(2.4, (1.0, 1.0), 0.1), a, 5), 2)
        self.assertEqual(conventional_decode_1d(ScaledObservation(-2.5, (1.0, 1.0), 0.1), a, 5), -2)
        self.assertEqual(conventional_decode_1d(ScaledObservation(100.0, (1.0, 1.0), 0.1), a, 5), 10)


class TestProfiles(unittest.TestCase):

    def test_matched_scaling_profile(self):
        obs, _, family, geom, alpha = observe((-1.191, 1.189), (3, 4), 10.0, 5, a=(-1, 1))
        self.assertAlmostEqual(alpha, 0.811677, places=5)
        self.assertAlmostEqual(obs.noise_variance, 0.65882, places=4)
        profile = likelihood_profile(geom, obs, family, geom.constellation)
        self.assertEqual(max(profile, key=lambda row: row[1])[0], 1)
        self.assertEqual(near_ties(profile), [1])

    def test_high_snr_single_coordinate_profile(self):
        obs, a, family, geom, _ = observe((1.3681, -0.2359), (-5, -4), 60.0, 5, a=(-1, 0))
        profile = likelihood_profile(geom, obs, family, geom.constellation)
        self.assertEqual([t for t, _ in profile], list(range(-5, 6)))
        self.assertEqual(near_ties(profile), [5])
        phi = dict(profile)
        self.assertAlmostEqual(phi[5], 1.0, places=9)
        # t = 4 needs x = (-4, 2), off by 6 * 0.2359 - 1.3681 in the observation
        sigma2 = 10.0 / 1e6
        miss = 6 * 0.2359 - 1.3681
        self.assertAlmostEqual(math.log(phi[4]), -miss ** 2 / (2 * sigma2), places=4)
        self.assertLess(phi[4], 1e-48)

    def test_high_snr_exhaustive_scores(self):
        obs, a, _, _, _ = observe((1.3681, -0.2359), (-5, -4), 60.0, 5, a=(-1, 0))
        scores = ml_log_scores(obs, a, 5)
        self.assertEqual(sorted(scores), list(range(-5, 6)))
        self.assertNotIn(6, scores)
        self.assertAlmostEqual(scores[5], 0.0, places=9)
        self.assertAlmostEqual(scores[4], -(6 * 0.2359 - 1.3681) ** 2 / 2e-5, places=4)
        self.assertEqual(exhaustive_ml_decode(obs, a, 5), 5)

    def test_wide_constellation_noiseless_profile(self):
        obs, _, family, geom, _ = observe((1.4741, -0.2839), (-2, -4), 10.0, 10, a=(-1, 0))
        profile = likelihood_profile(geom, obs, family, geom.constellation)
        ranked = sorted(profile, key=lambda row: -row[1])
        self.assertEqual([t for t, _ in ranked[:3]], [1, 2, 0])
        self.assertAlmostEqual(ranked[0][1], 14.79, delta=0.01)
        self.assertAlmostEqual(ranked[1][1], 13.81, delta=0.01)
        self.assertAlmostEqual(ranked[2][1], 12.23, delta=0.01)
        self.assertEqual(near_ties(profile), [1])
        self.assertEqual(near_ties(profile, tolerance=0.1), [1, 2])
