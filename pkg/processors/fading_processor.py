# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from collections.abc import (
    Callable
)

import numpy as np

from diophantine.euclid import (
    solve_pair
)
from fading.approximation import (
    ida_decode
)
from fading.decoders import (
    conventional_decode_1d,
    exhaustive_ml_decode,
)
from fading.geometry import (
    LikelihoodGeometry,
    ScaledObservation,
)
from lattices.codes import (
    NestedLatticeCode
)
from loggers import (
    get_logger
)
from parser.config_format import (
    SimConfig
)
from processors.records import (
    TrialRecord
)
from selection.channel import (
    ChannelRealization,
    NetworkCodeVector,
)
from selection.rates import (
    optimal_alpha,
    optimal_coefficients,
)
from utils.exceptions import (
    CFLatticeError,
    DegenerateGeometry,
)
from utils.streams import (
    TrialStream
)

logging = get_logger(__name__)

class FadingTrialProcessor:
    """
    Runs Monte Carlo trials of two sources over a real fading channel.

    Each trial draws the fading vector (fast mode), two symbols uniform on
    [-S_m, S_m] and Gaussian noise, selects the rate-optimal code vector and MMSE scaling
    and asks every configured decoder for t = a1 x1 + a2 x2. With
    ``conventional_code_vector`` set the conventional decoder keeps that vector on every
    trial, scales with its own MMSE factor and is scored against its own combination.

    The SNR is sigma_x^2 / sigma^2 with sigma_x^2 the per-symbol energy of the
    constellation.
    """
    def __init__(self, cfg: SimConfig):
        self.cfg = cfg
        self.bound = cfg.constellation_bound
        self.energy = NestedLatticeCode.integer_constellation(self.bound).second_moment
        self.baseline = None
        if cfg.conventional_code_vector is not None:
            self.baseline = NetworkCodeVector(cfg.conventional_code_vector)
        self.decoders: dict[str, Callable] = {
            "conventional": self._conventional,
            "ida": self._ida,
            "ml": self._ml,
        }

    def _conventional(self, obs, a, geom, family, stream) -> int:
        return conventional_decode_1d(obs, a, self.bound)

    def _ml(self, obs, a, geom, family, stream) -> int:
        return exhaustive_ml_decode(obs, a, self.bound)

    def _ida(self, obs, a, geom, family, stream) -> int:
        try:
            return ida_decode(obs, geom, family)
        except DegenerateGeometry:
            logging.warning(
                "Degenerate geometry, using exhaustive ML",
                extra={
                    "stream": stream.stream_id,
                    "gamma": geom.gamma,
                }
            )
            return exhaustive_ml_decode(obs, a, self.bound)

    def _draw_fading(self, rng: np.random.Generator) -> np.ndarray:
        if self.cfg.fading_mode == "slow":
            return np.asarray(self.cfg.fading_h, dtype=float)
        return rng.standard_normal(2)

    def process(self, stream: TrialStream) -> TrialRecord:
        """
        Run one trial.

        Parameters
        ----------
        stream: TrialStream
            Stream identifier; its point index selects the SNR of the sweep.

        Returns
        -------
        TrialRecord
            Draws, decisions and correctness of every configured decoder.
        """
        snr_db = self.cfg.snr_db[stream.point_index]
        rng = stream.generator()

        h = self._draw_fading(rng)
        x = rng.integers(-self.bound, self.bound + 1, size=2)
        ch = ChannelRealization.from_snr_db(h, snr_db, self.energy)
        z = rng.normal(0.0, np.sqrt(ch.noise_variance))
        y = float(h @ x + z)

        draws = {"h": tuple(float(v) for v in h), "x": tuple(int(v) for v in x), "z": float(z)}
        decisions, correct, failures = {}, {}, {}
        try:
            a = optimal_coefficients(ch)
            alpha = optimal_alpha(ch, a)
            family = solve_pair(a[0], a[1], 0)
            obs = ScaledObservation.from_channel(y, ch, alpha)
            geom = LikelihoodGeometry.build(obs, family, self.bound)
        except CFLatticeError as e:
            logging.warning(
                "Trial setup failed",
                extra={
                    "stream": stream.stream_id,
                    "error": str(e),
                }
            )
            for name in self.cfg.decoders:
                decisions[name], correct[name], failures[name] = None, False, str(e)
            return TrialRecord(stream, snr_db, None, draws, decisions, correct, failures)

        truth = int(a[0] * x[0] + a[1] * x[1])
        draws["a"] = a.coeffs
        targets = {name: (obs, a, truth) for name in self.cfg.decoders}
        if self.baseline is not None and "conventional" in targets:
            fixed = ScaledObservation.from_channel(y, ch, optimal_alpha(ch, self.baseline))
            draws["conventional_a"] = self.baseline.coeffs
            fixed_truth = int(self.baseline[0] * x[0] + self.baseline[1] * x[1])
            targets["conventional"] = (fixed, self.baseline, fixed_truth)
        for name in self.cfg.decoders:
            target_obs, target_a, expected = targets[name]
            try:
                decisions[name] = self.decoders[name](target_obs, target_a, geom, family, stream)
                correct[name] = decisions[name] == expected
            except CFLatticeError as e:
                logging.warning(
                    "Decoder failed",
                    extra={
                        "stream": stream.stream_id,
                        "decoder": name,
                        "error": str(e),
                    }
                )
                decisions[name], correct[name], failures[name] = None, False, str(e)
        return TrialRecord(stream, snr_db, truth, draws, decisions, correct, failures)

def run_fading_trial(cfg: SimConfig, stream: TrialStream) -> TrialRecord:
    """One fading trial, deterministic given ``cfg`` and ``stream``."""
    return FadingTrialProcessor(cfg).process(stream)
