# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from collections.abc import (
    Callable
)
from functools import (
    lru_cache
)

import numpy as np

from gaussian.decoders import (
    conventional_decode,
    exhaustive_map_decode,
    map_decode_augmented,
    map_decode_gdfe,
)
from gaussian.filters import (
    mmse_gdfe_filters
)
from gaussian.metric import (
    NoiseRatio
)
from gaussian.sum_codebook import (
    build_sum_codebook,
    SumCodebook,
)
from lattices.codes import (
    NestedLatticeCode
)
from loggers import (
    get_logger
)
from parser.config_format import (
    CodeConfig,
    SimConfig,
)
from processors.records import (
    TrialRecord
)
from selection.channel import (
    ChannelRealization
)
from utils.exceptions import (
    CFLatticeError
)
from utils.streams import (
    TrialStream
)

logging = get_logger(__name__)

@lru_cache(maxsize=16)
def shared_sum_codebook(code: CodeConfig, sources: int) -> tuple[NestedLatticeCode, SumCodebook]:
    """Code and N-fold sum codebook of a configuration, built once and shared by all workers."""
    nested = code.build()
    sum_codebook = build_sum_codebook(nested, sources)
    logging.info(
        "Built sum codebook",
        extra={
            "codewords": nested.size,
            "sources": sources,
            "support": sum_codebook.size,
            "second_moment": nested.second_moment,
        }
    )
    return nested, sum_codebook


class GaussianTrialProcessor:
    """
    Runs Monte Carlo trials of N sources over the Gaussian multiple access channel.

    Every source sends a uniform codeword of the nested code, the relay sees
    y = x_1 + ... + x_N + z and each decoder estimates the pre-modulo sum. The noise
    variance is P / rho.
    """
    def __init__(self, cfg: SimConfig):
        self.cfg = cfg
        self.code, self.sum_codebook = shared_sum_codebook(cfg.code, cfg.sources)
        self.decoders: dict[str, Callable] = {
            "conventional": lambda y, ch, beta: conventional_decode(y, self.code, self.sum_codebook, ch),
            "map-augmented": lambda y, ch, beta: map_decode_augmented(y, self.code, self.sum_codebook, beta),
            "map-gdfe": lambda y, ch, beta: map_decode_gdfe(
                y, self.code, self.sum_codebook, mmse_gdfe_filters(beta, self.code.dimension)
            ),
            "map-exhaustive": lambda y, ch, beta: exhaustive_map_decode(y, self.sum_codebook, ch.noise_variance),
        }

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
            Sent codeword indices, decisions and correctness of every configured decoder.
        """
        snr_db = self.cfg.snr_db[stream.point_index]
        rng = stream.generator()

        indices = rng.integers(0, self.code.size, size=self.cfg.sources)
        lam = self.code.codebook[indices].sum(axis=0)
        ch = ChannelRealization.from_snr_db(np.ones(self.cfg.sources), snr_db, self.code.power)
        z = rng.normal(0.0, np.sqrt(ch.noise_variance), size=self.code.dimension)
        y = lam + z

        truth = self.sum_codebook.coeffs_of(lam)
        beta = NoiseRatio.from_variances(ch.noise_variance, self.sum_codebook.model_variance)
        draws = {"indices": tuple(int(i) for i in indices), "z": tuple(float(v) for v in z)}
        decisions, correct, failures = {}, {}, {}
        for name in self.cfg.decoders:
            try:
                outcome = self.decoders[name](y, ch, beta)
                decisions[name] = tuple(int(v) for v in outcome.coeffs)
                correct[name] = decisions[name] == truth
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

def run_gaussian_trial(cfg: SimConfig, stream: TrialStream) -> TrialRecord:
    """One Gaussian-channel trial, deterministic given ``cfg`` and ``stream``."""
    return GaussianTrialProcessor(cfg).process(stream)
