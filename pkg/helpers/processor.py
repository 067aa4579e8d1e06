# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import os
import time

from concurrent.futures import (
    ThreadPoolExecutor
)

from loggers import (
    get_logger
)
from parser.config_format import (
    FADING_SCENARIO,
    SimConfig,
)
from processors import (
    ErrorRateCurve,
    ErrorRatePoint,
    FadingTrialProcessor,
    GaussianTrialProcessor,
    TrialRecord,
)
from utils.exceptions import (
    ConfigError
)
from utils.statistics import (
    wilson_half_width
)
from utils.streams import (
    TrialStream
)

logging = get_logger(__name__)

THREADS_ENV = "CF_LATTICE_THREADS"

def worker_count() -> int:
    """Worker pool size: ``CF_LATTICE_THREADS`` when set, else min(8, cpu count)."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return min(8, os.cpu_count() or 1)
    try:
        value = int(raw)
    except ValueError as e:
        raise ConfigError(f"expected a positive integer, got {raw!r}", THREADS_ENV) from e
    if value < 1:
        raise ConfigError(f"expected a positive integer, got {value}", THREADS_ENV)
    return value


class SweepProcessor:
    """
    Drives a Monte Carlo sweep over the SNR grid of a configuration.

    Trials of one SNR point run in batches of ``batch_size``; a batch is split across a
    thread pool and its records are consumed in trial order. Between batches the point
    stops once every decoder has at least ``max_errors`` errors, so the trial count of a
    point is always a whole number of batches (or the trial budget) and the result does
    not depend on the number of workers.

    Attributes
    ----------
    cfg: SimConfig
        Sweep definition.
    trial_processor: FadingTrialProcessor | GaussianTrialProcessor
        Stateless per-trial runner shared by all workers.
    workers: int
        Thread pool size.
    """
    def __init__(self, cfg: SimConfig, workers: int | None = None):
        self.cfg = cfg
        if cfg.scenario == FADING_SCENARIO:
            self.trial_processor = FadingTrialProcessor(cfg)
        else:
            self.trial_processor = GaussianTrialProcessor(cfg)
        self.workers = worker_count() if workers is None else workers

    def _run_chunk(self, streams: list[TrialStream]) -> list[TrialRecord]:
        return [self.trial_processor.process(stream) for stream in streams]

    def _run_batch(self, executor: ThreadPoolExecutor, point_index: int, first: int, count: int) -> list[TrialRecord]:
        streams = [TrialStream(self.cfg.seed, point_index, first + i) for i in range(count)]
        chunk = max(1, -(-count // self.workers))
        futures = [
            executor.submit(self._run_chunk, streams[start:start + chunk])
            for start in range(0, count, chunk)
        ]
        records = []
        for future in futures:
            records.extend(future.result())
        return records

    def run_point(self, executor: ThreadPoolExecutor, point_index: int) -> dict[str, ErrorRatePoint]:
        """
        Estimate the error probability of every decoder at one SNR point.

        Parameters
        ----------
        executor: ThreadPoolExecutor
            Pool the batches are spread over.
        point_index: int
            Position in the SNR grid.

        Returns
        -------
        dict[str, ErrorRatePoint]
            One estimate per decoder.
        """
        snr_db = self.cfg.snr_db[point_index]
        errors = {name: 0 for name in self.cfg.decoders}
        failures = 0
        trials = 0

        start = time.time()
        while trials < self.cfg.trials:
            count = min(self.cfg.batch_size, self.cfg.trials - trials)
            for record in self._run_batch(executor, point_index, trials, count):
                failures += bool(record.failures)
                for name in self.cfg.decoders:
                    errors[name] += not record.correct[name]
            trials += count
            if all(value >= self.cfg.max_errors for value in errors.values()):
                break
        end = time.time()

        logging.info(
            "Time profiling for SNR point",
            extra={
                "scenario": self.cfg.scenario,
                "snr_db": snr_db,
                "trials": trials,
                "errors": errors,
                "failed_trials": failures,
                "second": f"{end - start:.2f}s"
            }
        )
        return {
            name: ErrorRatePoint(snr_db, trials, errors[name], errors[name] / trials,
                                 wilson_half_width(errors[name], trials))
            for name in self.cfg.decoders
        }

    def run(self) -> list[ErrorRateCurve]:
        """Sweep the whole SNR grid; one curve per decoder, in configuration order."""
        curves = {name: ErrorRateCurve(self.cfg.scenario, name) for name in self.cfg.decoders}
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            for point_index in range(len(self.cfg.snr_db)):
                for name, point in self.run_point(executor, point_index).items():
                    curves[name].points.append(point)
        return list(curves.values())

def sweep(cfg: SimConfig, workers: int | None = None) -> list[ErrorRateCurve]:
    return SweepProcessor(cfg, workers).run()
