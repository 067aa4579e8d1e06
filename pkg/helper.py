# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import argparse
import math

import numpy as np

from diophantine import (
    solve_pair
)
from fading import (
    LikelihoodGeometry,
    likelihood_profile,
    near_ties,
    ScaledObservation,
)
from helpers import (
    sweep
)
from lattices import (
    minimum_distance,
    NestedLatticeCode,
)
from loggers import (
    get_logger
)
from parser import (
    BOUND_HEADER,
    ChannelSweepConfig,
    COEFFS_HEADER,
    CodeSweepConfig,
    curve_rows,
    CURVE_HEADER,
    FADING_SCENARIO,
    GAUSSIAN_SCENARIO,
    HISTOGRAM_HEADER,
    PROFILE_HEADER,
    ProfileConfig,
    RATE_HEADER,
    read_config_document,
    SimConfig,
)
from processors import (
    shared_sum_codebook
)
from selection import (
    ChannelRealization,
    computation_rate,
    db_to_linear,
    NetworkCodeVector,
    optimal_alpha,
    optimal_coefficients,
)
from gaussian import (
    union_bound
)
from utils import (
    ConfigError
)

logging = get_logger(__name__)

Table = tuple[tuple[str, ...], list[tuple]]

def rate_table(data: dict) -> Table:
    """alpha_opt and R_comp per SNR for the configured (or rate-optimal) code vector."""
    cfg = ChannelSweepConfig.from_dict(data)
    rows = []
    for snr_db in cfg.snr_db:
        ch = ChannelRealization.from_snr_db(cfg.h, snr_db, cfg.power)
        a = NetworkCodeVector(cfg.a) if cfg.a is not None else optimal_coefficients(ch)
        alpha = optimal_alpha(ch, a)
        rows.append((snr_db, alpha, computation_rate(ch, a, alpha)))
    return RATE_HEADER, rows

def coeffs_table(data: dict) -> Table:
    """Rate-optimal code vector, its scaling and rate per SNR."""
    cfg = ChannelSweepConfig.from_dict(data)
    rows = []
    for snr_db in cfg.snr_db:
        ch = ChannelRealization.from_snr_db(cfg.h, snr_db, cfg.power)
        a = optimal_coefficients(ch)
        alpha = optimal_alpha(ch, a)
        rows.append((snr_db, a.coeffs, alpha, computation_rate(ch, a, alpha)))
    return COEFFS_HEADER, rows

def profile_table(data: dict, seed: int | None = None) -> Table:
    """
    Likelihood phi(t) over the candidate set for one two-source observation.

    The noise sample is the configured ``noise``; otherwise it is drawn from a seeded
    generator when a seed is given, and zero when none is.
    """
    cfg = ProfileConfig.from_dict(data)
    energy = NestedLatticeCode.integer_constellation(cfg.constellation_bound).second_moment
    ch = ChannelRealization.from_snr_db(cfg.h, cfg.snr_db, energy)
    a = NetworkCodeVector(cfg.a) if cfg.a is not None else optimal_coefficients(ch)
    alpha = optimal_alpha(ch, a)

    seed = cfg.seed if seed is None else seed
    if cfg.noise is not None:
        z = cfg.noise
    elif seed is not None:
        z = float(np.random.default_rng(seed).normal(0.0, math.sqrt(ch.noise_variance)))
    else:
        z = 0.0
    y = float(ch.h @ np.asarray(cfg.x, dtype=float)) + z

    obs = ScaledObservation.from_channel(y, ch, alpha)
    family = solve_pair(a[0], a[1], 0)
    geom = LikelihoodGeometry.build(obs, family, cfg.constellation_bound)
    profile = likelihood_profile(geom, obs, family, geom.constellation)

    logging.info(
        "Likelihood profile",
        extra={
            "a": a.coeffs,
            "alpha": alpha,
            "noise": z,
            "transmitted": a[0] * cfg.x[0] + a[1] * cfg.x[1],
            "near_ties": near_ties(profile),
        }
    )
    return PROFILE_HEADER, profile

def bound_table(data: dict) -> Table:
    """Union bound of the MAP decoder per SNR, with sigma^2 = P / rho."""
    cfg = CodeSweepConfig.from_dict(data)
    code, sum_codebook = shared_sum_codebook(cfg.code, cfg.sources)
    d_min = minimum_distance(code.fine)
    rows = []
    for snr_db in cfg.snr_db:
        sigma2 = code.power / db_to_linear(snr_db)
        rows.append((snr_db, sigma2, union_bound(sum_codebook, d_min, math.sqrt(sigma2))))
    return BOUND_HEADER, rows

def histogram_table(data: dict) -> Table:
    """Exact N-fold sum distribution next to its discrete Gaussian model."""
    cfg = CodeSweepConfig.from_dict(data, require_snr=False)
    _, sum_codebook = shared_sum_codebook(cfg.code, cfg.sources)
    model = sum_codebook.model_pmf()
    rows = [
        (coeffs, sum_codebook.points[i], sum_codebook.pmf[i], model[i])
        for i, coeffs in enumerate(sum_codebook.coeffs)
    ]
    return HISTOGRAM_HEADER, rows

def simulation_table(data: dict, scenario: str, seed: int | None = None) -> tuple[Table, SimConfig]:
    """Run the Monte Carlo sweep a configuration describes."""
    cfg = SimConfig.from_dict(data).with_overrides(seed=seed)
    if cfg.scenario != scenario:
        raise ConfigError(f"expected {scenario!r} for this subcommand, got {cfg.scenario!r}", "scenario")
    curves = sweep(cfg)
    return (CURVE_HEADER, curve_rows(curves)), cfg

def build_table(args: argparse.Namespace) -> tuple[Table, str | None]:
    """
    Load the configuration and compute the table of a subcommand.

    Parameters
    ----------
    args: argparse.Namespace
        Parsed command line.

    Returns
    -------
    tuple[Table, str | None]
        Header and rows, and the output path (``--out`` first, then the configured one).
    """
    data = read_config_document(args.config)
    output = data.get("output") if isinstance(data.get("output"), str) else None

    if args.command == "rate":
        table = rate_table(data)
    elif args.command == "coeffs":
        table = coeffs_table(data)
    elif args.command == "likelihood-profile":
        table = profile_table(data, args.seed)
    elif args.command == "bound":
        table = bound_table(data)
    elif args.command == "histogram":
        table = histogram_table(data)
    elif args.command == "sim-fading":
        table, _ = simulation_table(data, FADING_SCENARIO, args.seed)
    elif args.command == "sim-gaussian":
        table, _ = simulation_table(data, GAUSSIAN_SCENARIO, args.seed)
    else:
        raise ConfigError(f"unknown subcommand {args.command!r}")

    return table, args.out if args.out is not None else output
