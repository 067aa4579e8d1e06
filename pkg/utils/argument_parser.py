# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import argparse

SUBCOMMANDS = {
    "rate": "Tabulate the computation rate against SNR",
    "coeffs": "Tabulate optimal network code vectors and scaling factors",
    "likelihood-profile": "Emit the likelihood function over the candidate set",
    "bound": "Emit the MAP union bound against SNR",
    "histogram": "Emit the sum-codebook distribution next to its Gaussian model",
    "sim-fading": "Simulate the 1-D fading compute-and-forward decoders",
    "sim-gaussian": "Simulate the Gaussian-MAC MAP decoders",
}

def _seed(value: str) -> int:
    seed = int(value, 0)
    if not 0 <= seed < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return seed

def parse_arguments(argv: list[str] | None = None) -> argparse.Namespace:
    """Parse command-line arguments."""

    parser = argparse.ArgumentParser(
        prog="cf-lattice",
        description="Compute-and-forward lattice decoding toolkit"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name, help_text in SUBCOMMANDS.items():
        subparser = subparsers.add_parser(name, help=help_text, description=help_text)
        subparser.add_argument(
            "--config", "-c", required=True, help="Path to the JSON configuration document"
        )
        subparser.add_argument(
            "--seed", type=_seed, default=None, help="Override the configured RNG seed"
        )
        subparser.add_argument(
            "--out", "-o", default=None, help="Path to the output CSV file (stdout if omitted)"
        )

    return parser.parse_args(argv)
