# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import csv
import sys

from collections.abc import (
    Iterable
)
from typing import (
    Any
)

from loggers import (
    get_logger
)
from processors.records import (
    ErrorRateCurve
)

logging = get_logger(__name__)

RATE_HEADER = ("snr_db", "alpha", "rate")
COEFFS_HEADER = ("snr_db", "a", "alpha", "rate")
PROFILE_HEADER = ("t", "phi")
BOUND_HEADER = ("snr_db", "sigma2", "union_bound")
HISTOGRAM_HEADER = ("coeffs", "point", "probability", "model_probability")
CURVE_HEADER = ("scenario", "decoder", "snr_db", "trials", "errors", "pe", "ci95_half")

def format_value(value: Any) -> str:
    """Render one cell: floats with ten significant digits, sequences space separated."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (tuple, list)):
        return " ".join(format_value(v) for v in value)
    if hasattr(value, "tolist"):
        return format_value(value.tolist())
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value)

def curve_rows(curves: Iterable[ErrorRateCurve]) -> list[tuple]:
    """One row per (decoder, SNR point), decoders in configuration order."""
    rows = []
    for curve in curves:
        for point in curve.points:
            rows.append((
                curve.scenario, curve.decoder, point.snr_db, point.trials,
                point.errors, point.pe, point.ci95_half,
            ))
    return rows

def write_table(header: Iterable[str], rows: Iterable[Iterable[Any]], path: str | None = None) -> None:
    """
    Write a CSV table to ``path``, or to standard output when no path is given.

    Parameters
    ----------
    header: Iterable[str]
        Column names.
    rows: Iterable[Iterable[Any]]
        Table body; cells go through :func:`format_value`.
    path: str | None
        Destination file.
    """
    def emit(stream) -> int:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(list(header))
        count = 0
        for row in rows:
            writer.writerow([format_value(v) for v in row])
            count += 1
        return count

    if path is None:
        emit(sys.stdout)
        sys.stdout.flush()
        return

    with open(path, "w", encoding="utf-8", newline="") as f:
        count = emit(f)
    logging.info(
        "Wrote table",
        extra={
            "file_path": path,
            "rows": count,
        }
    )
