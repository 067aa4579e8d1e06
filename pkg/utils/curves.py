# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

from collections.abc import (
    Sequence
)

import numpy as np

from utils.exceptions import (
    InvalidParameter
)

def crossing_snr(snr_db: Sequence[float], pe: Sequence[float], target: float) -> float | None:
    """
    SNR at which an error-rate curve first drops to ``target``.

    Interpolates linearly in (SNR dB, log10 P_e) between the two sweep points that
    bracket the target. Points with zero errors are skipped.

    Returns
    -------
    float | None
        Interpolated SNR in dB, or None when the curve never crosses the target.
    """
    points = [(float(s), float(p)) for s, p in zip(snr_db, pe) if p > 0.0]
    points.sort()
    log_target = np.log10(target)
    for (s0, p0), (s1, p1) in zip(points, points[1:]):
        if p0 >= target >= p1:
            l0, l1 = np.log10(p0), np.log10(p1)
            if l0 == l1:
                return s0
            return float(s0 + (log_target - l0) * (s1 - s0) / (l1 - l0))
    return None

def horizontal_gap(reference: tuple[Sequence[float], Sequence[float]],
                   other: tuple[Sequence[float], Sequence[float]],
                   target: float) -> float | None:
    """
    Horizontal distance in dB between two curves at error rate ``target``.

    A positive gap means ``other`` needs more SNR than ``reference``.
    """
    first = crossing_snr(reference[0], reference[1], target)
    second = crossing_snr(other[0], other[1], target)
    if first is None or second is None:
        return None
    return second - first

def diversity_order(snr_db: Sequence[float], pe: Sequence[float], span_db: float = 15.0) -> float:
    """
    Least-squares diversity order over the last ``span_db`` dB of a sweep.

    P_e proportional to SNR^-d gives log10 P_e = -d * SNR_dB / 10, so the order is minus
    ten times the fitted slope of log10 P_e against SNR in dB.
    """
    snr = np.asarray(snr_db, dtype=float)
    rates = np.asarray(pe, dtype=float)
    keep = (snr >= snr.max() - span_db) & (rates > 0.0) if snr.size else snr > 0.0
    if np.count_nonzero(keep) < 2:
        raise InvalidParameter("at least two nonzero points are needed for a slope fit")
    slope, _ = np.polyfit(snr[keep], np.log10(rates[keep]), 1)
    return float(-10.0 * slope)
