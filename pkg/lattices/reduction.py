# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import numpy as np

LLL_DELTA = 0.75

def _gram_schmidt(basis: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Unnormalized Gram-Schmidt of the columns; returns (orthogonal columns, mu)."""
    n = basis.shape[1]
    ortho = np.zeros_like(basis)
    mu = np.eye(n)
    for i in range(n):
        ortho[:, i] = basis[:, i]
        for j in range(i):
            mu[i, j] = basis[:, i] @ ortho[:, j] / (ortho[:, j] @ ortho[:, j])
            ortho[:, i] -= mu[i, j] * ortho[:, j]
    return ortho, mu

def lll_reduce(generator: np.ndarray, delta: float = LLL_DELTA) -> tuple[np.ndarray, np.ndarray]:
    """
    LLL-reduce the columns of a generator matrix.

    Parameters
    ----------
    generator: np.ndarray
        Real m x n generator with linearly independent columns.
    delta: float
        Lovasz parameter in (1/4, 1).

    Returns
    -------
    tuple[np.ndarray, np.ndarray]
        Reduced generator ``generator @ transform`` and the unimodular integer transform.
    """
    basis = np.array(generator, dtype=float)
    n = basis.shape[1]
    transform = np.eye(n, dtype=np.int64)
    ortho, mu = _gram_schmidt(basis)

    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = int(np.floor(mu[k, j] + 0.5))
            if q:
                basis[:, k] -= q * basis[:, j]
                transform[:, k] -= q * transform[:, j]
                ortho, mu = _gram_schmidt(basis)

        lhs = ortho[:, k] @ ortho[:, k]
        rhs = (delta - mu[k, k - 1] ** 2) * (ortho[:, k - 1] @ ortho[:, k - 1])
        if lhs >= rhs:
            k += 1
        else:
            basis[:, [k - 1, k]] = basis[:, [k, k - 1]]
            transform[:, [k - 1, k]] = transform[:, [k, k - 1]]
            ortho, mu = _gram_schmidt(basis)
            k = max(k - 1, 1)

    # recompute from the integer transform to drop accumulated rounding
    return np.asarray(generator, dtype=float) @ transform, transform
