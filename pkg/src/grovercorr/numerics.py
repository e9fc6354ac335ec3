"""Symmetric eigendecomposition and entropy primitives.

Small matrices go through a fixed-order cyclic Jacobi sweep so that repeated
runs on one platform are bit-identical; larger matrices (only reached by the
brute-force verification path) fall back to LAPACK.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

EIGH_DIM_LIMIT = 4096
_JACOBI_DIM_LIMIT = 32
_SYMMETRY_TOL = 1e-12


class EighResult(NamedTuple):
    eigenvalues: np.ndarray  # decreasing
    eigenvectors: np.ndarray  # orthonormal columns, same order


def eigh_small(matrix) -> EighResult:
    """Full spectrum of a real symmetric matrix, eigenvalues decreasing."""
    a = np.asarray(matrix)
    if np.iscomplexobj(a):
        raise ValueError("eigh_small expects a real symmetric matrix")
    a = a.astype(float, copy=False)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    dim = a.shape[0]
    if dim > EIGH_DIM_LIMIT:
        raise ValueError(f"dimension {dim} exceeds the supported limit {EIGH_DIM_LIMIT}")
    if dim > 1 and float(np.max(np.abs(a - a.T))) > _SYMMETRY_TOL:
        raise ValueError("matrix is not symmetric within 1e-12")
    if dim <= _JACOBI_DIM_LIMIT:
        w, v = _jacobi_eigh(a)
    else:
        w, v = np.linalg.eigh(a)
    order = np.argsort(-w, kind="stable")
    return EighResult(w[order], v[:, order])


def _jacobi_eigh(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi rotations in a fixed (p, q) order; deterministic."""
    a = matrix.copy()
    n = a.shape[0]
    v = np.eye(n)
    if n < 2:
        return np.diag(a).copy(), v
    scale = max(float(np.max(np.abs(a))), 1e-300)
    skip = 1e-18 * scale
    for _ in range(60):
        off = float(np.max(np.abs(a - np.diag(np.diag(a)))))
        if off <= 1e-15 * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(tau, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # A <- J^T A J with J the (p, q) plane rotation [[c, s], [-s, c]]
                col_p = c * a[:, p] - s * a[:, q]
                col_q = s * a[:, p] + c * a[:, q]
                a[:, p], a[:, q] = col_p, col_q
                row_p = c * a[p, :] - s * a[q, :]
                row_q = s * a[p, :] + c * a[q, :]
                a[p, :], a[q, :] = row_p, row_q
                a[p, q] = a[q, p] = 0.0
                vec_p = c * v[:, p] - s * v[:, q]
                vec_q = s * v[:, p] + c * v[:, q]
                v[:, p], v[:, q] = vec_p, vec_q
    return np.diag(a).copy(), v


def shannon_entropy(p) -> float:
    """Entropy in bits of a probability vector; zero entries contribute nothing.

    Entries in [-1e-10, 0) are treated as roundoff and clamped; anything more
    negative, or a total off 1 by more than 1e-8, is rejected.
    """
    p = np.asarray(p, dtype=float).ravel()
    if p.size == 0:
        raise ValueError("empty probability vector")
    if float(np.min(p)) < -1e-10:
        raise ValueError(f"probability below tolerance: {float(np.min(p))}")
    total = float(np.sum(p))
    if abs(total - 1.0) > 1e-8:
        raise ValueError(f"probabilities sum to {total}, expected 1")
    q = p[p > 0.0]
    if q.size == 0:
        return 0.0
    return float(-np.sum(q * np.log2(q)))


def binary_entropy(x: float) -> float:
    """h(x) = -x log2 x - (1-x) log2(1-x) for x in [0, 1]."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"binary_entropy requires x in [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return float(-x * np.log2(x) - (1.0 - x) * np.log2(1.0 - x))
