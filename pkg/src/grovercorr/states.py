"""Density matrices of the Grover register.

The global state after any number of iterations is a two-term superposition,
so the full matrix has a three-value pattern (target diagonal, target
row/column, everything else) and every reduced state of k qubits keeps that
pattern with the bulk aggregated, giving rank at most 2.  All matrices are
real symmetric because the two amplitudes are real.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import CapacityError, GroverConfig, iteration_point
from .numerics import EIGH_DIM_LIMIT

DENSE_QUBIT_LIMIT = 14

_PURITY_SLACK = 1e-9


def check_density_matrix(rho, *, trace_tol: float = 1e-10, psd_tol: float = 1e-10) -> None:
    """Validate symmetry/Hermiticity, unit trace and positive semidefiniteness."""
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    if float(np.max(np.abs(rho - rho.conj().T))) > trace_tol:
        raise ValueError("density matrix is not Hermitian within tolerance")
    trace = complex(np.trace(rho)).real
    if abs(trace - 1.0) > trace_tol:
        raise ValueError(f"trace is {trace}, expected 1")
    smallest = float(np.min(np.linalg.eigvalsh(rho)))
    if smallest < -psd_tol:
        raise ValueError(f"smallest eigenvalue {smallest} below -{psd_tol}")


def full_density_matrix(config: GroverConfig, r: int) -> np.ndarray:
    """Dense 2**n x 2**n pure-state matrix after ``r`` iterations."""
    if config.j != 1:
        raise ValueError("the dense construction is defined for a single marked state")
    if config.n > DENSE_QUBIT_LIMIT:
        raise CapacityError(
            f"n={config.n} exceeds the dense limit of {DENSE_QUBIT_LIMIT} qubits"
        )
    pt = iteration_point(config, r)
    rho = np.full((config.size, config.size), pt.b * pt.b)
    t = config.target
    rho[t, :] = pt.a * pt.b
    rho[:, t] = pt.a * pt.b
    rho[t, t] = pt.a * pt.a
    return rho


@dataclass(frozen=True)
class ReducedClosedForm:
    """The three distinct entry values of the k-qubit reduced state (target
    relabeled to index 0): top-left diagonal, first row/column, and bulk."""

    k: int
    diag0: float
    offdiag0: float
    bulk: float

    @property
    def dim(self) -> int:
        return 2**self.k

    def purity(self) -> float:
        """Tr(rho^2) assembled from the three entry values."""
        m = self.dim
        return (
            self.diag0**2
            + 2.0 * (m - 1) * self.offdiag0**2
            + float(m - 1) ** 2 * self.bulk**2
        )


def reduced_closed_form(config: GroverConfig, r: int, k: int) -> ReducedClosedForm:
    """Closed-form reduced state of any ``k`` qubits (all choices coincide)."""
    if config.j != 1:
        raise ValueError("reduced closed forms are defined for a single marked state")
    if not 1 <= k <= config.n - 1:
        raise ValueError(f"kept-qubit count must lie in [1, n-1], got k={k} for n={config.n}")
    pt = iteration_point(config, r)
    block = config.size / 2**k  # unmarked basis states aggregated into each entry
    b2 = pt.b * pt.b
    return ReducedClosedForm(
        k=k,
        diag0=pt.a * pt.a + (block - 1.0) * b2,
        offdiag0=pt.a * pt.b + (block - 1.0) * b2,
        bulk=block * b2,
    )


def materialize(form: ReducedClosedForm) -> np.ndarray:
    """Dense matrix with ``diag0`` at [0, 0], ``offdiag0`` on row/column 0 and
    ``bulk`` everywhere else."""
    m = form.dim
    rho = np.full((m, m), form.bulk)
    rho[0, :] = form.offdiag0
    rho[:, 0] = form.offdiag0
    rho[0, 0] = form.diag0
    return rho


def rank2_eigenvalues(form: ReducedClosedForm) -> tuple[float, float]:
    """The two possibly-nonzero eigenvalues, from unit trace and closed-form
    purity alone (no diagonalization); the rest of the spectrum is exactly 0.
    """
    purity = form.purity()
    low = 1.0 / form.dim - _PURITY_SLACK
    if not low <= purity <= 1.0 + _PURITY_SLACK:
        raise ValueError(f"purity {purity} outside the physical range for dim {form.dim}")
    disc = 2.0 * purity - 1.0
    if disc < -1e-12:
        raise ValueError("entry values are inconsistent with a rank-2 state")
    s = min(math.sqrt(max(disc, 0.0)), 1.0)  # purity above 1 is roundoff
    return (1.0 + s) / 2.0, (1.0 - s) / 2.0


def rank2_spectrum(form: ReducedClosedForm) -> np.ndarray:
    """Full spectrum in decreasing order; dense output, so capped in size."""
    if form.dim > EIGH_DIM_LIMIT:
        raise CapacityError(
            f"spectrum of dimension {form.dim} would be dense; use rank2_eigenvalues"
        )
    lam_plus, lam_minus = rank2_eigenvalues(form)
    spectrum = np.zeros(form.dim)
    spectrum[0] = lam_plus
    spectrum[1] = lam_minus
    return spectrum


def relabel_to_zero(rho: np.ndarray, bits: int) -> np.ndarray:
    """Permute basis labels by XOR with ``bits`` (a local bit flip per qubit),
    moving a nonzero target substring to index 0."""
    dim = rho.shape[0]
    if not 0 <= bits < dim:
        raise ValueError(f"bit pattern {bits} outside [0, {dim})")
    perm = np.arange(dim) ^ bits
    return rho[np.ix_(perm, perm)]
