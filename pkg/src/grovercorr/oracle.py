"""Brute-force statevector simulation of Grover search.

Nothing in this module uses the closed forms: states are built by applying
the oracle sign flip and the reflection about the uniform superposition
amplitude by amplitude, reduced states by explicit partial traces, and
spectra by dense eigendecomposition.  It exists to validate everything else.
"""

from __future__ import annotations

import math

import numpy as np

from .core import CapacityError, GroverConfig
from .correlations import (
    ONE_REST,
    PAIR,
    CorrelationRecord,
    _gram_kernel,
    _min_conditional_entropy,
    entanglement_of_formation,
    trace_out,
    wootters_concurrence,
)
from .numerics import shannon_entropy

SIM_QUBIT_LIMIT = 14
RECORD_QUBIT_LIMIT = 12

_RANK_TOL = 1e-12


def init_uniform(n: int) -> np.ndarray:
    """Uniform superposition over all 2**n basis states."""
    if not 1 <= n <= SIM_QUBIT_LIMIT:
        raise CapacityError(f"statevector simulation supports 1..{SIM_QUBIT_LIMIT} qubits")
    size = 2**n
    return np.full(size, 1.0 / math.sqrt(size))


def grover_step(state: np.ndarray, target: int) -> np.ndarray:
    """One iteration: flip the target's sign, then reflect every amplitude
    about the mean (the reflection about the uniform superposition)."""
    amps = np.array(state, dtype=float)
    if not 0 <= target < amps.size:
        raise ValueError(f"target index {target} outside [0, {amps.size})")
    amps[target] = -amps[target]
    return 2.0 * amps.mean() - amps


def evolve(config: GroverConfig, r: int) -> np.ndarray:
    """State after ``r`` iterations from the uniform superposition."""
    if config.j != 1:
        raise ValueError("the simulator searches for a single marked state")
    if r < 0:
        raise ValueError(f"iteration count must be nonnegative, got {r}")
    state = init_uniform(config.n)
    for _ in range(r):
        state = grover_step(state, config.target)
    return state


def partial_trace(state: np.ndarray, keep) -> np.ndarray:
    """Reduced density matrix of the kept qubits (qubit 0 is the most
    significant bit of the basis index)."""
    amps = np.asarray(state)
    n = int(round(math.log2(amps.size)))
    if 2**n != amps.size:
        raise ValueError(f"amplitude count {amps.size} is not a power of two")
    keep = list(keep)
    if len(set(keep)) != len(keep):
        raise ValueError("kept qubits must be distinct")
    if any(q < 0 or q >= n for q in keep):
        raise ValueError(f"kept qubits must lie in [0, {n})")
    if not 0 < len(keep) < n:
        raise ValueError("kept qubits must be a nonempty proper subset")
    rest = [q for q in range(n) if q not in keep]
    psi = amps.reshape([2] * n).transpose(keep + rest).reshape(2 ** len(keep), -1)
    return psi @ psi.conj().T


def _dense_entropy(rho: np.ndarray) -> float:
    return shannon_entropy(np.clip(np.linalg.eigvalsh(rho), 0.0, None))


def brute_force_record(
    config: GroverConfig, r: int, partition: str, grid: int = 256
) -> CorrelationRecord:
    """Correlation record computed purely from the simulated statevector."""
    if config.n > RECORD_QUBIT_LIMIT:
        raise CapacityError(
            f"brute-force records support at most {RECORD_QUBIT_LIMIT} qubits"
        )
    if config.n < 2:
        raise ValueError("correlation records need at least two qubits")
    state = evolve(config, r)
    n = config.n
    if partition == PAIR:
        rho2 = np.outer(state, state) if n == 2 else partial_trace(state, [0, 1])
        conc = wootters_concurrence(rho2)
        s_a = _dense_entropy(trace_out(rho2, (2, 2), 0))
        s_b = _dense_entropy(trace_out(rho2, (2, 2), 1))
        s_ab = _dense_entropy(rho2)
        mi = s_a + s_b - s_ab
        weights, factors = _dense_factors(rho2, (2, 2))
        cc = s_a - _min_conditional_entropy(_gram_kernel(weights, factors), grid)
        return CorrelationRecord(
            r=r,
            partition=PAIR,
            mutual_info=mi,
            classical_corr=cc,
            discord=mi - cc,
            concurrence=conc,
            eof=entanglement_of_formation(conc),
        )
    if partition == ONE_REST:
        dims = (2 ** (n - 1), 2)
        rho_ab = np.outer(state, state)
        rho_a = partial_trace(state, list(range(n - 1)))
        rho_b = partial_trace(state, [n - 1])
        s_a = _dense_entropy(rho_a)
        s_b = _dense_entropy(rho_b)
        s_ab = _dense_entropy(rho_ab)
        mi = s_a + s_b - s_ab
        weights, factors = _dense_factors(rho_ab, dims)
        cc = s_a - _min_conditional_entropy(_gram_kernel(weights, factors), grid)
        # 2 sigma0 sigma1 equals sqrt(2 (1 - Tr rho_B^2)) for a normalized
        # state but has no cancellation when the split is nearly product
        sigma = np.linalg.svd(state.reshape(-1, 2), compute_uv=False)
        c_one = 2.0 * float(sigma[0] * sigma[1])
        return CorrelationRecord(
            r=r,
            partition=ONE_REST,
            mutual_info=mi,
            classical_corr=cc,
            discord=mi - cc,
            c_k=c_one,
        )
    raise ValueError(f"unknown partition {partition!r}; expected {PAIR!r} or {ONE_REST!r}")


def _dense_factors(rho: np.ndarray, dims) -> tuple[np.ndarray, np.ndarray]:
    w, v = np.linalg.eigh(rho)
    w, v = w[::-1], v[:, ::-1]
    mask = w > _RANK_TOL
    return w[mask], v[:, mask].T.reshape(-1, *dims)
