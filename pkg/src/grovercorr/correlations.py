"""Correlation measures between parts of the Grover register.

Covers the two-qubit Wootters concurrence and its closed-form twin, the
purity-based concurrence of any k:(n-k) pure bipartition, entanglement of
formation, mutual information, and the measurement-optimized classical
correlation / quantum discord pair.

The classical-correlation minimization follows the convention that the
measured side B is the second (single-qubit) tensor factor.  The scan over
projective bases is driven by a precomputed 2x2-block Gram kernel of the
state, which makes the per-basis cost independent of the unmeasured side's
dimension and keeps the whole pipeline deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import GroverConfig, iteration_point
from .numerics import binary_entropy, eigh_small, shannon_entropy
from .states import (
    ReducedClosedForm,
    full_density_matrix,
    materialize,
    rank2_eigenvalues,
    reduced_closed_form,
)

DEFAULT_GRID = 256
REFINE_HALVINGS = 20

PAIR = "1:1"
ONE_REST = "1:rest"

_RANK_TOL = 1e-12
_PROB_FLOOR = 1e-14

# sigma_y (x) sigma_y is real, so the spin flip stays in real arithmetic
_SIGMA_YY = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)


@dataclass(frozen=True)
class MeasurementBasis:
    """Projective qubit basis {cos(t)|0> + e^{i p} sin(t)|1>,
    e^{-i p} sin(t)|0> - cos(t)|1>} parametrized by angles in [0, 2pi)."""

    theta: float
    phi: float

    def vectors(self) -> np.ndarray:
        """The two orthonormal directions as rows of a 2x2 complex array."""
        return _measurement_vectors(self.theta, self.phi)

    def projectors(self) -> np.ndarray:
        v = self.vectors()
        return np.einsum("ib,ic->ibc", v, v.conj())


def _measurement_vectors(theta, phi) -> np.ndarray:
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    shape = np.broadcast_shapes(theta.shape, phi.shape)
    v = np.empty(shape + (2, 2), dtype=complex)
    ct = np.cos(theta)
    st = np.sin(theta)
    phase = np.exp(1j * phi)
    v[..., 0, 0] = ct
    v[..., 0, 1] = phase * st
    v[..., 1, 0] = phase.conj() * st
    v[..., 1, 1] = -ct
    return v


def _check_dims(rho_ab, dims) -> tuple[int, int]:
    rho = np.asarray(rho_ab)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    da, db = int(dims[0]), int(dims[1])
    if da < 1 or db < 1 or da * db != rho.shape[0]:
        raise ValueError(f"dimension {rho.shape[0]} does not factor as {da} x {db}")
    return da, db


def trace_out(rho_ab, dims, keep: int) -> np.ndarray:
    """Partial trace of a bipartite density matrix, keeping factor 0 or 1."""
    da, db = _check_dims(rho_ab, dims)
    r = np.asarray(rho_ab).reshape(da, db, da, db)
    if keep == 0:
        return np.einsum("abcb->ac", r)
    if keep == 1:
        return np.einsum("abad->bd", r)
    raise ValueError(f"keep must be 0 or 1, got {keep}")


def _spectrum(rho) -> np.ndarray:
    """Decreasing eigenvalues of a Hermitian matrix; real input stays on the
    deterministic solver."""
    rho = np.asarray(rho)
    if np.iscomplexobj(rho):
        if float(np.max(np.abs(rho - rho.conj().T))) > 1e-10:
            raise ValueError("matrix is not Hermitian within tolerance")
        if float(np.max(np.abs(rho.imag))) <= 1e-12:
            return eigh_small(rho.real).eigenvalues
        return np.linalg.eigvalsh(rho)[::-1]
    return eigh_small(rho).eigenvalues


def von_neumann_entropy(rho) -> float:
    """Entropy in bits of a density matrix's spectrum."""
    return shannon_entropy(_spectrum(rho))


def mutual_information(rho_ab, dims) -> float:
    """S(rho_A) + S(rho_B) - S(rho_AB) across the given bipartition."""
    sa = von_neumann_entropy(trace_out(rho_ab, dims, 0))
    sb = von_neumann_entropy(trace_out(rho_ab, dims, 1))
    sab = von_neumann_entropy(rho_ab)
    return sa + sb - sab


def conditional_ensemble(rho_ab, basis: MeasurementBasis, dims) -> list[tuple[float, np.ndarray]]:
    """Outcome probabilities and post-measurement states of A after projecting
    the single-qubit side B onto ``basis``.

    Outcomes with probability below 1e-14 carry weight 0 and a maximally
    mixed placeholder.
    """
    da, db = _check_dims(rho_ab, dims)
    if db != 2:
        raise ValueError("the measured side must be a single qubit")
    r = np.asarray(rho_ab).reshape(da, db, da, db)
    v = basis.vectors()
    ensemble = []
    for i in range(2):
        m = np.einsum("b,abcd,d->ac", v[i].conj(), r, v[i])
        p = float(np.real(np.trace(m)))
        if p < _PROB_FLOOR:
            ensemble.append((0.0, np.eye(da) / da))
        else:
            ensemble.append((p, m / p))
    return ensemble


def _weighted_factors(rho_ab, dims) -> tuple[np.ndarray, np.ndarray]:
    """Spectral factorization rho = sum_s w_s |u_s><u_s| with the numerically
    nonzero weights kept; u_s is returned reshaped to (dA, dB)."""
    da, db = dims
    rho = np.asarray(rho_ab)
    if np.iscomplexobj(rho) and float(np.max(np.abs(rho.imag))) > 1e-12:
        w, v = np.linalg.eigh(rho)
        w, v = w[::-1], v[:, ::-1]
    else:
        w, v = eigh_small(np.real(rho))
    mask = w > _RANK_TOL
    return w[mask], v[:, mask].T.reshape(-1, da, db)


def _gram_kernel(weights: np.ndarray, factors: np.ndarray) -> np.ndarray:
    """K[s, t, b, c] = sqrt(w_s w_t) sum_x conj(u_s[x, b]) u_t[x, c].

    For any measurement direction v the unnormalized post-measurement Gram
    matrix is G[s, t] = sum_{b,c} v[b] conj(v[c]) K[s, t, b, c], whose
    eigenvalues are the nonzero spectrum of the conditional state.
    """
    z = np.sqrt(weights)[:, None, None] * factors
    return np.einsum("sxb,txc->stbc", z.conj(), z)


def _pure_marginal_kernel(rho_b: np.ndarray) -> np.ndarray:
    """Gram kernel of a globally pure state, assembled from its one-qubit
    marginal alone (K = rho_B^T); avoids touching the large side at all."""
    return np.asarray(rho_b).T.reshape(1, 1, 2, 2).astype(complex)


def _hermitian_eigenvalues(g: np.ndarray) -> np.ndarray:
    """Eigenvalues of stacked Hermitian matrices (..., R, R); R <= 2 closed form."""
    rank = g.shape[-1]
    if rank == 1:
        return g[..., 0, 0].real[..., None]
    if rank == 2:
        h00 = g[..., 0, 0].real
        h11 = g[..., 1, 1].real
        half = 0.5 * (h00 + h11)
        radius = 0.5 * np.sqrt((h00 - h11) ** 2 + 4.0 * np.abs(g[..., 0, 1]) ** 2)
        return np.stack([half + radius, half - radius], axis=-1)
    return np.linalg.eigvalsh(g)


def _xlog2(x: np.ndarray) -> np.ndarray:
    """x log2 x elementwise with 0 log 0 = 0."""
    with np.errstate(divide="ignore", invalid="ignore"):
        t = x * np.log2(x)
    return np.where(x > 0.0, t, 0.0)


def _avg_conditional_entropy(kernel: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    """sum_i p_i S(rho_{A|i}) for every measurement basis in ``vectors``.

    Uses sum_i p_i S_i = sum_i [x log2 x](p_i) - sum_{i,s} [x log2 x](lam_{i,s})
    over the unnormalized conditional spectra, and gets outcome 1's Gram matrix
    from completeness (the two projectors sum to the identity) instead of a
    second contraction.
    """
    rank = kernel.shape[0]
    kmat = kernel.reshape(rank * rank, 4)
    v0 = vectors[..., 0, :]
    # contract v[b] conj(v[c]) against K[s,t,b,c] as one matmul over (b,c)
    pairs = (v0[..., :, None] * v0[..., None, :].conj()).reshape(v0.shape[:-1] + (4,))
    g0 = (pairs @ kmat.T).reshape(v0.shape[:-1] + (rank, rank))
    g1 = (kernel[:, :, 0, 0] + kernel[:, :, 1, 1]) - g0
    lam0 = np.clip(_hermitian_eigenvalues(g0), 0.0, None)
    lam1 = np.clip(_hermitian_eigenvalues(g1), 0.0, None)
    p0 = np.sum(lam0, axis=-1)
    p1 = np.sum(lam1, axis=-1)
    return (
        _xlog2(p0)
        + _xlog2(p1)
        - np.sum(_xlog2(lam0), axis=-1)
        - np.sum(_xlog2(lam1), axis=-1)
    )


def _min_conditional_entropy(kernel: np.ndarray, grid: int, refine: bool = True) -> float:
    """Minimum average post-measurement entropy over a grid x grid lattice of
    (theta, phi) in [0, 2pi)^2, ties broken toward the smallest lattice index,
    followed by a deterministic coordinate-descent refinement pass."""
    if grid < 2:
        raise ValueError(f"grid resolution must be at least 2, got {grid}")
    step = 2.0 * math.pi / grid
    lattice = np.arange(grid) * step
    theta, phi = np.meshgrid(lattice, lattice, indexing="ij")
    values = _avg_conditional_entropy(kernel, _measurement_vectors(theta, phi))
    flat = int(np.argmin(values))  # first minimum: smallest (theta, phi) index
    i, j = divmod(flat, grid)
    best = float(values[i, j])
    if not refine:
        return best
    best_theta, best_phi = float(lattice[i]), float(lattice[j])
    move = step
    for _ in range(REFINE_HALVINGS):
        move *= 0.5
        cand_theta = np.array([best_theta + move, best_theta - move, best_theta, best_theta])
        cand_phi = np.array([best_phi, best_phi, best_phi + move, best_phi - move])
        cand = _avg_conditional_entropy(kernel, _measurement_vectors(cand_theta, cand_phi))
        pick = int(np.argmin(cand))
        if float(cand[pick]) < best:
            best = float(cand[pick])
            best_theta = float(cand_theta[pick])
            best_phi = float(cand_phi[pick])
    return best


def classical_correlation(rho_ab, dims, grid: int = DEFAULT_GRID, refine: bool = True) -> float:
    """Largest information about A extractable by projecting the one-qubit
    side B: S(rho_A) minus the grid-minimized average conditional entropy."""
    da, db = _check_dims(rho_ab, dims)
    if db != 2:
        raise ValueError("the measured side must be a single qubit")
    sa = von_neumann_entropy(trace_out(rho_ab, dims, 0))
    weights, factors = _weighted_factors(rho_ab, (da, db))
    minimum = _min_conditional_entropy(_gram_kernel(weights, factors), grid, refine)
    return sa - minimum


def quantum_discord(rho_ab, dims, grid: int = DEFAULT_GRID) -> float:
    """Mutual information minus classical correlation."""
    return mutual_information(rho_ab, dims) - classical_correlation(rho_ab, dims, grid)


def wootters_concurrence(rho) -> float:
    """Two-qubit mixed-state concurrence max{0, l1 - l2 - l3 - l4}.

    The l_i are the square roots of the eigenvalues of rho @ rho_tilde in
    decreasing order.  For the real symmetric states handled here they equal
    |eig(sqrt(rho) Y sqrt(rho))| with Y the two-qubit spin flip, which keeps
    the whole computation symmetric and avoids squaring roundoff near zero.
    """
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise ValueError(f"two-qubit state required, got shape {rho.shape}")
    if np.iscomplexobj(rho):
        if float(np.max(np.abs(rho.imag))) > 1e-12:
            raise ValueError("only real two-qubit states are supported")
        rho = rho.real
    w, v = eigh_small(rho)
    if float(w[-1]) < -1e-10:
        raise ValueError(f"state is not positive semidefinite (eigenvalue {float(w[-1])})")
    if abs(float(np.sum(w)) - 1.0) > 1e-8:
        raise ValueError(f"trace is {float(np.sum(w))}, expected 1")
    sqrt_rho = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.T
    lam = np.sort(np.abs(eigh_small(sqrt_rho @ _SIGMA_YY @ sqrt_rho).eigenvalues))[::-1]
    return max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3]))


def pairwise_concurrence_closed(config: GroverConfig, r: int) -> float:
    """Closed-form concurrence between any two qubits: 2 (a - b) |b|.

    The unmarked amplitude b changes sign once the rounded optimal iteration
    overshoots the quarter turn; taking its magnitude keeps the expression
    equal to the two-qubit Wootters value on the whole sweep window instead
    of only up to the sign change.
    """
    if config.j != 1:
        raise ValueError("the pairwise closed form assumes a single marked state")
    pt = iteration_point(config, r)
    return max(0.0, 2.0 * (pt.a - pt.b) * abs(pt.b))


def bipartite_concurrence_pure(config: GroverConfig, r: int, k: int) -> float:
    """Concurrence between any k qubits and the rest of the (pure) register,
    sqrt(d/(d-1) (1 - Tr rho_k^2)) with d = 2**k the kept side's dimension.

    Evaluated in the factored form |a - b| |b| sqrt(2 (N - 2**k)), which is
    the same bracket with the cancellations done algebraically, so the value
    stays accurate all the way down to its zeros.
    """
    if config.j != 1:
        raise ValueError("the pure-bipartition concurrence assumes a single marked state")
    if not 1 <= k <= config.n // 2:
        raise ValueError(f"kept side must satisfy 1 <= k <= n/2, got k={k} for n={config.n}")
    pt = iteration_point(config, r)
    return abs((pt.a - pt.b) * pt.b) * math.sqrt(2.0 * (config.size - 2**k))


def entanglement_of_formation(concurrence: float) -> float:
    """EOF in bits as the standard binary-entropy function of concurrence."""
    if not 0.0 <= concurrence <= 1.0:
        raise ValueError(f"concurrence must lie in [0, 1], got {concurrence}")
    return binary_entropy(0.5 * (1.0 + math.sqrt(max(0.0, 1.0 - concurrence**2))))


@dataclass(frozen=True)
class CorrelationRecord:
    """One iteration's measures for a chosen partition; fields that do not
    apply to the partition are None."""

    r: int
    partition: str
    mutual_info: float
    classical_corr: float
    discord: float
    concurrence: float | None = None
    eof: float | None = None
    c_k: float | None = None


def pair_state(config: GroverConfig, r: int) -> np.ndarray:
    """The two-qubit state used by the pairwise measures; for n = 2 that is
    the full register."""
    if config.n == 2:
        return full_density_matrix(config, r)
    return materialize(reduced_closed_form(config, r, 2))


def _rank2_entropy(form: ReducedClosedForm) -> float:
    return shannon_entropy(np.array(rank2_eigenvalues(form)))


def correlation_record(
    config: GroverConfig, r: int, partition: str, grid: int = DEFAULT_GRID
) -> CorrelationRecord:
    """Closed-form record of every measure for the given partition."""
    if config.j != 1:
        raise ValueError("correlation records assume a single marked state")
    if config.n < 2:
        raise ValueError("correlation records need at least two qubits")
    if partition == PAIR:
        rho2 = pair_state(config, r)
        conc = wootters_concurrence(rho2)
        s_one = _rank2_entropy(reduced_closed_form(config, r, 1))
        s_pair = 0.0 if config.n == 2 else _rank2_entropy(reduced_closed_form(config, r, 2))
        mi = 2.0 * s_one - s_pair
        weights, factors = _weighted_factors(rho2, (2, 2))
        cc = s_one - _min_conditional_entropy(_gram_kernel(weights, factors), grid)
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
        form_b = reduced_closed_form(config, r, 1)
        s_b = _rank2_entropy(form_b)
        s_a = _rank2_entropy(reduced_closed_form(config, r, config.n - 1))
        mi = s_a + s_b  # the global state is pure
        cc = s_a - _min_conditional_entropy(_pure_marginal_kernel(materialize(form_b)), grid)
        return CorrelationRecord(
            r=r,
            partition=ONE_REST,
            mutual_info=mi,
            classical_corr=cc,
            discord=mi - cc,
            c_k=bipartite_concurrence_pure(config, r, 1),
        )
    raise ValueError(f"unknown partition {partition!r}; expected {PAIR!r} or {ONE_REST!r}")
