#!/usr/bin/env python3
"""Pairwise entanglement across the search, two independent ways.

The concurrence between any two qubits has the closed form 2(a-b)|b|; the
same number falls out of the Wootters eigenvalue recipe applied to the 4x4
reduced matrix.  Both are computed here over a full sweep, together with
the probability growth rate whose peak the entanglement peak tracks.
"""

import numpy as np

from grovercorr import (
    GroverConfig,
    angles,
    entanglement_of_formation,
    iteration_point,
    optimal_iterations,
    pair_state,
    pairwise_concurrence_closed,
    wootters_concurrence,
)


def main():
    cfg = GroverConfig(n=11)  # the 2048-entry database
    best = optimal_iterations(cfg)
    info = angles(cfg)
    print(f"n=11: R = {best}, rate-peak formula r1 = {info.rate_peak}, "
          f"concurrence-peak formula r2 = {info.concurrence_peak}")

    closed = np.array([pairwise_concurrence_closed(cfg, r) for r in range(best + 1)])
    eigen = np.array([wootters_concurrence(pair_state(cfg, r)) for r in range(best + 1)])
    rates = np.array([iteration_point(cfg, r).rate for r in range(best + 1)])

    print(f"max |closed - eigenvalue route| over the sweep: "
          f"{np.max(np.abs(closed - eigen)):.2e}")

    peak = int(np.argmax(closed))
    print(f"concurrence peaks at r = {peak} with C = {closed[peak]:.6f}")
    print(f"growth rate peaks at  r = {int(np.argmax(rates))}")
    print(f"C at r = 0: {closed[0]:.1e}   C at r = R: {closed[best]:.1e}")

    print("\n  r      C_closed    C_wootters   EOF          dP/dr")
    for r in range(0, best + 1, 5):
        eof = entanglement_of_formation(eigen[r])
        print(f"{r:>3}  {closed[r]:>11.7f}  {eigen[r]:>11.7f}  {eof:.9f}  {rates[r]:+.6f}")

    # Entanglement is tiny in magnitude (pairwise correlations dilute over
    # 11 qubits) yet its rise and fall brackets exactly the iterations where
    # the success probability climbs fastest.


if __name__ == "__main__":
    main()
