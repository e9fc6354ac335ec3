"""Acceptance suite: every criterion at its stated tolerance.

Each test prints one machine-greppable pass/fail line; run with
``pytest tests/test_acceptance.py -v -s`` to see them.
"""

import time

import numpy as np
import pytest

from grovercorr import (
    GroverConfig,
    ONE_REST,
    PAIR,
    bipartite_concurrence_pure,
    grover_step,
    init_uniform,
    iteration_point,
    materialize,
    optimal_iterations,
    pair_state,
    pairwise_concurrence_closed,
    partial_trace,
    peak_iterations,
    rank2_eigenvalues,
    reduced_closed_form,
    shannon_entropy,
    classical_correlation,
    correlation_record,
    wootters_concurrence,
)
from grovercorr.cli import main

from refvalues import ref_kpart_concurrence_verbatim


def _report(number, ok, detail):
    print(f"criterion {number} {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, detail


def test_criterion_1_oracle_equivalence():
    """Closed-form reduced matrices equal brute-force partial traces."""
    started = time.monotonic()
    worst = 0.0
    for n in range(3, 11):
        cfg = GroverConfig(n=n)
        rmax = 2 * optimal_iterations(cfg)
        state = init_uniform(n)
        for r in range(rmax + 1):
            if r > 0:
                state = grover_step(state, cfg.target)
            for k in (1, 2, 3):
                if k >= n:  # a reduced state needs a nonempty traced-out side
                    continue
                closed = materialize(reduced_closed_form(cfg, r, k))
                brute = partial_trace(state, list(range(k)))
                worst = max(worst, float(np.max(np.abs(closed - brute))))
    elapsed = time.monotonic() - started
    _report(
        1,
        worst < 1e-10 and elapsed < 60.0,
        f"n in [3,10], r in [0,2R], k in 1..3: max matrix deviation {worst:.3e} "
        f"(tol 1e-10) in {elapsed:.1f} s (limit 60 s)",
    )


def test_criterion_2_closed_pairwise_matches_wootters():
    """Closed-form pairwise concurrence equals the eigenvalue route."""
    worst = 0.0
    for n in range(3, 13):
        cfg = GroverConfig(n=n)
        for r in range(optimal_iterations(cfg) + 1):
            closed = pairwise_concurrence_closed(cfg, r)
            eigen = wootters_concurrence(pair_state(cfg, r))
            worst = max(worst, abs(closed - eigen))
    _report(
        2,
        worst < 1e-9,
        f"n in [3,12], r in [0,R]: max |closed - wootters| = {worst:.3e} (tol 1e-9)",
    )


def test_criterion_3_purity_bracket_routes_agree():
    """Factored k-partition concurrence equals the verbatim purity bracket
    (evaluated at 50 digits), and the four k-curves peak together."""
    cfg = GroverConfig(n=8)
    best = optimal_iterations(cfg)
    worst = 0.0
    peaks = []
    for k in (1, 2, 3, 4):
        series = []
        for r in range(2 * best + 1):
            mine = bipartite_concurrence_pure(cfg, r, k)
            verbatim = float(ref_kpart_concurrence_verbatim(8, r, k))
            worst = max(worst, abs(mine - verbatim))
            series.append(mine)
        peaks.append(int(np.argmax(series[: best + 1])))
    spread = max(peaks) - min(peaks)
    _report(
        3,
        worst < 1e-10 and spread <= 1,
        f"n=8, k in 1..4, r in [0,2R]: max route deviation {worst:.3e} (tol 1e-10); "
        f"k-peak iterations {peaks} spread {spread} (limit 1)",
    )


def test_criterion_4_exact_small_and_large_case():
    cfg2 = GroverConfig(n=2)
    cfg11 = GroverConfig(n=11)
    best2 = optimal_iterations(cfg2)
    best11 = optimal_iterations(cfg11)
    p2 = iteration_point(cfg2, best2).p
    p11 = iteration_point(cfg11, best11).p
    _report(
        4,
        best2 == 1 and abs(p2 - 1.0) < 1e-12 and best11 == 35 and p11 >= 0.999,
        f"n=2: R={best2}, P(R)={p2:.15f}; n=11: R={best11}, P(R)={p11:.7f}",
    )


def test_criterion_5_pairwise_concurrence_curve():
    """Pairwise concurrence at n=11: zero start, peak near 17/18, zero end."""
    started = time.monotonic()
    cfg = GroverConfig(n=11)
    best = optimal_iterations(cfg)
    series = [pairwise_concurrence_closed(cfg, r) for r in range(best + 1)]
    elapsed = time.monotonic() - started
    peak = int(np.argmax(series))
    ok = (
        series[0] <= 1e-9
        and peak in (17, 18)
        and abs(series[peak] - 0.0216) <= 0.0005
        and series[best] < 1e-2
        and elapsed < 5.0
    )
    _report(
        5,
        ok,
        f"n=11: C(0)={series[0]:.1e}, peak at r={peak} value {series[peak]:.6f} "
        f"(0.0216±0.0005), C(35)={series[best]:.1e} (<1e-2), {elapsed:.2f} s (limit 5 s)",
    )


def test_criterion_6_pure_split_identities():
    """One-vs-rest measures collapse onto the marginal entropy (n=8, grid 256)."""
    cfg = GroverConfig(n=8)
    worst_mi = worst_cc = worst_qd = 0.0
    for r in range(2 * optimal_iterations(cfg) + 1):
        s_b = shannon_entropy(np.array(rank2_eigenvalues(reduced_closed_form(cfg, r, 1))))
        rec = correlation_record(cfg, r, ONE_REST, grid=256)
        worst_mi = max(worst_mi, abs(rec.mutual_info - 2.0 * s_b))
        worst_cc = max(worst_cc, abs(rec.classical_corr - s_b))
        worst_qd = max(worst_qd, abs(rec.discord - s_b))
    _report(
        6,
        worst_mi < 1e-9 and worst_cc < 5e-3 and worst_qd < 5e-3,
        f"n=8, r in [0,2R]: |MI-2S| max {worst_mi:.2e} (tol 1e-9), "
        f"|CC-S| max {worst_cc:.2e}, |QD-S| max {worst_qd:.2e} (tol 5e-3)",
    )


def test_criterion_7_peak_relation():
    formula_ok = True
    for n in range(3, 41):
        r1, r2 = peak_iterations(GroverConfig(n=n))
        formula_ok &= (r1 - r2) in (0, 1)
    worst_gap = 0
    for n in range(4, 17):
        cfg = GroverConfig(n=n)
        best = optimal_iterations(cfg)
        rates = [iteration_point(cfg, r).rate for r in range(best + 1)]
        concs = [pairwise_concurrence_closed(cfg, r) for r in range(best + 1)]
        worst_gap = max(worst_gap, abs(int(np.argmax(rates)) - int(np.argmax(concs))))
    _report(
        7,
        formula_ok and worst_gap <= 1,
        f"r1-r2 in {{0,1}} for n in [3,40]: {formula_ok}; "
        f"max |argmax rate - argmax C11| = {worst_gap} (limit 1) for n in [4,16]",
    )


def test_criterion_8_grid_monotonicity():
    samples = [
        (3, 1), (3, 2), (4, 1), (4, 3), (5, 2), (5, 4), (6, 1), (6, 3),
        (6, 6), (7, 4), (7, 8), (8, 5), (8, 12), (9, 8), (9, 17), (10, 12),
        (10, 25), (11, 17), (12, 25), (12, 50),
    ]
    assert len(samples) == 20
    monotone = refinement_safe = True
    worst_drop = 0.0
    for n, r in samples:
        rho = pair_state(GroverConfig(n=n), r)
        coarse = classical_correlation(rho, (2, 2), grid=64, refine=False)
        fine = classical_correlation(rho, (2, 2), grid=256, refine=False)
        refined = classical_correlation(rho, (2, 2), grid=256, refine=True)
        monotone &= fine >= coarse - 1e-12
        refinement_safe &= refined >= fine - 1e-12
        worst_drop = max(worst_drop, coarse - fine, fine - refined)
    _report(
        8,
        monotone and refinement_safe,
        f"20 states: CC(grid 256) >= CC(grid 64) and refinement never lowers; "
        f"worst drop {worst_drop:.2e} (tol 1e-12)",
    )


def test_criterion_9_sweep_determinism(tmp_path, capsys):
    paths = [tmp_path / "first.csv", tmp_path / "second.csv"]
    for path in paths:
        code = main(["sweep", "--n", "11", "--rmax", "70", "--output", str(path)])
        assert code == 0
    capsys.readouterr()
    identical = paths[0].read_bytes() == paths[1].read_bytes()
    _report(
        9,
        identical,
        "two runs of `sweep --n 11 --rmax 70` produce byte-identical output: "
        f"{identical}",
    )
