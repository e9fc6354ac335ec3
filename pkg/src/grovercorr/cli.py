"""Command-line interface.

Subcommands:
  sweep   per-iteration series of every measure, as CSV (default) or JSON
  verify  closed forms against the brute-force simulator, with tolerances
  peaks   formula vs numeric peak locations across a range of qubit counts
  matrix  closed-form reduced density matrix dump

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .core import (
    CapacityError,
    GroverConfig,
    iteration_point,
    optimal_iterations,
    peak_iterations,
    rotation_angle,
)
from .correlations import (
    ONE_REST,
    PAIR,
    bipartite_concurrence_pure,
    correlation_record,
    pairwise_concurrence_closed,
)
from .oracle import RECORD_QUBIT_LIMIT, brute_force_record, evolve, grover_step, init_uniform, partial_trace
from .states import materialize, reduced_closed_form, relabel_to_zero

BASE_COLUMNS = ["r", "theta_r", "a", "b", "P", "rate"]
PAIR_COLUMNS = ["C11_closed", "C11_wootters", "EOF_11", "MI_11", "CC_11", "QD_11"]
REST_COLUMNS = ["MI_1rest", "CC_1rest", "QD_1rest"]


def _fmt(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".12g")


def default_k_list(n: int) -> list[int]:
    return list(range(1, min(4, n // 2) + 1))


def sweep_columns(n: int, partitions, k_list) -> list[str]:
    columns = list(BASE_COLUMNS)
    if PAIR in partitions:
        columns += PAIR_COLUMNS
    if ONE_REST in partitions:
        columns += REST_COLUMNS
    columns += [f"C_{k}" for k in k_list]
    return columns


def sweep_rows(config: GroverConfig, rmax: int, grid: int, k_list, partitions):
    """One row per iteration in [0, rmax] with the requested measure columns."""
    rows = []
    for r in range(rmax + 1):
        pt = iteration_point(config, r)
        row: dict[str, float | int] = {
            "r": r,
            "theta_r": pt.theta_r,
            "a": pt.a,
            "b": pt.b,
            "P": pt.p,
            "rate": pt.rate,
        }
        if PAIR in partitions:
            rec = correlation_record(config, r, PAIR, grid)
            row["C11_closed"] = pairwise_concurrence_closed(config, r)
            row["C11_wootters"] = rec.concurrence
            row["EOF_11"] = rec.eof
            row["MI_11"] = rec.mutual_info
            row["CC_11"] = rec.classical_corr
            row["QD_11"] = rec.discord
        if ONE_REST in partitions:
            rec = correlation_record(config, r, ONE_REST, grid)
            row["MI_1rest"] = rec.mutual_info
            row["CC_1rest"] = rec.classical_corr
            row["QD_1rest"] = rec.discord
        for k in k_list:
            row[f"C_{k}"] = bipartite_concurrence_pure(config, r, k)
        rows.append(row)
    return rows


def _parse_k_list(text: str, n: int, parser: argparse.ArgumentParser) -> list[int]:
    if not text.strip():
        return []
    try:
        ks = [int(part) for part in text.split(",")]
    except ValueError:
        parser.error(f"--k-list must be comma-separated integers, got {text!r}")
    for k in ks:
        if not 1 <= k <= n // 2:
            parser.error(f"--k-list entries must lie in [1, n/2] = [1, {n // 2}], got {k}")
    return ks


def cmd_sweep(args, parser: argparse.ArgumentParser) -> int:
    config = GroverConfig(n=args.n, target=args.target)
    if args.grid < 2:
        parser.error("--grid must be at least 2")
    partitions = {
        "1:1": [PAIR],
        "1:rest": [ONE_REST],
        "both": [PAIR, ONE_REST],
    }[args.partition]
    if args.n < 2:
        parser.error("--n must be at least 2 for correlation sweeps")
    k_list = (
        default_k_list(args.n)
        if args.k_list is None
        else _parse_k_list(args.k_list, args.n, parser)
    )
    rmax = 2 * optimal_iterations(config) if args.rmax is None else args.rmax
    if rmax < 0:
        parser.error("--rmax must be nonnegative")
    columns = sweep_columns(args.n, partitions, k_list)
    rows = sweep_rows(config, rmax, args.grid, k_list, partitions)
    if args.format == "csv":
        lines = [",".join(columns)]
        lines += [",".join(_fmt(row[c]) for c in columns) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        payload = [{c: _json_value(row[c]) for c in columns} for row in rows]
        text = json.dumps(payload, separators=(",", ":")) + "\n"
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    return 0


def _json_value(value):
    if isinstance(value, (int, np.integer)):
        return int(value)
    return float(format(float(value), ".12g"))


def _record_deviations(closed, brute) -> dict[str, float]:
    out = {}
    for name in ("concurrence", "eof", "c_k"):
        a, b = getattr(closed, name), getattr(brute, name)
        if a is not None and b is not None:
            out[name] = abs(a - b)
    for name in ("mutual_info", "classical_corr", "discord"):
        out[name] = abs(getattr(closed, name) - getattr(brute, name))
    return out


def cmd_verify(args, parser: argparse.ArgumentParser) -> int:
    if args.n > RECORD_QUBIT_LIMIT:
        raise CapacityError(f"verify supports at most {RECORD_QUBIT_LIMIT} qubits")
    if args.n < 2:
        parser.error("--n must be at least 2")
    if args.grid < 2:
        parser.error("--grid must be at least 2")
    config = GroverConfig(n=args.n, target=args.target)
    rmax = 2 * optimal_iterations(config) if args.rmax is None else args.rmax
    k_values = list(range(1, min(3, args.n - 1) + 1))

    matrix_dev = {k: 0.0 for k in k_values}
    scalar_dev: dict[str, float] = {}
    entropy_dev: dict[str, float] = {}
    state = init_uniform(args.n)
    for r in range(rmax + 1):
        if r > 0:
            state = grover_step(state, config.target)
        for k in k_values:
            closed = materialize(reduced_closed_form(config, r, k))
            brute = partial_trace(state, list(range(k)))
            kept_bits = config.target >> (args.n - k)
            if kept_bits:
                brute = relabel_to_zero(brute, kept_bits)
            matrix_dev[k] = max(matrix_dev[k], float(np.max(np.abs(closed - brute))))
        for partition in (PAIR, ONE_REST):
            closed_rec = correlation_record(config, r, partition, args.grid)
            brute_rec = brute_force_record(config, r, partition, args.grid)
            for name, dev in _record_deviations(closed_rec, brute_rec).items():
                bucket = scalar_dev if name in ("concurrence", "eof", "c_k") else entropy_dev
                key = f"{partition} {name}"
                bucket[key] = max(bucket.get(key, 0.0), dev)

    failed = False
    print(f"verify n={args.n} target={config.target} r in [0, {rmax}] grid={args.grid}")
    for k in k_values:
        ok = matrix_dev[k] <= args.tol_matrix
        failed |= not ok
        print(
            f"  reduced matrix k={k}: max deviation {matrix_dev[k]:.3e} "
            f"(tol {args.tol_matrix:.1e}) {'PASS' if ok else 'FAIL'}"
        )
    for key in sorted(scalar_dev):
        ok = scalar_dev[key] <= 1e-9
        failed |= not ok
        print(
            f"  {key}: max deviation {scalar_dev[key]:.3e} (tol 1.0e-09) "
            f"{'PASS' if ok else 'FAIL'}"
        )
    for key in sorted(entropy_dev):
        ok = entropy_dev[key] <= args.tol_entropy
        failed |= not ok
        print(
            f"  {key}: max deviation {entropy_dev[key]:.3e} "
            f"(tol {args.tol_entropy:.1e}) {'PASS' if ok else 'FAIL'}"
        )
    return 1 if failed else 0


def _parse_n_range(text: str, parser: argparse.ArgumentParser) -> tuple[int, int]:
    sep = ":" if ":" in text else "-"
    parts = text.split(sep)
    if len(parts) != 2:
        parser.error(f"--n-range must look like LO:HI, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        parser.error(f"--n-range must contain integers, got {text!r}")
    if lo > hi:
        parser.error("--n-range lower bound exceeds upper bound")
    if lo < 2 or hi > 60:
        parser.error("--n-range must lie within [2, 60]")
    return lo, hi


def cmd_peaks(args, parser: argparse.ArgumentParser) -> int:
    lo, hi = _parse_n_range(args.n_range, parser)
    header = (
        f"{'n':>3} {'alpha':>18} {'R':>6} {'r1':>6} {'r2':>6} "
        f"{'argmax_rate':>12} {'argmax_C11':>11}  note"
    )
    print(header)
    for n in range(lo, hi + 1):
        config = GroverConfig(n=n)
        alpha = rotation_angle(config)
        best = optimal_iterations(config)
        r1, r2 = peak_iterations(config)
        # scan the search window; past R the rate turns negative and the
        # pairwise concurrence starts its mirror-image second rise
        points = [iteration_point(config, r) for r in range(best + 1)]
        rates = np.array([pt.rate for pt in points])
        concs = np.array([pairwise_concurrence_closed(config, r) for r in range(best + 1)])
        rate_argmax = int(np.argmax(rates))
        conc_argmax = int(np.argmax(concs))
        notes = []
        if rate_argmax != r1:
            notes.append(f"rate argmax {rate_argmax} != r1")
        if conc_argmax != r2:
            notes.append(f"C11 argmax {conc_argmax} != r2")
        print(
            f"{n:>3} {alpha:>18.12g} {best:>6} {r1:>6} {r2:>6} "
            f"{rate_argmax:>12} {conc_argmax:>11}  {'; '.join(notes)}"
        )
    return 0


def cmd_matrix(args, parser: argparse.ArgumentParser) -> int:
    config = GroverConfig(n=args.n, target=args.target)
    if not 1 <= args.k <= args.n - 1:
        parser.error(f"--k must lie in [1, n-1] = [1, {args.n - 1}]")
    if args.r < 0:
        parser.error("--r must be nonnegative")
    form = reduced_closed_form(config, args.r, args.k)
    rho = materialize(form)
    print(f"reduced state of k={args.k} qubits at n={args.n}, r={args.r}")
    print(f"diag0    = {_fmt(form.diag0)}")
    print(f"offdiag0 = {_fmt(form.offdiag0)}")
    print(f"bulk     = {_fmt(form.bulk)}")
    print(f"matrix ({form.dim}x{form.dim}):")
    for row in rho:
        print("  " + " ".join(f"{x:>18.12g}" for x in row))
    print(f"trace = {float(np.trace(rho)):.12f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grovercorr",
        description="Entanglement and correlation series over Grover search iterations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="emit per-iteration measure series")
    sweep.add_argument("--n", type=int, required=True, help="qubit count")
    sweep.add_argument("--target", type=int, default=0, help="marked basis index")
    sweep.add_argument("--rmax", type=int, default=None, help="last iteration (default 2R)")
    sweep.add_argument("--grid", type=int, default=256, help="measurement grid resolution")
    sweep.add_argument("--k-list", default=None, help="comma-separated kept-side sizes")
    sweep.add_argument(
        "--partition", choices=["1:1", "1:rest", "both"], default="both",
        help="which partitions to include",
    )
    sweep.add_argument("--format", choices=["csv", "json"], default="csv")
    sweep.add_argument("--output", default="-", help="output path, - for stdout")

    verify = sub.add_parser("verify", help="closed forms vs brute-force simulator")
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--target", type=int, default=0)
    verify.add_argument("--rmax", type=int, default=None)
    verify.add_argument("--grid", type=int, default=256)
    verify.add_argument("--tol-matrix", type=float, default=1e-10)
    verify.add_argument("--tol-entropy", type=float, default=5e-3)

    peaks = sub.add_parser("peaks", help="formula vs numeric peak iterations")
    peaks.add_argument("--n-range", required=True, help="qubit range LO:HI within [2, 60]")

    matrix = sub.add_parser("matrix", help="dump a closed-form reduced matrix")
    matrix.add_argument("--n", type=int, required=True)
    matrix.add_argument("--r", type=int, required=True)
    matrix.add_argument("--k", type=int, required=True)
    matrix.add_argument("--target", type=int, default=0)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "sweep": cmd_sweep,
        "verify": cmd_verify,
        "peaks": cmd_peaks,
        "matrix": cmd_matrix,
    }
    try:
        return handlers[args.command](args, parser)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
