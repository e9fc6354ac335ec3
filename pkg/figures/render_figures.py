#!/usr/bin/env python3
"""Render figures from a sweep CSV.

Reads the per-iteration measure series emitted by `grovercorr sweep` and
draws line figures: single-axis multi-series plots and two-series
comparisons with an optional zoomed inset around the peak region.  No
quantity is recomputed here; the CSV is the only input.

Usage:
  render_figures.py SWEEP_CSV FIGURE OUTPUT [--columns a,b] [--zoom LO:HI|auto]

FIGURE is one of the named presets below, or `series` / `compare` with
explicit --columns.  OUTPUT extension selects the format (png, svg, ...).

Exit codes: 0 ok, 1 data error (missing column, bad CSV), 2 usage.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

PRESETS = {
    # one curve or family per figure, matching the sweep CSV schema
    "pairwise-concurrence": ("series", ["C11_closed"], "concurrence"),
    "pairwise-correlations": ("series", ["MI_11", "CC_11", "QD_11"], "bits"),
    "split-correlations": ("series", ["MI_1rest", "CC_1rest", "QD_1rest"], "bits"),
    "k-concurrence": ("series", "C_*", "concurrence"),
    "eof-vs-mutual-info": ("compare", ["EOF_11", "MI_11"], "bits"),
    "rate-vs-concurrence": ("compare", ["rate", "C11_closed"], ""),
}


class MissingColumnError(KeyError):
    pass


@dataclass
class FigureSpec:
    csv_path: str
    columns: list[str]
    output_path: str
    ylabel: str = ""
    xlabel: str = "iteration r"
    zoom: tuple[float, float] | None = None
    title: str = ""


@dataclass
class SweepTable:
    header: list[str]
    rows: list[dict[str, float]] = field(default_factory=list)

    def column(self, name: str) -> list[float]:
        if name not in self.header:
            raise MissingColumnError(name)
        return [row[name] for row in self.rows]


def load_sweep(path: str) -> SweepTable:
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None:
            raise ValueError(f"{path} has no header row")
        table = SweepTable(header=list(reader.fieldnames))
        for record in reader:
            table.rows.append({key: float(value) for key, value in record.items()})
    if not table.rows:
        raise ValueError(f"{path} has no data rows")
    return table


def render_series(spec: FigureSpec) -> None:
    """One line per requested column against the iteration index."""
    table = load_sweep(spec.csv_path)
    r = table.column("r")
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for name in spec.columns:
        ax.plot(r, table.column(name), label=name, linewidth=1.5)
    ax.set_xlabel(spec.xlabel)
    ax.set_ylabel(spec.ylabel)
    if spec.title:
        ax.set_title(spec.title)
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(spec.output_path)
    plt.close(fig)


def render_compare(spec: FigureSpec) -> None:
    """Two series on twin y-axes, optionally with a zoomed inset."""
    if len(spec.columns) != 2:
        raise ValueError(f"compare needs exactly two columns, got {spec.columns}")
    table = load_sweep(spec.csv_path)
    r = table.column("r")
    left = table.column(spec.columns[0])
    right = table.column(spec.columns[1])

    fig, ax = plt.subplots(figsize=(7, 4.5))
    twin = ax.twinx()
    (line_l,) = ax.plot(r, left, color="tab:blue", linewidth=1.5, label=spec.columns[0])
    (line_r,) = twin.plot(
        r, right, color="tab:red", linewidth=1.5, linestyle="--", label=spec.columns[1]
    )
    ax.set_xlabel(spec.xlabel)
    ax.set_ylabel(spec.columns[0], color="tab:blue")
    twin.set_ylabel(spec.columns[1], color="tab:red")
    if spec.title:
        ax.set_title(spec.title)
    ax.legend(handles=[line_l, line_r], loc="upper right")
    ax.grid(True, alpha=0.3)

    if spec.zoom is not None:
        lo, hi = spec.zoom
        inset = ax.inset_axes([0.08, 0.55, 0.34, 0.38])
        window = [i for i, x in enumerate(r) if lo <= x <= hi]
        if window:
            xs = [r[i] for i in window]
            inset.plot(xs, [left[i] for i in window], color="tab:blue", linewidth=1.2)
            inset_twin = inset.twinx()
            inset_twin.plot(
                xs, [right[i] for i in window],
                color="tab:red", linewidth=1.2, linestyle="--",
            )
            inset.set_title(f"r in [{lo:g}, {hi:g}]", fontsize=8)
            inset.tick_params(labelsize=7)
            inset_twin.tick_params(labelsize=7)
    else:
        fig.tight_layout()  # inset axes do not support tight_layout
    fig.savefig(spec.output_path)
    plt.close(fig)


def _resolve_columns(requested, table_header) -> list[str]:
    if requested == "C_*":
        found = [name for name in table_header if name.startswith("C_")]
        if not found:
            raise MissingColumnError("C_*")
        return found
    return list(requested)


def _auto_zoom(table: SweepTable, column: str) -> tuple[float, float]:
    """A window around the peak of ``column``, one tenth of the range wide."""
    r = table.column("r")
    values = table.column(column)
    peak = r[max(range(len(values)), key=values.__getitem__)]
    half = max(2.0, (r[-1] - r[0]) * 0.1)
    return peak - half, peak + half


def _parse_zoom(text: str, table: SweepTable, column: str) -> tuple[float, float]:
    if text == "auto":
        return _auto_zoom(table, column)
    parts = text.split(":")
    if len(parts) != 2:
        raise ValueError(f"--zoom must be LO:HI or auto, got {text!r}")
    return float(parts[0]), float(parts[1])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="render_figures",
        description="Draw line figures from a sweep CSV.",
    )
    parser.add_argument("csv_path", help="sweep CSV produced by the search toolkit")
    parser.add_argument(
        "figure",
        choices=sorted(PRESETS) + ["series", "compare"],
        help="preset name, or generic series/compare with --columns",
    )
    parser.add_argument("output_path", help="image file to write (png, svg, ...)")
    parser.add_argument("--columns", default=None, help="comma-separated column names")
    parser.add_argument(
        "--zoom", default=None, help="inset window LO:HI in iterations, or 'auto'"
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.figure in PRESETS:
        kind, requested, ylabel = PRESETS[args.figure]
        title = args.figure
        if args.figure == "rate-vs-concurrence" and args.zoom is None:
            args.zoom = "auto"
    else:
        kind, ylabel, title = args.figure, "", ""
        if not args.columns:
            parser.error(f"{args.figure} requires --columns")
        requested = [c for c in args.columns.split(",") if c]
        if not requested:
            parser.error("--columns must name at least one column")

    try:
        table = load_sweep(args.csv_path)
        columns = _resolve_columns(requested, table.header)
        for name in columns:
            if name not in table.header:
                raise MissingColumnError(name)
        zoom = None
        if args.zoom is not None:
            zoom = _parse_zoom(args.zoom, table, columns[0])
        spec = FigureSpec(
            csv_path=args.csv_path,
            columns=columns,
            output_path=args.output_path,
            ylabel=ylabel,
            zoom=zoom,
            title=title,
        )
        if kind == "series":
            render_series(spec)
        else:
            render_compare(spec)
    except MissingColumnError as exc:
        print(f"error: column {exc.args[0]!r} not present in {args.csv_path}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
