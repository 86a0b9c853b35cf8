"""Command line front end: ``plot_runtime <csv> <out> [--family F]``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import PlotJob, plot_runtime


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="plot_runtime",
        description="Render runtime-scaling figures from a sweep CSV.",
    )
    parser.add_argument("csv", type=Path, help="sweep CSV written by gradprep sweep")
    parser.add_argument("out", type=Path, help="output image path (extension picks the format)")
    parser.add_argument("--family", help="restrict to one target family")
    parser.add_argument(
        "--linear",
        dest="loglog",
        action="store_false",
        help="use linear axes instead of log-log",
    )
    args = parser.parse_args(argv)
    job = PlotJob(args.csv, args.out, family=args.family, loglog=args.loglog)
    try:
        out = plot_runtime(job)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
