"""Regenerate the three stock figures from the checked-in sweep CSV.

Usage: python3 scripts/make_figures.py [--csv PATH] [--out-dir DIR]
"""

from __future__ import annotations

import argparse
from pathlib import Path

from gradplots import PlotJob, plot_runtime

PLOTS_ROOT = Path(__file__).resolve().parents[1]
FIGURES = (
    ("powerlaw", "powerlaw.png"),
    ("normal", "normal.png"),
    ("random", "random.png"),
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", type=Path, default=PLOTS_ROOT / "data" / "sweep.csv")
    parser.add_argument("--out-dir", type=Path, default=PLOTS_ROOT / "figures")
    args = parser.parse_args()
    for family, name in FIGURES:
        out = plot_runtime(PlotJob(args.csv, args.out_dir / name, family=family))
        print(out)


if __name__ == "__main__":
    main()
