#!/usr/bin/env python3
"""Generate the combined benchmark sweep CSV across all amplitude families.

Each family is swept over the default octave grid with the dynamic-range
shift enabled; powerlaw runs three decay exponents and normal a fixed
width of 100 index units.  Rows from the per-family runs are concatenated
under a single header, so downstream plotting can filter on the family
column.
"""

import argparse
import sys
import tempfile
from pathlib import Path

from gradprep.cli import main as gradprep_main

GRID = ",".join(str(2**p) for p in range(6, 15))

FAMILY_ARGS = [
    ["--dist", "delta", "--n-list", GRID],
    ["--dist", "uniform", "--n-list", GRID],
    ["--dist", "triangle", "--n-list", GRID],
    ["--dist", "sine", "--n-list", GRID],
    ["--dist", "random", "--n-list", GRID],
    ["--dist", "powerlaw", "--k-list", "0.5,1.5,2", "--n-list", GRID],
    ["--dist", "normal", "--sigma", "100", "--n-list", GRID],
]


def run(out_path: Path, seed: int) -> int:
    lines: list[str] = []
    with tempfile.TemporaryDirectory() as tmp:
        for extra in FAMILY_ARGS:
            part = Path(tmp) / "part.csv"
            argv = ["sweep", *extra, "--shift", "--seed", str(seed), "--out", str(part)]
            code = gradprep_main(argv)
            if code not in (0, 3):
                print(f"sweep failed for {extra}: exit {code}", file=sys.stderr)
                return code
            rows = part.read_text().strip().splitlines()
            if not lines:
                lines.append(rows[0])
            lines.extend(rows[1:])
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines) - 1} rows to {out_path}")
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("results/sweep.csv"))
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    return run(args.out, args.seed)


if __name__ == "__main__":
    sys.exit(main())
