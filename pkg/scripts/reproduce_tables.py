#!/usr/bin/env python3
"""Print the per-round resource table and the core-round speedup table.

The resource table lists Toffoli, root-swap, and ancilla costs per
amplification round for the four register variants at power-of-two
precisions.  The speedup table evaluates the bootstrapped core round
count Lp_core = ceil(1/sqrt(lambda1' lambda2)) at the published desk
scales, with the dynamic-range shift on and g = min(16, ceil(log2 N)+4),
and reports the fitted log-log growth exponents.
"""

import argparse
import math
import sys

import numpy as np

from gradprep.distributions import DistributionSpec, core_rounds
from gradprep.resources import VARIANTS, tally_variant

G_COLUMNS = (2, 4, 8, 16, 32, 64)
GRID = tuple(2**p for p in range(6, 15))


def policy_g(n: int) -> int:
    return min(16, math.ceil(math.log2(n)) + 4)


def print_resource_table() -> None:
    print("Per-round resources (Toffoli / root-swap / ancillas):")
    header = f"{'variant':<12}" + "".join(f"{f'g={g}':>18}" for g in G_COLUMNS)
    print(header)
    for variant in VARIANTS:
        cells = []
        for g in G_COLUMNS:
            tally = tally_variant(variant, g)
            toff = str(tally.toffoli)
            if tally.toffoli_bound is not None:
                toff = f"{tally.toffoli}(<={tally.toffoli_bound})"
            cells.append(f"{toff}/{tally.sqrt_swap}/{tally.ancillas}")
        print(f"{variant:<12}" + "".join(f"{c:>18}" for c in cells))
    print()


def _cell(spec: DistributionSpec) -> tuple[int, int]:
    l_core, lp_core, _ = core_rounds(spec, policy_g(spec.n_elements))
    return l_core, lp_core


def print_speedup_table() -> None:
    print("Core rounds (L_core, Lp_core), shift on:")
    rows = [
        ("delta N=100", DistributionSpec("delta", 100)),
        ("delta N=10^4", DistributionSpec("delta", 10**4)),
        ("powerlaw k=1/2 N=100", DistributionSpec("powerlaw", 100, k=0.5)),
        ("powerlaw k=3/2 N=100", DistributionSpec("powerlaw", 100, k=1.5)),
        ("powerlaw k=2 N=100", DistributionSpec("powerlaw", 100, k=2.0)),
        ("normal sigma=100 N=10^4", DistributionSpec("normal", 10**4, sigma=100.0)),
    ]
    for label, spec in rows:
        l_core, lp_core = _cell(spec)
        print(f"  {label:<28} L={l_core:<6} L'={lp_core}")
    for family in ("uniform", "triangle", "random", "sine"):
        lps = [_cell(DistributionSpec(family, n, seed=0))[1] for n in GRID]
        print(f"  {family + ' (N=2^6..2^14)':<28} L' max={max(lps)}")
    print()
    print("Fitted log2 Lp_core vs log2 N slopes over the octave grid:")
    log_n = np.log2(np.asarray(GRID, dtype=float))
    for family in ("delta", "uniform", "triangle", "random", "sine"):
        lps = [_cell(DistributionSpec(family, n, seed=0))[1] for n in GRID]
        slope = float(np.polyfit(log_n, np.log2(lps), 1)[0])
        print(f"  {family:<10} {slope:+.4f}")


def main() -> int:
    argparse.ArgumentParser(description=__doc__.splitlines()[0]).parse_args()
    print_resource_table()
    print_speedup_table()
    return 0


if __name__ == "__main__":
    sys.exit(main())
