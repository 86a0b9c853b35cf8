"""Command-line harness: quantize, simulate, sweep, estimate, resources,
circuit dumps.

All output is deterministic for a fixed seed: JSON is emitted with sorted
keys, CSV rows in sorted order.  Exit codes: 0 success, 2 validation
error, 3 when a runtime-bound precondition was violated (the report is
still emitted).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from dataclasses import dataclass

from .amplify import load_state, runtime_bounds, stage_overlaps
from .amplitudes import quantize
from .bootstrap import (
    average_bit_weights,
    bootstrap_slowdown_ratio,
    estimate_bit_weights,
    lambda1_prime,
    runtime_bound_prime,
)
from .distributions import DistributionSpec, core_rounds, generate
from .errors import BoundInvalid, NoOverlap, OutOfRange, ZeroVector
from .gradient import build_gradient_circuit
from .oracles import build_permutation_network, digit_oracle
from .resources import VARIANTS, tally_variant

SWEEP_COLUMNS = (
    "family,param,N,g,shift,l1,l2,lambda1,lambda2,lambda1_prime,"
    "L_core,Lp_core,L_bound,Lp_bound,fidelity,queries,seed"
).split(",")

DEFAULT_SWEEP_N = tuple(2**p for p in range(6, 15))


@dataclass(frozen=True)
class ExperimentConfig:
    """Parsed parameters of one CLI invocation."""

    command: str
    dist: str | None = None
    n: int | None = None
    n_list: tuple[int, ...] = ()
    g: int | None = None
    k: float | None = None
    k_list: tuple[float, ...] = ()
    sigma: float | None = None
    sigma_list: tuple[float, ...] = ()
    delta1: float | None = None
    delta2: float = 0.5
    bootstrap: bool = False
    shift: bool = False
    mode: str = "postselect"
    seed: int = 0
    shots: int = 1024
    census: bool = False
    simulate: bool = False
    what: str | None = None
    q: int | None = None
    optimize: bool = True
    as_json: bool = False
    out: str | None = None


def _emit(config: ExperimentConfig, text: str) -> None:
    if config.out:
        with open(config.out, "w", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _require_g(config: ExperimentConfig) -> int:
    if config.g is None:
        raise OutOfRange("--g is required")
    return config.g


def _dist_spec(config: ExperimentConfig, n: int | None = None, param: float | None = None) -> DistributionSpec:
    if config.dist is None:
        raise OutOfRange("--dist is required")
    n = n if n is not None else config.n
    if n is None:
        raise OutOfRange("--n is required")
    kwargs = {}
    if config.dist == "powerlaw":
        kwargs["k"] = param if param is not None else config.k
    elif config.dist == "normal":
        kwargs["sigma"] = param if param is not None else config.sigma
    return DistributionSpec(config.dist, n, seed=config.seed, **kwargs)


def cmd_quantize(config: ExperimentConfig) -> None:
    vec = generate(_dist_spec(config))
    q = quantize(vec.values, _require_g(config), shift=config.shift)
    _emit(config, q.to_json() + "\n")


def cmd_simulate(config: ExperimentConfig) -> None:
    vec = generate(_dist_spec(config))
    q = quantize(vec.values, _require_g(config), shift=config.shift)
    _, report = load_state(
        q,
        delta1=config.delta1,
        delta2=config.delta2,
        bootstrap=config.bootstrap,
        mode=config.mode,
        alpha=vec.values,
    )
    _emit(config, json.dumps(report.to_json_dict(), indent=2, sort_keys=True) + "\n")


def _sweep_params(config: ExperimentConfig) -> tuple[float | None, ...]:
    if config.dist == "powerlaw":
        return config.k_list or (config.k,)
    if config.dist == "normal":
        return config.sigma_list or (config.sigma,)
    return (None,)


def cmd_sweep(config: ExperimentConfig) -> None:
    n_values = config.n_list or ((config.n,) if config.n else DEFAULT_SWEEP_N)
    rows = []
    for param in _sweep_params(config):
        for n in sorted(n_values):
            g = config.g if config.g is not None else min(16, math.ceil(math.log2(n)) + 4)
            spec = _dist_spec(config, n=n, param=param)
            vec = generate(spec)
            q = quantize(vec.values, g, shift=config.shift)
            lambda1, lambda2 = stage_overlaps(q)
            lam1p = lambda1_prime(q, average_bit_weights(q))
            l_core, lp_core, _ = core_rounds(spec, g, shift=config.shift)
            bounds = runtime_bounds(q, alpha=vec.values, delta1=config.delta1, delta2=config.delta2)
            prime = runtime_bound_prime(
                q, alpha=vec.values, delta1=config.delta1, delta2=config.delta2
            )
            fidelity = ""
            queries = ""
            if config.simulate:
                _, report = load_state(
                    q,
                    delta1=config.delta1,
                    delta2=config.delta2,
                    bootstrap=config.bootstrap,
                    mode=config.mode,
                    alpha=vec.values,
                )
                fidelity = f"{report.final_fidelity:.12g}"
                queries = str(report.queries["phase_oracle"])
            norms = q.norms()
            rows.append(
                [
                    spec.family,
                    f"{spec.param:g}",
                    n,
                    g,
                    int(config.shift),
                    f"{norms.l1:.12g}",
                    f"{norms.l2:.12g}",
                    f"{lambda1:.12g}",
                    f"{lambda2:.12g}",
                    f"{lam1p:.12g}",
                    l_core,
                    lp_core,
                    f"{bounds.basic:.12g}",
                    f"{prime.bound:.12g}",
                    fidelity,
                    queries,
                    config.seed,
                ]
            )
    rows.sort(key=lambda r: (r[0], float(r[1]), int(r[2])))
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    writer.writerows(rows)
    _emit(config, buffer.getvalue())


def cmd_estimate(config: ExperimentConfig) -> None:
    vec = generate(_dist_spec(config))
    q = quantize(vec.values, _require_g(config), shift=config.shift)
    oracle = digit_oracle(q)
    profile = estimate_bit_weights(
        oracle, config.shots, seed=config.seed, replace=not config.census
    )
    exact = average_bit_weights(q)
    payload = {
        "raw_frequencies": [float(x) for x in profile.raw_frequencies],
        "weights": [float(x) for x in profile.weights],
        "exact_raw_frequencies": [float(x) for x in exact.raw_frequencies],
        "source": profile.source,
        "shots": profile.shots,
        "queries": oracle.query_count,
        "slowdown_vs_exact": bootstrap_slowdown_ratio(exact, profile),
        "lambda1_prime_exact": lambda1_prime(q, exact),
    }
    _emit(config, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def cmd_resources(config: ExperimentConfig) -> None:
    if config.g is None:
        raise OutOfRange("--g is required")
    tallies = [tally_variant(v, config.g) for v in VARIANTS]
    if config.as_json:
        payload = {
            t.variant: {
                "toffoli": t.toffoli,
                "sqrt_swap": t.sqrt_swap,
                "t_gates": t.t_gates,
                "ancillas": t.ancillas,
                "toffoli_bound": t.toffoli_bound,
            }
            for t in tallies
        }
        _emit(config, json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return
    lines = [f"g = {config.g}", f"{'variant':<12} {'toffoli':>8} {'sqrt_swap':>10} {'ancillas':>9}"]
    for t in tallies:
        toff = str(t.toffoli)
        if t.toffoli_bound is not None:
            toff += f" (<= {t.toffoli_bound})"
        lines.append(f"{t.variant:<12} {toff:>8} {t.sqrt_swap:>10} {t.ancillas:>9}")
    _emit(config, "\n".join(lines) + "\n")


def cmd_circuit(config: ExperimentConfig) -> None:
    if config.what == "permutation":
        if config.q is None:
            raise OutOfRange("--q is required for the permutation network")
        circuit = build_permutation_network(config.q, optimize=config.optimize)
    elif config.what == "gradient":
        if config.g is None:
            raise OutOfRange("--g is required for the gradient circuit")
        circuit = build_gradient_circuit(config.g)
    else:
        raise OutOfRange("--what must be 'permutation' or 'gradient'")
    _emit(config, circuit.dump() + "\n")


COMMANDS = {
    "quantize": cmd_quantize,
    "simulate": cmd_simulate,
    "sweep": cmd_sweep,
    "estimate": cmd_estimate,
    "resources": cmd_resources,
    "circuit": cmd_circuit,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradprep",
        description="Gradient-state black-box state preparation toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, dist=True):
        if dist:
            p.add_argument("--dist", help="amplitude family")
            p.add_argument("--n", type=int, help="number of elements")
            p.add_argument("--k", type=float, help="powerlaw exponent")
            p.add_argument("--sigma", type=float, help="normal width in index units")
        p.add_argument("--g", type=int, help="bit precision")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--shift", action="store_true", help="enable dynamic-range shift")
        p.add_argument("--out", "-o", help="output path (default stdout)")

    add_common(sub.add_parser("quantize", help="quantize a generated distribution"))

    p = sub.add_parser("simulate", help="run the loading protocol end to end")
    add_common(p)
    p.add_argument("--delta1", type=float)
    p.add_argument("--delta2", type=float, default=0.5)
    p.add_argument("--bootstrap", action="store_true")
    p.add_argument("--mode", choices=("postselect", "amplify"), default="postselect")

    p = sub.add_parser("sweep", help="scaling sweep over N, CSV output")
    add_common(p)
    p.add_argument("--n-list", help="comma-separated N values")
    p.add_argument("--k-list", help="comma-separated powerlaw exponents")
    p.add_argument("--sigma-list", help="comma-separated normal widths")
    p.add_argument("--delta1", type=float)
    p.add_argument("--delta2", type=float, default=0.5)
    p.add_argument("--bootstrap", action="store_true")
    p.add_argument("--mode", choices=("postselect", "amplify"), default="postselect")
    p.add_argument("--simulate", action="store_true", help="also simulate each point")

    p = sub.add_parser("estimate", help="sample bit weights through the digit oracle")
    add_common(p)
    p.add_argument("--shots", type=int, default=1024)
    p.add_argument("--census", action="store_true", help="sample indices without replacement")

    p = sub.add_parser("resources", help="per-round gate/ancilla table")
    add_common(p, dist=False)
    p.add_argument("--json", dest="as_json", action="store_true")

    p = sub.add_parser("circuit", help="dump a builder circuit as text")
    add_common(p, dist=False)
    p.add_argument("--what", choices=("permutation", "gradient"))
    p.add_argument("--q", type=int, help="address width for the permutation network")
    p.add_argument("--no-optimize", dest="optimize", action="store_false")
    return parser


def _parse_list(text: str | None, cast) -> tuple:
    if not text:
        return ()
    return tuple(cast(part) for part in text.split(","))


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    return ExperimentConfig(
        command=args.command,
        dist=getattr(args, "dist", None),
        n=getattr(args, "n", None),
        n_list=_parse_list(getattr(args, "n_list", None), int),
        g=getattr(args, "g", None),
        k=getattr(args, "k", None),
        k_list=_parse_list(getattr(args, "k_list", None), float),
        sigma=getattr(args, "sigma", None),
        sigma_list=_parse_list(getattr(args, "sigma_list", None), float),
        delta1=getattr(args, "delta1", None),
        delta2=getattr(args, "delta2", 0.5),
        bootstrap=getattr(args, "bootstrap", False),
        shift=getattr(args, "shift", False),
        mode=getattr(args, "mode", "postselect"),
        seed=getattr(args, "seed", 0),
        shots=getattr(args, "shots", 1024),
        census=getattr(args, "census", False),
        simulate=getattr(args, "simulate", False),
        what=getattr(args, "what", None),
        q=getattr(args, "q", None),
        optimize=getattr(args, "optimize", True),
        as_json=getattr(args, "as_json", False),
        out=getattr(args, "out", None),
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = config_from_args(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            COMMANDS[config.command](config)
        except (OutOfRange, ZeroVector, NoOverlap, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    if any(issubclass(w.category, BoundInvalid) for w in caught):
        for w in caught:
            if issubclass(w.category, BoundInvalid):
                print(f"warning: {w.message}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
