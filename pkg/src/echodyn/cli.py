"""Command-line entry point: correlations | echo | wigner | semiclassical."""

import argparse
import sys

from .experiments import ExperimentSpec, run_correlations, run_echo, run_wigner
from .semiclassical import (quadratic_decay_constant, read_covariance,
                            read_matrix, wavepacket_purity)


def _add_common(sub):
    sub.add_argument("--config", help="key=value config file")
    sub.add_argument("--regime", choices=["chaotic", "regular"])
    sub.add_argument("--delta", type=float)
    sub.add_argument("--tmax", type=float)
    sub.add_argument("--dt", type=float)
    sub.add_argument("--nboson", type=int)
    sub.add_argument("--seed", type=int)
    sub.add_argument("--out", required=True)
    sub.add_argument("--initial", choices=["coherent", "random"])
    sub.add_argument("--fit-tmin", type=float, dest="fit_tmin")
    sub.add_argument("--fit-tmax", type=float, dest="fit_tmax")
    sub.add_argument("--check-convergence", action="store_const", const=True,
                     dest="check_convergence")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="echodyn",
        description="Echo dynamics of the driven Jaynes-Cummings model")
    subs = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("correlations", "correlation integrals C(t), D(t) and asymptotic fits"),
        ("echo", "exact fidelity/purity-fidelity curves with linear-response overlays"),
        ("wigner", "spin Wigner-function snapshots of the echoed reduced state"),
    ):
        sub = subs.add_parser(name, help=help_text)
        _add_common(sub)
        if name == "wigner":
            sub.add_argument("--snapshots", help="semicolon-separated snapshot times")

    sc = subs.add_parser("semiclassical",
                         help="Gaussian-wavepacket purity from a covariance matrix file")
    sc.add_argument("--matrix", required=True, help="covariance matrix A (text format)")
    sc.add_argument("--drift", help="drift matrix B; enables the decay-constant output")
    sc.add_argument("--delta", type=float, default=1.0)
    sc.add_argument("--out", help="write results as CSV instead of stdout")
    return parser


def _spec_from_args(args):
    overrides = {k: getattr(args, k, None) for k in
                 ("regime", "delta", "tmax", "dt", "nboson", "seed", "out",
                  "initial", "fit_tmin", "fit_tmax", "check_convergence", "snapshots")}
    return ExperimentSpec.from_config(args.config, overrides)


def _run_semiclassical(args):
    cov = read_covariance(args.matrix)
    lines = [f"purity = {wavepacket_purity(cov):.12e}"]
    if args.drift:
        _, _, drift = read_matrix(args.drift)
        K = quadratic_decay_constant(cov, drift, args.delta)
        lines.append(f"decay_constant_K = {K:.12e}")
        lines.append(f"tau_ne_P = {K / args.delta:.12e}")
    if args.out:
        with open(args.out, "w") as f:
            f.write(f"# matrix = {args.matrix}\n")
            for line in lines:
                f.write(f"# {line}\n")
            f.write("quantity,value\n")
            for line in lines:
                key, value = line.split(" = ")
                f.write(f"{key},{value}\n")
    else:
        print("\n".join(lines))


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "correlations":
            run_correlations(_spec_from_args(args))
        elif args.command == "echo":
            run_echo(_spec_from_args(args))
        elif args.command == "wigner":
            run_wigner(_spec_from_args(args))
        elif args.command == "semiclassical":
            _run_semiclassical(args)
    except (ValueError, OSError) as exc:
        print(f"echodyn: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
