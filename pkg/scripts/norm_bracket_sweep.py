#!/usr/bin/env python3
"""Sweep the certified brackets for ||I - K_n|| on analytic subspaces.

Produces the problem-1 style table: for each (p, n) the degree-d certified
lower bound, the interpolation upper bound, and the estimate at degree 2d
as a convergence indicator.

    python3 scripts/norm_bracket_sweep.py --out results/fejer_brackets.csv
"""

import argparse
import sys

from hardybench.cli import main as cli_main


def parse_args():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p-list", default="1.25,1.5,2,3,4")
    parser.add_argument("--orders", default="0,1,2,4", help="Fejer orders n")
    parser.add_argument("--grid-size", "-N", type=int, default=2048)
    parser.add_argument("--degree", "-d", type=int, default=32)
    parser.add_argument("--starts", type=int, default=8)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--out", default="")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser.parse_args()


def main():
    args = parse_args()
    cli_args = [
        "sweep", "--problem", "problem1",
        "--p", args.p_list, "--q", args.orders,
        "-N", str(args.grid_size), "-d", str(args.degree),
        "--starts", str(args.starts), "--format", args.format,
    ]
    if args.seed is not None:
        cli_args += ["--seed", str(args.seed)]
    if args.out:
        cli_args += ["--out", args.out]
    return cli_main(cli_args)


if __name__ == "__main__":
    sys.exit(main())
