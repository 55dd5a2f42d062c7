#!/usr/bin/env python3
"""Sweep certified lower bounds for the backward-shift norm on analytic
subspaces (problem-2 style table), including the p = inf column where the
true norm is 2.

    python3 scripts/backward_shift_sweep.py --p-list 1.1,1.5,2,4,inf -d 64
"""

import argparse
import sys

from hardybench.cli import main as cli_main


def parse_args():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p-list", default="1.1,1.5,2,4,inf")
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
        "sweep", "--problem", "problem2", "--p", args.p_list,
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
