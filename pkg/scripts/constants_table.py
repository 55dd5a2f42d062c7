#!/usr/bin/env python3
"""Tabulate the approximation constants over a (p, q) grid: the
subtract-the-mean norm C_p, the interpolation bound 2^{|1-2/p|}, and the
Orlicz interpolation constants gamma_{p,q}, C_{p,q}, Lambda_{p,q}.

    python3 scripts/constants_table.py --p-range 1.1:4.0:0.1 --q-range 2.0:4.0:0.5
"""

import argparse
import sys

from hardybench.cli import main as cli_main


def parse_args():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p-range", default="1.1:4.0:0.1")
    parser.add_argument("--q-range", default="2.1:4.1:0.5")
    parser.add_argument("--out", default="")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser.parse_args()


def main():
    args = parse_args()
    cli_args = ["constants", "--p", args.p_range, "--q", args.q_range,
                "--format", args.format]
    if args.out:
        cli_args += ["--out", args.out]
    return cli_main(cli_args)


if __name__ == "__main__":
    sys.exit(main())
