#!/usr/bin/env python3
"""Produce the full set of figure CSVs (distributions, sweeps, estimate).

Writes into results/ by default; point the frontend figure scripts at these
files to render them.
"""

import argparse
import pathlib
import sys

from phononpump.cli import main as cli_main

RUNS = [
    ("dist_resonant.csv", ["distribution", "--override", "delta=0.0"]),
    ("dist_detuned.csv", ["distribution", "--override", "delta=1.0"]),
    ("sweep_detuning.csv", ["sweep-detuning"]),
    ("sweep_gamma.csv", ["sweep-gamma"]),
    ("cooling_estimate.csv", ["cooling-estimate"]),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="results", help="output directory")
    args = parser.parse_args()
    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for filename, cli_args in RUNS:
        target = outdir / filename
        print(f"-> {target}")
        code = cli_main(cli_args + ["--out", str(target)])
        if code != 0:
            return code
    return 0


if __name__ == "__main__":
    sys.exit(main())
