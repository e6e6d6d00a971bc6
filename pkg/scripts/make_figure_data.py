#!/usr/bin/env python3
"""Emit the CSV data behind all five figure kinds into data/.

Runs the CLI subcommands with the published figure parameters so the outputs
carry manifests and are bit-for-bit reproducible.  The resulting directory
is what the rendering front end consumes.
"""

import argparse
import sys
from pathlib import Path

from nlsdp.cli import run

FIG = ["--p", "3", "--lambda1", "-1", "--lambda2", "-1", "--Z", "2", "--omega", "-0.25"]
EQ = ["--p", "3", "--lambda1", "-1", "--lambda2", "-1", "--Z", "1.25", "--omega", "0"]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("data"))
    ap.add_argument("--fast", action="store_true", help="coarser grids for smoke runs")
    args = ap.parse_args()
    h = "0.05" if args.fast else "0.01"
    T = "2" if args.fast else "10"

    jobs = [
        ("profile-standing", ["profile", *FIG, "--L", "40", "--h", h]),
        ("profile-equilibrium", ["profile", *EQ, "--L", "40", "--h", h]),
        (
            "evolution",
            ["evolve", *FIG, "--L", "40", "--h", h, "--dt", "0.001", "--T", T,
             "--record-every", "100", "--snapshot-every", "200"],
        ),
        ("phaseplane-standing", ["phaseplane", *FIG]),
        ("phaseplane-equilibrium", ["phaseplane", *EQ]),
        (
            "stability",
            ["stability", *FIG, "--L", "40", "--h", h, "--dt", "0.001", "--T", T,
             "--eps", "0.001,0.01,0.1", "--kinds", "bump"],
        ),
    ]
    for name, argv in jobs:
        out = args.out / name
        code = run(argv + ["--out", str(out)])
        if code != 0:
            print(f"{name}: exited {code}", file=sys.stderr)
            return code
        print(f"{name}: ok -> {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
