#!/usr/bin/env python3
"""Generate the standard curve data for the dimer quantifiers.

Writes one CSV per quantifier family over a full period of the scattering
phase, plus a JSON summary with the window endpoints, so the curves can be
plotted or diffed without rerunning the library.

Usage:
    python scripts/make_figure_data.py --out-dir data/ [--samples 1001]
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

import numpy as np

from spindimer.cli import SweepConfig, run_sweep
from spindimer.quantifiers import (
    bell_violation_window,
    concurrence_window,
    witness_window,
)

CURVES = {
    "correlation": ("S", "ReC"),
    "witness": ("witness",),
    "entanglement": ("concurrence", "eof", "witness"),
    "bell": ("bell",),
    "discord": ("discord_verbatim", "discord_figure", "eof"),
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", type=Path, default=Path("figure_data"))
    parser.add_argument("--samples", type=int, default=1001)
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    for name, quantifiers in CURVES.items():
        out = args.out_dir / f"{name}.csv"
        run_sweep(
            SweepConfig(
                x_from=0.0,
                x_to=2.0 * np.pi,
                samples=args.samples,
                quantifiers=quantifiers,
                out=out,
                fmt="csv",
            )
        )
        print(f"wrote {out}")

    windows = {
        "witness_negative": list(witness_window()),
        "concurrence_positive": list(concurrence_window()),
        "bell_violation": list(bell_violation_window()),
    }
    summary = args.out_dir / "windows.json"
    summary.write_text(json.dumps(windows, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {summary}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
