#!/usr/bin/env python3
"""Run the entanglement-positivity scan at desk scale and summarize.

Usage: run_conjecture_scan.py [samples] [seed] [out.json]

Scans half Ginibre / half separable samples of the 2x2 block shape, prints
the delta statistics of both subsets and every counterexample (an entangled
sample with delta <= tol), and optionally writes the full JSON report.
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from puritylab.density import BlockShape
from puritylab.fileio import write_scan_report
from puritylab.sweep import scan_conjecture


def main() -> int:
    samples = int(sys.argv[1]) if len(sys.argv) > 1 else 10_000
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 2024
    report = scan_conjecture(BlockShape(2, 2), samples=samples, seed=seed)

    for label, stats in (("entangled", report.entangled_stats),
                         ("separable", report.separable_stats)):
        if stats.count == 0:
            print(f"{label}: no samples")
            continue
        print(f"{label}: {stats.count} states, delta in "
              f"[{stats.min_delta:.6f}, {stats.max_delta:.6f}], "
              f"mean {stats.mean_delta:.6f}")
    if report.counterexamples:
        print(f"{len(report.counterexamples)} counterexample(s):")
        for sample in report.counterexamples:
            print(f"  index {sample.index} kind {sample.kind} size {sample.size} "
                  f"seed {sample.seed}: delta = {sample.delta:.6e}")
    else:
        print("no counterexamples: delta > 0 on every entangled sample")

    if len(sys.argv) > 3:
        write_scan_report(report, sys.argv[3])
        print(f"report written to {sys.argv[3]}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
