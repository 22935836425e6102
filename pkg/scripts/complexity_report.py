#!/usr/bin/env python3
"""Decoding-cost report for extended Hamming codes.

Prints the deterministic per-decode cost of the offline-optimized decoder
(one number per syndrome parity) and the measured average cost of the fully
optimized decoder across Eb/N0 points, alongside the FER so the averages can
be read off at a target error rate.

Example:
    python scripts/complexity_report.py --m 6 --ebn0 5.0,5.6,6.2 --frames 500000
"""

import argparse

from ebd.gf2 import build_extended_hamming_parity_check
from ebd.sim import offopt_op_counts, run_fer

def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, default=6)
    ap.add_argument("--ebn0", default="5.0,5.6,6.2")
    ap.add_argument("--frames", type=int, default=200_000)
    ap.add_argument("--seed", type=int, default=101)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    h = build_extended_hamming_parity_check(args.m)
    label = f"({h.spec.n},{h.spec.k},4)"
    counts = offopt_op_counts(h, seed=args.seed)
    print(f"{label} offline-optimized finite ops per decode:")
    print(f"  s[0]=0: {counts[0]}    s[0]=1: {counts[1]}")

    ebn0 = [float(x) for x in args.ebn0.split(",")]
    records = run_fer(h, "fullopt", ebn0, args.frames, 10**9, args.seed,
                      code_label=label, workers=args.workers)
    print(f"{label} fully-optimized average finite ops "
          f"(nonzero-syndrome frames):")
    print(f"  {'Eb/N0':>6}  {'FER':>10}  {'avg ops':>9}  {'frames':>9}")
    for r in records:
        print(f"  {r.ebn0_db:>6.2f}  {r.fer:>10.3e}  "
              f"{r.avg_ops_finite:>9.1f}  {r.frames:>9}")


if __name__ == "__main__":
    main()
