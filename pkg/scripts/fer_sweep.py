#!/usr/bin/env python3
"""FER sweep for extended Hamming codes: ML decoding vs Chase-II.

Writes one CSV per decoder; feed the output to any external plotter.

Example:
    python scripts/fer_sweep.py --m 6 --ebn0 3,3.5,4,4.5,5,5.5 \
        --frames 200000 --frame-errors 300 --out-dir results/
"""

import argparse
import pathlib

from ebd.gf2 import build_extended_hamming_parity_check
from ebd.sim import CSV_COLUMNS, run_fer


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, default=6,
                    help="extension order: code length is 2^m")
    ap.add_argument("--ebn0", default="3,3.5,4,4.5,5",
                    help="comma-separated dB list")
    ap.add_argument("--decoders", default="fullopt,chase2",
                    help="comma-separated subset of "
                         "general,offopt,fullopt,chase2")
    ap.add_argument("--frames", type=int, default=100_000)
    ap.add_argument("--frame-errors", type=int, default=200)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out-dir", default="results")
    args = ap.parse_args()

    ebn0 = [float(x) for x in args.ebn0.split(",")]
    h = build_extended_hamming_parity_check(args.m)
    label = f"exthamming:{args.m}"
    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for dec in args.decoders.split(","):
        records = run_fer(h, dec, ebn0, args.frames, args.frame_errors,
                          args.seed, code_label=label, workers=args.workers)
        path = out_dir / f"fer_{label.replace(':', '')}_{dec}.csv"
        with open(path, "w") as fh:
            fh.write(",".join(CSV_COLUMNS) + "\n")
            for r in records:
                fh.write(r.csv_row() + "\n")
        print(f"{dec}: wrote {path}")
        for r in records:
            print(f"  {r.ebn0_db:5.2f} dB  FER {r.fer:.4e}  "
                  f"({r.frame_errors}/{r.frames})")


if __name__ == "__main__":
    main()
