#!/usr/bin/env python3
"""Trace the checked-in (15,11) worked-example frame step by step."""

import pathlib

import numpy as np

from ebd.core import decode_general
from ebd.gf2 import build_hamming_parity_check, hard_decision, syndrome

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def main():
    h = build_hamming_parity_check(4)
    lam = np.loadtxt(DATA / "fig1_lambda.txt")
    b = hard_decision(lam)
    print("reliability:", np.array2string(lam, precision=2))
    print("hard decision:", "".join(map(str, b)), "| syndrome:", syndrome(h, b))
    res = decode_general(h, lam)
    for t, pen in res.per_size:
        star = "  <- chosen" if t == res.chosen_size else ""
        print(f"  best size-{t} block penalty: {pen:.4g}{star}")
    print("flip set:", sorted(res.flip_set), "| penalty:", res.penalty)
    print(f"ops: {res.ops.finite_total} finite, {res.ops.total} incl. +inf")
    print("codeword:", "".join(map(str, res.codeword)))


if __name__ == "__main__":
    main()
