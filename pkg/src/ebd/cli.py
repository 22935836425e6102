"""Command-line harness: decode traces, FER sweeps, complexity tables,
block enumeration, schedule printing, golden-table verification."""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .channel import ChannelConfig, generate_frame
from .exham import build_schedule
from .gf2 import (ParityCheckMatrix, build_extended_hamming_parity_check,
                  build_hamming_parity_check, derive_generator,
                  load_parity_check, syndrome)
from .oracles import enumerate_blocks
from .sim import CSV_COLUMNS, make_decoder, offopt_op_counts, run_fer

TABLE1_OFFOPT = {  # code length -> {s0: finite ops per decode}
    64: {0: 7937, 1: 16065},
    128: {0: 32383, 1: 64897},
    256: {0: 130303, 1: 261885},
}

TABLE2_SCHEDULES = {  # (q, s0) -> ([class-wide (t, symmetric)], [syndrome-only])
    (6, 0): ([(2, True), (4, True)], [(6, False)]),
    (6, 1): ([(2, True), (4, True)], [(3, False), (5, False)]),
    (7, 0): ([(2, True), (4, True)], [(6, False)]),
    (7, 1): ([(2, True), (3, False), (4, True)], [(5, False), (7, False)]),
    (8, 0): ([(2, True), (4, True)], [(6, False), (8, True)]),
    (8, 1): ([(2, True), (3, False), (4, True)], [(5, False), (7, False)]),
    (9, 0): ([(2, True), (4, True)], [(6, False), (8, True)]),
    (9, 1): ([(2, True), (3, False), (6, True)], [(5, False), (7, False), (9, False)]),
    (10, 0): ([(2, True), (4, True), (6, False)], [(8, True), (10, False)]),
    (10, 1): ([(2, True), (3, False), (6, True)], [(5, False), (7, False), (9, False)]),
}


def resolve_code(args) -> tuple[ParityCheckMatrix, str]:
    if getattr(args, "parity_check", None):
        return load_parity_check(args.parity_check), f"file:{args.parity_check}"
    sel = getattr(args, "code", None)
    if not sel:
        raise SystemExit("need --code or --parity-check")
    try:
        family, m = sel.split(":")
        m = int(m)
    except ValueError:
        raise SystemExit(f"bad --code {sel!r}; use hamming:<m> or exthamming:<m>")
    if family == "hamming":
        return build_hamming_parity_check(m), sel
    if family == "exthamming":
        return build_extended_hamming_parity_check(m), sel
    raise SystemExit(f"unknown code family {family!r}")


def _load_lambda(path: str, n: int) -> np.ndarray:
    with open(path) as fh:
        vals = [float(line) for line in fh.read().split()]
    if len(vals) != n:
        raise SystemExit(f"{path}: expected {n} reliability values, got {len(vals)}")
    return np.array(vals, dtype=np.float64)


def cmd_decode(args) -> int:
    h, label = resolve_code(args)
    g = derive_generator(h)
    if args.lambda_file:
        lam = _load_lambda(args.lambda_file, h.spec.n)
    else:
        cfg = ChannelConfig(ebn0_db=args.ebn0[0], rate=h.spec.rate,
                            seed=args.seed, message_mode=args.message_mode)
        lam = generate_frame(g, cfg, args.frame_index).lam
    res = make_decoder(args.decoder, h, g)(lam)
    s = syndrome(h, (lam < 0).astype(np.uint8))
    print(f"code={label} decoder={args.decoder} n={h.spec.n} k={h.spec.k} "
          f"q={h.spec.q} syndrome={s}")
    for t, pen in res.per_size:
        print(f"  size {t}: penalty {pen:.6g}")
    flips = sorted(res.flip_set)
    print(f"chosen size: {res.chosen_size}")
    print(f"flip set: {flips}")
    print(f"penalty: {res.penalty:.6g}")
    print(f"ops: finite adds={res.ops.adds_finite} cmps={res.ops.cmps_finite} "
          f"(total incl +inf: adds={res.ops.adds_finite + res.ops.adds_inf} "
          f"cmps={res.ops.cmps_finite + res.ops.cmps_inf})")
    if args.out:
        payload = {
            "code": label, "decoder": args.decoder, "syndrome": s,
            "per_size": [[t, p] for t, p in res.per_size],
            "chosen_size": res.chosen_size, "flip_set": flips,
            "penalty": res.penalty, "is_codeword": res.is_codeword,
            "ops": res.ops.as_dict(),
        }
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    return 0


def _emit_records(records, out, fmt) -> None:
    if fmt == "csv":
        lines = [",".join(CSV_COLUMNS)] + [r.csv_row() for r in records]
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps([r.as_dict() for r in records], indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_fer(args) -> int:
    h, label = resolve_code(args)
    if args.decoder in ("offopt", "fullopt"):
        from .exham import validate_extended_hamming
        validate_extended_hamming(h)
    records = run_fer(h, args.decoder, args.ebn0, args.frames,
                      args.frame_errors, args.seed,
                      message_mode=args.message_mode, code_label=label,
                      block_size=args.block_size, workers=args.workers)
    _emit_records(records, args.out, args.format)
    return 0


def cmd_complexity(args) -> int:
    h, label = resolve_code(args)
    from .exham import validate_extended_hamming
    validate_extended_hamming(h)
    if args.decoder == "offopt":
        counts = offopt_op_counts(h, seed=args.seed,
                                  frames_per_class=args.frames_per_class)
        print(f"code={label} decoder=offopt finite ops per decode "
              f"(constant given the syndrome parity):")
        for s0 in (0, 1):
            print(f"  s[0]={s0}: {counts[s0]}")
        return 0
    records = run_fer(h, "fullopt", args.ebn0, args.frames,
                      args.frame_errors, args.seed, code_label=label,
                      block_size=args.block_size, workers=args.workers)
    print(f"code={label} decoder=fullopt "
          f"(ops averaged over nonzero-syndrome frames):")
    print(f"{'Eb/N0 (dB)':>10} {'FER':>12} {'avg finite ops':>15} {'frames':>10}")
    for r in records:
        print(f"{r.ebn0_db:>10.2f} {r.fer:>12.4e} {r.avg_ops_finite:>15.1f} "
              f"{r.frames:>10}")
    if args.out:
        _emit_records(records, args.out, args.format)
    return 0


def cmd_enumerate(args) -> int:
    h, label = resolve_code(args)
    bs = enumerate_blocks(h, args.v, args.t)
    blocks = sorted(bs.blocks)
    print(f"code={label} target v={args.v} size t={args.t}: "
          f"{len(blocks)} block(s)")
    for blk in blocks:
        print("  ⟦" + ",".join(str(a) for a in blk) + "⟧")
    return 0


def cmd_schedule(args) -> int:
    sched = build_schedule(args.q, args.s0)
    print(f"q={args.q} s0={args.s0}: {sched.notation()}")
    for step in sched.steps:
        scope = {"all-w": "all W", "all-y": "all Y",
                 "syndrome": "syndrome only"}[step.scope.value]
        sym = " (pair-halved)" if step.symmetric else ""
        print(f"  size {step.t} = {step.t1} + {step.t2}, {scope}{sym}")
    print(f"candidate sizes: {list(sched.candidate_sizes)}")
    return 0


def verify_tables(schedule_expectations=None, offopt_expectations=None,
                  seed: int = 7):
    """Golden check of the schedule generator and offline-excluded counts.

    Returns (ok, report_lines); expectation overrides exist for testing the
    failure path.
    """
    sched_exp = schedule_expectations or TABLE2_SCHEDULES
    off_exp = offopt_expectations or TABLE1_OFFOPT
    lines = []
    ok = True
    for (q, s0), (exp_class, exp_synd) in sorted(sched_exp.items()):
        sched = build_schedule(q, s0)
        got_class = [(s.t, s.symmetric) for s in sched.steps
                     if s.scope.value != "syndrome"]
        got_synd = [(s.t, s.symmetric) for s in sched.steps
                    if s.scope.value == "syndrome"]
        if (got_class, got_synd) == (list(exp_class), list(exp_synd)):
            lines.append(f"PASS schedule q={q} s0={s0}: {sched.notation()}")
        else:
            ok = False
            lines.append(
                f"FAIL schedule q={q} s0={s0}: expected {exp_class}+{exp_synd}, "
                f"got {got_class}+{got_synd}")
    for length, exp in sorted(off_exp.items()):
        m = length.bit_length() - 1
        h = build_extended_hamming_parity_check(m)
        counts = offopt_op_counts(h, seed=seed, frames_per_class=20)
        for s0 in (0, 1):
            if counts[s0] == exp[s0]:
                lines.append(f"PASS offopt ({length},{length - m - 1},4) "
                             f"s0={s0}: {counts[s0]} finite ops")
            else:
                ok = False
                lines.append(f"FAIL offopt ({length},{length - m - 1},4) "
                             f"s0={s0}: expected {exp[s0]}, got {counts[s0]}")
    return ok, lines


def cmd_verify_tables(args) -> int:
    ok, lines = verify_tables(seed=args.seed)
    for line in lines:
        print(line)
    print("ALL PASS" if ok else "FAILURES PRESENT")
    return 0 if ok else 1


def _parse_ebn0(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ebd",
        description="Soft-decision ML decoding of binary linear block codes "
                    "from the parity-check matrix, with an AWGN FER harness.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_code_flags(p):
        p.add_argument("--code", help="hamming:<m> or exthamming:<m>")
        p.add_argument("--parity-check", help="text matrix file: 'N K' header "
                       "then q rows of N bits")

    p = sub.add_parser("decode", help="trace a single-frame decode")
    add_code_flags(p)
    p.add_argument("--decoder", default="general",
                   choices=["general", "offopt", "fullopt", "chase2",
                            "bruteforce"])
    p.add_argument("--lambda-file", help="reliability vector, one value per line")
    p.add_argument("--ebn0", type=_parse_ebn0, default=[3.0])
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--frame-index", type=int, default=0)
    p.add_argument("--message-mode", default="random", choices=["random", "zero"])
    p.add_argument("--out", help="write a JSON trace here")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("fer", help="frame-error-rate sweep")
    add_code_flags(p)
    p.add_argument("--decoder", default="general",
                   choices=["general", "offopt", "fullopt", "chase2",
                            "bruteforce"])
    p.add_argument("--ebn0", type=_parse_ebn0, required=True,
                   help="comma-separated dB list")
    p.add_argument("--frames", type=int, default=10000)
    p.add_argument("--frame-errors", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--message-mode", default="random", choices=["random", "zero"])
    p.add_argument("--block-size", type=int, default=4096)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--format", default="csv", choices=["csv", "json"])
    p.set_defaults(func=cmd_fer)

    p = sub.add_parser("complexity", help="operation-count measurements")
    add_code_flags(p)
    p.add_argument("--decoder", default="offopt", choices=["offopt", "fullopt"])
    p.add_argument("--ebn0", type=_parse_ebn0, default=[3.0])
    p.add_argument("--frames", type=int, default=100000)
    p.add_argument("--frame-errors", type=int, default=10**9)
    p.add_argument("--frames-per-class", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--block-size", type=int, default=4096)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--format", default="csv", choices=["csv", "json"])
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("enumerate", help="list all size-t blocks for a target")
    add_code_flags(p)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("schedule", help="print the construction schedule")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s0", type=int, required=True, choices=[0, 1])
    p.set_defaults(func=cmd_schedule)

    p = sub.add_parser("verify-tables",
                       help="golden checks of schedules and offopt op counts")
    p.add_argument("--seed", type=int, default=7)
    p.set_defaults(func=cmd_verify_tables)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
