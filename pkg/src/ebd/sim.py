"""Monte-Carlo frame-error-rate and complexity harness.

Frames are processed in fixed-size blocks of consecutive stream indices; the
stopping rule is evaluated at block boundaries in index order, so results are
identical for any worker count. A frame error is any output codeword that
differs from the transmitted one; operation averages cover only frames with
a nonzero syndrome, matching how decoding cost is reported.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

import numpy as np

from .accounting import OpCounter
from .channel import ChannelConfig, generate_frames
from .core import DecodeResult, decode_general
from .exham import decode_fullopt, decode_offopt
from .gf2 import (GeneratorMatrix, ParityCheckMatrix, derive_generator,
                  hard_decision, syndrome_batch)
from .oracles import brute_force_ml, chase2_decode

DEFAULT_BLOCK = 4096

CSV_COLUMNS = (
    "ebn0_db", "frames", "frame_errors", "fer", "nonzero_syndrome_frames",
    "avg_adds_finite", "avg_cmps_finite", "avg_adds_total", "avg_cmps_total",
    "avg_ops_finite", "avg_ops_total", "decoder", "code", "seed",
)


def make_decoder(name: str, h: ParityCheckMatrix, g: GeneratorMatrix):
    """Callable lam -> DecodeResult for one worker."""
    if name == "general":
        return lambda lam: decode_general(h, lam)
    if name == "offopt":
        return lambda lam: decode_offopt(h, lam)
    if name == "fullopt":
        return lambda lam: decode_fullopt(h, lam)
    if name == "chase2":
        return lambda lam: chase2_decode(h, lam)
    if name == "bruteforce":
        def _bf(lam):
            cw, pen = brute_force_ml(g, lam)
            b = hard_decision(lam)
            flips = frozenset(int(i) for i in np.flatnonzero(cw ^ b))
            return DecodeResult(cw, flips, None, pen, OpCounter())
        return _bf
    raise ValueError(f"unknown decoder {name!r}")


@dataclass
class FerRecord:
    ebn0_db: float
    frames: int
    frame_errors: int
    fer: float
    nonzero_syndrome_frames: int
    avg_adds_finite: float
    avg_cmps_finite: float
    avg_adds_total: float
    avg_cmps_total: float
    decoder: str
    code: str
    seed: int

    @property
    def avg_ops_finite(self) -> float:
        return self.avg_adds_finite + self.avg_cmps_finite

    @property
    def avg_ops_total(self) -> float:
        return self.avg_adds_total + self.avg_cmps_total

    def as_dict(self) -> dict:
        d = {c: getattr(self, c) for c in CSV_COLUMNS}
        return d

    def csv_row(self) -> str:
        vals = []
        for c in CSV_COLUMNS:
            v = getattr(self, c)
            vals.append(f"{v:.10g}" if isinstance(v, float) else str(v))
        return ",".join(vals)


@dataclass
class _BlockStats:
    frames: int = 0
    errors: int = 0
    nonzero: int = 0
    adds_finite: int = 0
    cmps_finite: int = 0
    adds_inf: int = 0
    cmps_inf: int = 0

    def merge(self, other: "_BlockStats") -> None:
        self.frames += other.frames
        self.errors += other.errors
        self.nonzero += other.nonzero
        self.adds_finite += other.adds_finite
        self.cmps_finite += other.cmps_finite
        self.adds_inf += other.adds_inf
        self.cmps_inf += other.cmps_inf


def _run_block(h, g, decoder_name, cfg, start, count) -> _BlockStats:
    decode = make_decoder(decoder_name, h, g)
    tx, lam = generate_frames(g, cfg, start, count)
    hard = (lam < 0).astype(np.uint8)
    syn = syndrome_batch(h, hard)
    stats = _BlockStats(frames=count)
    zero_mask = syn == 0
    stats.errors += int((hard[zero_mask] != tx[zero_mask]).any(axis=1).sum())
    for i in np.flatnonzero(~zero_mask):
        res = decode(lam[i])
        if not np.array_equal(res.codeword, tx[i]):
            stats.errors += 1
        stats.nonzero += 1
        ops = res.ops
        stats.adds_finite += ops.adds_finite
        stats.cmps_finite += ops.cmps_finite
        stats.adds_inf += ops.adds_inf
        stats.cmps_inf += ops.cmps_inf
    return stats


def _block_task(args):
    h, g, decoder_name, cfg, start, count = args
    return _run_block(h, g, decoder_name, cfg, start, count)


def run_fer_point(h: ParityCheckMatrix, g: GeneratorMatrix, decoder: str,
                  ebn0_db: float, max_frames: int, max_errors: int,
                  seed: int, message_mode: str = "random",
                  code_label: str = "", block_size: int = DEFAULT_BLOCK,
                  workers: int = 1) -> FerRecord:
    """Simulate one Eb/N0 point until max_frames or max_errors frame errors.

    Deterministic for a fixed configuration regardless of worker count.
    """
    if max_frames < 1:
        raise ValueError("max_frames must be >= 1")
    cfg = ChannelConfig(ebn0_db=ebn0_db, rate=h.spec.rate, seed=seed,
                        message_mode=message_mode)
    blocks = []
    start = 0
    while start < max_frames:
        count = min(block_size, max_frames - start)
        blocks.append((start, count))
        start += count

    total = _BlockStats()

    def consume(results) -> bool:
        for st in results:
            total.merge(st)
            if total.errors >= max_errors:
                return True
        return False

    if workers > 1:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(workers) as pool:
            wave = workers * 2
            for w0 in range(0, len(blocks), wave):
                chunk = blocks[w0:w0 + wave]
                args = [(h, g, decoder, cfg, s, c) for s, c in chunk]
                if consume(pool.map(_block_task, args)):
                    break
    else:
        for s, c in blocks:
            if consume([_run_block(h, g, decoder, cfg, s, c)]):
                break

    nz = max(total.nonzero, 1)
    return FerRecord(
        ebn0_db=ebn0_db,
        frames=total.frames,
        frame_errors=total.errors,
        fer=total.errors / total.frames,
        nonzero_syndrome_frames=total.nonzero,
        avg_adds_finite=total.adds_finite / nz,
        avg_cmps_finite=total.cmps_finite / nz,
        avg_adds_total=(total.adds_finite + total.adds_inf) / nz,
        avg_cmps_total=(total.cmps_finite + total.cmps_inf) / nz,
        decoder=decoder,
        code=code_label,
        seed=seed,
    )


def run_fer(h: ParityCheckMatrix, decoder: str, ebn0_list, max_frames: int,
            max_errors: int, seed: int, message_mode: str = "random",
            code_label: str = "", block_size: int = DEFAULT_BLOCK,
            workers: int = 1) -> list[FerRecord]:
    g = derive_generator(h)
    return [
        run_fer_point(h, g, decoder, e, max_frames, max_errors, seed,
                      message_mode, code_label, block_size, workers)
        for e in ebn0_list
    ]


def offopt_op_counts(h: ParityCheckMatrix, seed: int = 7,
                     frames_per_class: int = 100, ebn0_db: float = 3.0):
    """Measured offline-excluded finite-op count per syndrome parity.

    Asserts the count is constant within each class; returns {s0: count}.
    """
    g = derive_generator(h)
    cfg = ChannelConfig(ebn0_db=ebn0_db, rate=h.spec.rate, seed=seed)
    counts: dict[int, set] = {0: set(), 1: set()}
    seen = {0: 0, 1: 0}
    start = 0
    while min(seen.values()) < frames_per_class:
        tx, lam = generate_frames(g, cfg, start, 512)
        start += 512
        hard = (lam < 0).astype(np.uint8)
        syn = syndrome_batch(h, hard)
        for i in np.flatnonzero(syn != 0):
            s0 = int(syn[i]) & 1
            if seen[s0] >= frames_per_class:
                continue
            res = decode_offopt(h, lam[i])
            counts[s0].add(res.ops.finite_total)
            seen[s0] += 1
        if start > 10**7:
            raise RuntimeError("could not collect enough nonzero syndromes")
    for s0, vals in counts.items():
        if len(vals) != 1:
            raise AssertionError(
                f"offopt op count not constant for s0={s0}: {sorted(vals)}")
    return {s0: vals.pop() for s0, vals in counts.items()}
