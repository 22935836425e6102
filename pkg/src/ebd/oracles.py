"""Independent ground-truth decoders and enumerators.

Everything here is brute force or textbook machinery, kept deliberately
separate from the table-building decoders so the two can check each other.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .accounting import OpCounter
from .core import DecodeResult
from .gf2 import (GeneratorMatrix, ParityCheckMatrix, encode, hard_decision,
                  syndrome)

ENUMERATION_GUARD = 10**7
BRUTE_FORCE_MAX_K = 24


@dataclass(frozen=True)
class BlockSet:
    """All size-t blocks for one target, canonicalized as sorted tuples."""

    v: int
    t: int
    blocks: frozenset

    def repeat_free(self) -> frozenset:
        return frozenset(b for b in self.blocks if len(set(b)) == len(b))

    def with_repeats(self) -> frozenset:
        return frozenset(b for b in self.blocks if len(set(b)) < len(b))


def pattern_penalty(e: np.ndarray, lam: np.ndarray) -> float:
    """Sum of |lam| over the error pattern's support."""
    e = np.asarray(e)
    lam = np.asarray(lam, dtype=np.float64)
    if e.shape != lam.shape:
        raise ValueError(f"length mismatch: {e.shape} vs {lam.shape}")
    return float(np.abs(lam[e != 0]).sum())


def all_codewords(g: GeneratorMatrix) -> np.ndarray:
    """The full 2^k x n codebook (guarded)."""
    k = g.spec.k
    if k > BRUTE_FORCE_MAX_K:
        raise ValueError(f"codebook enumeration guarded at k <= {BRUTE_FORCE_MAX_K}")
    msgs = ((np.arange(1 << k, dtype=np.int64)[:, None]
             >> np.arange(k, dtype=np.int64)[None, :]) & 1).astype(np.uint8)
    return encode(g, msgs)


def brute_force_ml(g: GeneratorMatrix, lam: np.ndarray):
    """Exhaustive ML decode: maximize sum (1-2c)*lam over the codebook.

    Returns (codeword, pattern penalty of codeword relative to the hard
    decision); correlation ties go to the lexicographically smallest
    codeword.
    """
    lam = np.asarray(lam, dtype=np.float64)
    if lam.shape != (g.spec.n,):
        raise ValueError(f"lambda length {lam.shape} != n={g.spec.n}")
    book = all_codewords(g)
    corr = (1.0 - 2.0 * book) @ lam
    best = corr.max()
    ties = np.flatnonzero(corr == best)
    if ties.shape[0] > 1:
        winner = min(ties, key=lambda i: tuple(book[i]))
    else:
        winner = ties[0]
    cw = book[winner]
    b = hard_decision(lam)
    return cw.copy(), pattern_penalty(cw ^ b, lam)


def brute_force_penalties(g: GeneratorMatrix, lam_batch: np.ndarray) -> np.ndarray:
    """ML pattern penalties for a (B, n) batch of reliability vectors.

    Selects each winner by correlation, then sums the penalty directly so
    the result carries no cancellation error.
    """
    book = all_codewords(g)
    lam_batch = np.asarray(lam_batch, dtype=np.float64)
    corr = (1.0 - 2.0 * book) @ lam_batch.T  # (2^k, B)
    winners = book[corr.argmax(axis=0)]
    hard = (lam_batch < 0).astype(np.uint8)
    return (np.abs(lam_batch) * (winners ^ hard)).sum(axis=1)


def enumerate_blocks(h: ParityCheckMatrix, v: int, t: int) -> BlockSet:
    """Every multiset of t column indices (repeats allowed) XOR-ing to v."""
    n = h.spec.n
    if math.comb(n + t - 1, t) > ENUMERATION_GUARD:
        raise ValueError(
            f"enumeration of C({n + t - 1},{t}) multisets exceeds the guard")
    cols = h.columns
    found = []
    for combo in itertools.combinations_with_replacement(range(n), t):
        acc = 0
        for a in combo:
            acc ^= int(cols[a])
        if acc == v:
            found.append(combo)
    return BlockSet(v, t, frozenset(found))


def optimal_block_bruteforce(h: ParityCheckMatrix, lam: np.ndarray,
                             v: int, t: int):
    """Cheapest size-t block for v by enumeration; (None, inf) when none."""
    lam = np.asarray(lam, dtype=np.float64)
    abslam = np.abs(lam)
    best = None
    best_pen = math.inf
    for block in sorted(enumerate_blocks(h, v, t).blocks):
        pen = float(abslam[list(block)].sum())
        if pen < best_pen:
            best = block
            best_pen = pen
    return best, best_pen


def bruteforce_penalty_tables(h: ParityCheckMatrix, lam: np.ndarray,
                              sizes) -> dict:
    """Optimal penalty for every (t, v) pair, by one enumeration pass per t."""
    abslam = np.abs(np.asarray(lam, dtype=np.float64))
    n = h.spec.n
    cols = h.columns
    out = {}
    for t in sizes:
        if math.comb(n + t - 1, t) > ENUMERATION_GUARD:
            raise ValueError("enumeration guard exceeded")
        pen = np.full(1 << h.spec.q, math.inf)
        for combo in itertools.combinations_with_replacement(range(n), t):
            acc = 0
            cost = 0.0
            for a in combo:
                acc ^= int(cols[a])
                cost += abslam[a]
            if cost < pen[acc]:
                pen[acc] = cost
        out[t] = pen
    return out


def hdd_extended_hamming(h: ParityCheckMatrix, word: np.ndarray):
    """Hard-decision decode of one word: corrects single errors, returns
    None on a detected (uncorrectable) even-weight error."""
    s = syndrome(h, word)
    if s == 0:
        return np.asarray(word, dtype=np.uint8).copy()
    if s & 1:
        pos = int(np.flatnonzero(h.columns == s)[0])
        out = np.asarray(word, dtype=np.uint8).copy()
        out[pos] ^= 1
        return out
    return None


def chase2_decode(h: ParityCheckMatrix, lam: np.ndarray,
                  p: int = 2) -> DecodeResult:
    """Chase-II: perturb the p least-reliable positions (ties by index),
    hard-decision decode each test pattern, keep the candidate with the
    smallest pattern penalty relative to the hard decision.

    If no pattern decodes (possible only for p = 0 here), the hard decision
    is returned with is_codeword=False.
    """
    lam = np.asarray(lam, dtype=np.float64)
    if lam.shape != (h.spec.n,):
        raise ValueError(f"lambda length {lam.shape} != n={h.spec.n}")
    b = hard_decision(lam)
    positions = np.argsort(np.abs(lam), kind="stable")[:p]
    best = None
    best_pen = math.inf
    for mask in range(1 << p):
        test = b.copy()
        for j in range(p):
            if (mask >> j) & 1:
                test[positions[j]] ^= 1
        cand = hdd_extended_hamming(h, test)
        if cand is None:
            continue
        pen = pattern_penalty(cand ^ b, lam)
        if pen < best_pen:
            best = cand
            best_pen = pen
    if best is None:
        return DecodeResult(b.copy(), frozenset(), None, 0.0, OpCounter(),
                            is_codeword=False)
    flips = frozenset(int(i) for i in np.flatnonzero(best ^ b))
    return DecodeResult(best, flips, None, best_pen, OpCounter())
