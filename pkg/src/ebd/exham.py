"""Exclusion-optimized decoding for extended Hamming codes.

The canonical parity check has an all-ones first row, so every column sits
in the odd-parity class Y. A block of size t XORs to a target whose bit 0 is
t mod 2: odd-size blocks for even-parity targets (class W) cannot exist, and
even-size blocks for odd-parity targets are impossible too, which fixes most
tables as empty offline. Online exclusion additionally empties any computed
entry whose penalty cannot beat the running best for the syndrome.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import _kernels
from .accounting import OpCounter
from .core import (DecodeFailureError, DecodeResult, LevelTable,
                   _check_table_q, init_level_one, reconstruct_block,
                   reduce_block)
from .gf2 import ParityCheckMatrix, hard_decision, syndrome


class ParityClass(enum.Enum):
    ZERO = "zero"
    W = "w"  # nonzero, bit 0 clear
    Y = "y"  # bit 0 set


class Scope(enum.Enum):
    ALL_W = "all-w"
    ALL_Y = "all-y"
    SYNDROME_ONLY = "syndrome"


def classify(v: int) -> ParityClass:
    if v == 0:
        return ParityClass.ZERO
    return ParityClass.Y if v & 1 else ParityClass.W


@dataclass(frozen=True)
class ScheduleStep:
    t: int
    t1: int
    t2: int
    scope: Scope
    symmetric: bool

    def __post_init__(self):
        if self.t != self.t1 + self.t2:
            raise ValueError("split sizes must sum to t")
        if self.symmetric and self.t1 != self.t2:
            raise ValueError("symmetric step needs t1 == t2")


@dataclass(frozen=True)
class Schedule:
    q: int
    s0: int
    steps: tuple[ScheduleStep, ...]
    candidate_sizes: tuple[int, ...]

    def notation(self) -> str:
        """Compact rendering: [class-wide sizes], (syndrome-only sizes),
        tilde marking pair-halved symmetric steps."""
        def mark(step: ScheduleStep) -> str:
            return f"{step.t}̃" if step.symmetric else f"{step.t}"

        bracketed = ["1"] + [mark(s) for s in self.steps
                             if s.scope is not Scope.SYNDROME_ONLY]
        parens = [mark(s) for s in self.steps
                  if s.scope is Scope.SYNDROME_ONLY]
        return f"[{','.join(bracketed)}], ({','.join(parens)})"


@lru_cache(maxsize=None)
def build_schedule(q: int, s0: int) -> Schedule:
    """Iterative construction plan for an extended Hamming code with
    redundancy q, specialised on the syndrome's parity bit s0."""
    if q < 4:
        raise ValueError(f"schedule needs q >= 4, got {q}")
    if s0 not in (0, 1):
        raise ValueError("s0 must be 0 or 1")
    qe = q if q % 2 == 0 else q - 1
    qo = q if q % 2 == 1 else q - 1
    steps: list[ScheduleStep] = []
    built = {1}

    def add(t, t1, t2, scope, symmetric=False):
        if t1 not in built or t2 not in built:
            raise AssertionError(f"step {t}=({t1},{t2}) uses an unbuilt table")
        steps.append(ScheduleStep(t, t1, t2, scope, symmetric))
        built.add(t)

    def add_final(t, w, scope=Scope.SYNDROME_ONLY):
        # symmetric split whenever the half-size class table exists
        if t % 2 == 0 and t // 2 in built:
            add(t, t // 2, t // 2, scope, symmetric=True)
        else:
            add(t, t - w, w, scope)

    if s0 == 0:  # even-parity syndrome: even sizes only
        w = qe // 2 if (qe // 2) % 2 == 0 else qe // 2 + 1
        add(2, 1, 1, Scope.ALL_W, symmetric=True)
        for t in range(4, w + 1, 2):
            if (t // 2) % 2 == 0:
                add(t, t // 2, t // 2, Scope.ALL_W, symmetric=True)
            else:
                add(t, t - 2, 2, Scope.ALL_W)
        for t in range(w + 2, qe + 1, 2):
            add_final(t, w)
        candidates = tuple(range(2, qe + 1, 2))
    else:  # odd-parity syndrome: odd sizes only
        half = (qo + 1) // 2
        add(2, 1, 1, Scope.ALL_W, symmetric=True)
        if half % 2 == 0:
            w = half
            for t in range(3, w, 2):
                add(t, t - 2, 2, Scope.ALL_Y)
            if w != 2:
                if w // 2 == 2 or (w // 2) % 2 == 1:
                    add(w, w // 2, w // 2, Scope.ALL_W, symmetric=True)
                else:
                    add(w, w - 1, 1, Scope.ALL_W)
        else:
            w = half + 1
            for t in range(3, w - 2, 2):
                add(t, t - 2, 2, Scope.ALL_Y)
            add(w - 1, w - 3, 2, Scope.SYNDROME_ONLY)
            if w // 2 == 2 or (w // 2) % 2 == 1:
                add(w, w // 2, w // 2, Scope.ALL_W, symmetric=True)
            else:
                add(w, w - 3, 3, Scope.ALL_W)
        for t in range(w + 1, qo + 1, 2):
            add_final(t, w)
        candidates = tuple(range(1, qo + 1, 2))
    return Schedule(q, s0, tuple(steps), candidates)


def validate_extended_hamming(h: ParityCheckMatrix) -> None:
    """Accept only the all-ones-first-row form at full length 2^(q-1)."""
    q, n = h.spec.q, h.spec.n
    if q < 4:
        raise ValueError(f"extended-Hamming decoding needs q >= 4, got q={q}")
    if n != 1 << (q - 1):
        raise ValueError(f"expected n = 2^(q-1) = {1 << (q - 1)}, got n={n}")
    if np.any((h.columns & 1) == 0):
        raise ValueError("parity check lacks the all-ones row at bit 0")
    if np.unique(h.columns).shape[0] != n:
        raise ValueError("parity-check columns are not distinct")


@dataclass
class OnlineState:
    """Filtered working copies of the per-size tables.

    d_pen[t] is the penalty array last filtered at threshold[t]; a filtered
    entry is empty iff it was empty before or its penalty failed the strict
    comparison against the threshold. Thresholds never increase. The running
    best tracks the cheapest syndrome entry produced so far.
    """

    d_pen: dict = field(default_factory=dict)
    threshold: dict = field(default_factory=dict)
    refreshed_at: dict = field(default_factory=dict)
    best_penalty: float = math.inf
    best_size: int | None = None


def filter_table(table: LevelTable, threshold: float,
                 counter: OpCounter | None = None) -> LevelTable:
    """Copy of `table` with entries at penalty >= threshold emptied.

    One finite comparison per finite entry examined; an infinite threshold
    excludes nothing and costs nothing.
    """
    out = table.copy()
    if math.isfinite(threshold):
        examined = _kernels.filter_finite(out.penalty, threshold)
        if counter is not None:
            counter.add_bulk(cmps_finite=examined)
        out.ref[~np.isfinite(out.penalty)] = -1
    return out


def refresh_filter_inplace(state: OnlineState, size: int, threshold: float,
                           counter: OpCounter | None = None,
                           step_index: int | None = None) -> None:
    """Bring the size's filtered table up to `threshold`.

    Reuses the previous result when the threshold is unchanged (or was never
    finite); otherwise re-filters only the currently surviving entries.
    """
    if size not in state.d_pen:
        raise KeyError(f"no filtered table for size {size}")
    last = state.threshold[size]
    if threshold == last:
        return
    if math.isfinite(threshold):
        examined = _kernels.filter_finite(state.d_pen[size], threshold)
        if counter is not None:
            counter.add_bulk(cmps_finite=examined)
    state.threshold[size] = threshold
    if step_index is not None:
        state.refreshed_at[size] = step_index


def decode_offopt(h: ParityCheckMatrix, lam: np.ndarray,
                  counter: OpCounter | None = None) -> DecodeResult:
    """Extended-Hamming decode with offline exclusion only."""
    return _decode_exham(h, lam, online=False, counter=counter)[0]


def decode_fullopt(h: ParityCheckMatrix, lam: np.ndarray,
                   counter: OpCounter | None = None) -> DecodeResult:
    """Extended-Hamming decode with offline and online exclusion."""
    return _decode_exham(h, lam, online=True, counter=counter)[0]


def _class_targets(q: int):
    n = 1 << q
    vals = np.arange(n, dtype=np.int64)
    w = vals[(vals & 1) == 0][1:]  # drop 0
    y = vals[(vals & 1) == 1]
    return w, y


def _decode_exham(h: ParityCheckMatrix, lam: np.ndarray, online: bool,
                  counter: OpCounter | None = None):
    counter = counter if counter is not None else OpCounter()
    validate_extended_hamming(h)
    lam = np.asarray(lam, dtype=np.float64)
    b = hard_decision(lam)
    s = syndrome(h, b)
    if s == 0:
        return DecodeResult(b, frozenset(), None, 0.0, counter.snapshot()), {}
    q = h.spec.q
    _check_table_q(q)
    schedule = build_schedule(q, s & 1)
    tables = {1: init_level_one(h, lam, counter)}
    w_targets, y_targets = _class_targets(q)
    s_arr = np.array([s], dtype=np.int64)
    s_class = classify(s)
    state = OnlineState()
    if online:
        state.d_pen[1] = tables[1].penalty.copy()
        state.threshold[1] = math.inf
    if s & 1:
        state.best_penalty = float(tables[1].penalty[s])
        state.best_size = 1

    for idx, step in enumerate(schedule.steps):
        if online:
            refresh_filter_inplace(state, step.t1, state.best_penalty,
                                   counter, idx)
            if step.t2 != step.t1:
                refresh_filter_inplace(state, step.t2, state.best_penalty,
                                       counter, idx)
            pa, pb = state.d_pen[step.t1], state.d_pen[step.t2]
        else:
            pa, pb = tables[step.t1].penalty, tables[step.t2].penalty
        if step.scope is Scope.ALL_W:
            targets = w_targets
        elif step.scope is Scope.ALL_Y:
            targets = y_targets
        else:
            targets = s_arr
        cands = np.flatnonzero(np.isfinite(pa))
        pen, ref, adds, cmps = _kernels.combine_targets(
            pa, pb, cands, targets, step.symmetric)
        counter.add_bulk(adds_finite=adds, cmps_finite=cmps)
        tables[step.t] = LevelTable(step.t, pen, ref, (step.t1, step.t2))
        if online:
            state.d_pen[step.t] = pen.copy()
            state.threshold[step.t] = math.inf
        produces_s = (step.scope is Scope.SYNDROME_ONLY
                      or (step.scope is Scope.ALL_W and s_class is ParityClass.W)
                      or (step.scope is Scope.ALL_Y and s_class is ParityClass.Y))
        if produces_s:
            p = float(pen[s])
            if math.isfinite(p):
                if not math.isfinite(state.best_penalty):
                    state.best_penalty = p
                    state.best_size = step.t
                else:
                    counter.record_cmp(True)
                    if p < state.best_penalty:
                        state.best_penalty = p
                        state.best_size = step.t
    if state.best_size is None:
        raise DecodeFailureError("no finite block penalty for the syndrome")
    flips = reduce_block(reconstruct_block(tables, state.best_size, s))
    codeword = b.copy()
    codeword[list(flips)] ^= 1
    per_size = tuple((t, float(tables[t].penalty[s]) if t in tables else math.inf)
                     for t in schedule.candidate_sizes)
    result = DecodeResult(codeword, flips, state.best_size,
                          state.best_penalty, counter.snapshot(), per_size)
    return result, tables
