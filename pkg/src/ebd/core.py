"""General error-building decoding framework.

Decoding searches for the cheapest multiset of parity-check columns whose
XOR equals the syndrome ("error-building block"). Level-1 blocks come
straight from the columns; a size-(t1+t2) block for v is built by scanning
decomposition values vi and combining the best size-t1 block for vi with the
best size-t2 block for vi^v. The global optimum lives at some size t <= q,
and its reduced form (odd-multiplicity members) is the ML flip set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _kernels
from .accounting import OpCounter
from .gf2 import ParityCheckMatrix, hard_decision, syndrome

MAX_TABLE_Q = 20  # dense 2^q tables; guard against accidental blowups


class DecodeFailureError(RuntimeError):
    """No finite candidate for the syndrome (rank-deficient or buggy input)."""


@dataclass(frozen=True)
class BackRef:
    """Provenance of a table entry: a column leaf, a pair split, or empty."""

    kind: str  # "leaf" | "pair" | "empty"
    column: int | None = None
    vb: int | None = None
    t1: int | None = None
    t2: int | None = None

    @classmethod
    def leaf(cls, column: int) -> "BackRef":
        return cls("leaf", column=column)

    @classmethod
    def pair(cls, vb: int, t1: int, t2: int) -> "BackRef":
        return cls("pair", vb=vb, t1=t1, t2=t2)

    @classmethod
    def empty(cls) -> "BackRef":
        return cls("empty")


@dataclass
class LevelTable:
    """Per-size table over all 2^q targets: penalty plus back-reference.

    For t == 1 `ref` holds the chosen column index; for t > 1 it holds the
    decomposition value vb, with the (t1, t2) split shared table-wide.
    An entry is empty iff its penalty is +inf iff its ref is -1.
    """

    t: int
    penalty: np.ndarray  # float64[2^q]
    ref: np.ndarray  # int64[2^q]
    split: tuple[int, int] | None = None  # None for t == 1

    @property
    def size(self) -> int:
        return self.penalty.shape[0]

    def backref(self, v: int) -> BackRef:
        r = int(self.ref[v])
        if r < 0:
            return BackRef.empty()
        if self.t == 1:
            return BackRef.leaf(r)
        t1, t2 = self.split
        return BackRef.pair(r, t1, t2)

    def copy(self) -> "LevelTable":
        return LevelTable(self.t, self.penalty.copy(), self.ref.copy(), self.split)


@dataclass(frozen=True)
class ErrorBlock:
    """Multiset of column indices (sorted, repeats kept) with its penalty."""

    indices: tuple[int, ...]
    penalty: float

    @property
    def size(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class DecodeResult:
    codeword: np.ndarray
    flip_set: frozenset
    chosen_size: int | None
    penalty: float
    ops: OpCounter
    per_size: tuple = ()  # (t, penalty) trace for the syndrome
    is_codeword: bool = True


def init_level_one(h: ParityCheckMatrix, lam: np.ndarray,
                   counter: OpCounter | None = None) -> LevelTable:
    """Size-1 table: cheapest column matching each target, ties to the
    smallest column index; targets matching no column stay empty."""
    lam = np.asarray(lam, dtype=np.float64)
    if lam.shape != (h.spec.n,):
        raise ValueError(f"lambda length {lam.shape} != n={h.spec.n}")
    _check_table_q(h.spec.q)
    n_entries = 1 << h.spec.q
    pen = np.full(n_entries, np.inf)
    ref = np.full(n_entries, -1, dtype=np.int64)
    abslam = np.abs(lam)
    cols = h.columns
    order = np.lexsort((np.arange(cols.shape[0]), abslam, cols))
    sorted_vals = cols[order]
    first = np.ones(sorted_vals.shape[0], dtype=bool)
    first[1:] = sorted_vals[1:] != sorted_vals[:-1]
    pen[sorted_vals[first]] = abslam[order][first]
    ref[sorted_vals[first]] = order[first]
    if counter is not None:
        # min-reduction over repeated columns (zero for repeat-free H)
        counter.add_bulk(cmps_finite=cols.shape[0] - int(first.sum()))
    return LevelTable(1, pen, ref, None)


def combine_full(ta: LevelTable, tb: LevelTable,
                 targets: Iterable[int] | None = None,
                 counter: OpCounter | None = None,
                 out: LevelTable | None = None) -> LevelTable:
    """Build size-(ta.t + tb.t) entries by a full ascending scan of vi.

    targets=None builds every target. Candidate sums with an empty operand
    count toward the +inf tallies only.
    """
    counter = counter if counter is not None else OpCounter()
    out = out if out is not None else _empty_table(ta, tb)
    if targets is None:
        pen, ref, af, ai, cf, ci = _kernels.combine_all_full(ta.penalty, tb.penalty)
        out.penalty, out.ref = pen, ref
        counter.add_bulk(af, ai, cf, ci)
    else:
        targets = list(targets)
        if not targets:
            raise ValueError("empty target set")
        for v in targets:
            best, bi, af, ai, cf, ci = _kernels.combine_single_full(
                ta.penalty, tb.penalty, v)
            out.penalty[v] = best
            out.ref[v] = bi
            counter.add_bulk(af, ai, cf, ci)
    return out


def combine_symmetric(ta: LevelTable,
                      targets: Iterable[int] | None = None,
                      counter: OpCounter | None = None,
                      out: LevelTable | None = None) -> LevelTable:
    """Equal-split scan over unordered pairs {vi, vi^v}; v = 0 is rejected
    (its pairs are degenerate; route it through combine_full)."""
    counter = counter if counter is not None else OpCounter()
    out = out if out is not None else _empty_table(ta, ta)
    if targets is None:
        pen, ref, af, ai, cf, ci = _kernels.combine_all_sym(ta.penalty)
        out.penalty, out.ref = pen, ref
        counter.add_bulk(af, ai, cf, ci)
    else:
        targets = list(targets)
        if not targets:
            raise ValueError("empty target set")
        if any(v == 0 for v in targets):
            raise ValueError("zero target is not valid for the symmetric scan")
        for v in targets:
            best, bi, af, ai, cf, ci = _kernels.combine_single_sym(ta.penalty, v)
            out.penalty[v] = best
            out.ref[v] = bi
            counter.add_bulk(af, ai, cf, ci)
    return out


def _empty_table(ta: LevelTable, tb: LevelTable) -> LevelTable:
    n = ta.size
    return LevelTable(ta.t + tb.t,
                      np.full(n, np.inf),
                      np.full(n, -1, dtype=np.int64),
                      (ta.t, tb.t))


def select_global(per_size: Sequence[tuple[int, float]],
                  counter: OpCounter | None = None) -> tuple[int, float]:
    """First size achieving the minimum finite penalty."""
    best_t = None
    best = np.inf
    n_finite = 0
    for t, p in per_size:
        if math.isfinite(p):
            n_finite += 1
            if p < best:
                best = p
                best_t = t
    if counter is not None:
        fin_c = max(0, n_finite - 1)
        counter.add_bulk(cmps_finite=fin_c,
                         cmps_inf=max(0, len(per_size) - 1) - fin_c)
    if best_t is None:
        raise DecodeFailureError("no finite block penalty for the syndrome")
    return best_t, best


def reconstruct_block(tables: Mapping[int, LevelTable], t: int, v: int) -> ErrorBlock:
    """Expand back-references down to column leaves."""
    penalty = float(tables[t].penalty[v])
    if not math.isfinite(penalty):
        raise ValueError(f"entry (t={t}, v={v}) is empty")
    indices: list[int] = []
    stack = [(t, v)]
    while stack:
        ti, vi = stack.pop()
        table = tables[ti]
        r = int(table.ref[vi])
        assert r >= 0, "finite entry with empty back-reference"
        if ti == 1:
            indices.append(r)
        else:
            t1, t2 = table.split
            stack.append((t1, r))
            stack.append((t2, r ^ vi))
    assert len(indices) == t
    return ErrorBlock(tuple(sorted(indices)), penalty)


def reduce_block(block: ErrorBlock | Iterable[int]) -> frozenset:
    """Drop even-multiplicity members; keep one instance of odd ones."""
    indices = block.indices if isinstance(block, ErrorBlock) else tuple(block)
    out = set()
    for a in indices:
        out.symmetric_difference_update({a})
    return frozenset(out)


def decode_general(h: ParityCheckMatrix, lam: np.ndarray,
                   counter: OpCounter | None = None) -> DecodeResult:
    """ML decode of a reliability vector using only the parity-check matrix.

    Builds all-target tables up to size ceil(q/2) (equal splits with the
    pair-halved scan at even sizes, (t-1, 1) at odd sizes), then
    syndrome-only entries up to size q, and selects the cheapest size.
    """
    counter = counter if counter is not None else OpCounter()
    lam = np.asarray(lam, dtype=np.float64)
    b = hard_decision(lam)
    s = syndrome(h, b)
    if s == 0:
        return DecodeResult(b, frozenset(), None, 0.0, counter.snapshot())
    q = h.spec.q
    half = (q + 1) // 2
    tables = {1: init_level_one(h, lam, counter)}
    for t in range(2, half + 1):
        if t % 2 == 0:
            tbl = combine_symmetric(tables[t // 2], counter=counter)
            combine_full(tables[t // 2], tables[t // 2], targets=[0],
                         counter=counter, out=tbl)
        else:
            tbl = combine_full(tables[t - 1], tables[1], counter=counter)
        tables[t] = tbl
    for t in range(half + 1, q + 1):
        t1, t2 = t - half, half
        if t1 == t2:
            tbl = combine_symmetric(tables[t1], targets=[s], counter=counter)
        else:
            tbl = combine_full(tables[t1], tables[t2], targets=[s],
                               counter=counter)
        tables[t] = tbl
    per_size = tuple((t, float(tables[t].penalty[s])) for t in range(1, q + 1))
    t_star, penalty = select_global(per_size, counter)
    flips = reduce_block(reconstruct_block(tables, t_star, s))
    codeword = b.copy()
    codeword[list(flips)] ^= 1
    return DecodeResult(codeword, flips, t_star, penalty, counter.snapshot(),
                        per_size)


def _check_table_q(q: int) -> None:
    if q > MAX_TABLE_Q:
        raise ValueError(
            f"q={q} needs 2^{q}-entry tables; this decoder is for small "
            f"redundancy (q <= {MAX_TABLE_Q})"
        )
