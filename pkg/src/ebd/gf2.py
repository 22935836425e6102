"""Binary linear block code primitives over GF(2).

Parity-check columns are stored as machine integers: bit j of a column word
is row j of the matrix, so a syndrome value doubles as a dense table index.
Bit 0 is the first matrix row (the all-ones row for extended Hamming codes
in their canonical form).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

WORD_BITS = 64


class CapacityError(ValueError):
    """Redundancy exceeds the syndrome word width."""


@dataclass(frozen=True)
class CodeSpec:
    """(n, k, d) parameters of a binary linear block code; q = n - k."""

    n: int
    k: int
    d: int | None = None

    def __post_init__(self):
        if not 1 <= self.k < self.n:
            raise ValueError(f"need 1 <= k < n, got n={self.n}, k={self.k}")
        if self.q > WORD_BITS:
            raise CapacityError(
                f"redundancy q={self.q} exceeds the {WORD_BITS}-bit syndrome word"
            )

    @property
    def q(self) -> int:
        return self.n - self.k

    @property
    def rate(self) -> float:
        return self.k / self.n


def gf2_rank(words) -> int:
    """Rank of a collection of bit-packed GF(2) vectors."""
    basis: list[int] = []
    for w in words:
        w = int(w)
        for b in basis:
            w = min(w, w ^ b)
        if w:
            basis.append(w)
    return len(basis)


@dataclass(frozen=True)
class ParityCheckMatrix:
    """Q x N parity-check matrix stored as N column words.

    Invariants checked at construction: no all-zero column, rank q over GF(2).
    """

    spec: CodeSpec
    columns: np.ndarray  # int64[n], column i as a q-bit word

    def __post_init__(self):
        cols = np.ascontiguousarray(np.asarray(self.columns, dtype=np.int64))
        object.__setattr__(self, "columns", cols)
        n, q = self.spec.n, self.spec.q
        if cols.shape != (n,):
            raise ValueError(f"expected {n} columns, got shape {cols.shape}")
        if np.any(cols == 0):
            raise ValueError("parity-check matrix has an all-zero column")
        if np.any(cols < 0) or np.any(cols >> q):
            raise ValueError(f"column value out of range for q={q}")
        if gf2_rank(cols) != q:
            raise ValueError(f"parity-check matrix rank < q={q}")
        cols.setflags(write=False)

    @cached_property
    def rows(self) -> np.ndarray:
        """Dense q x n 0/1 row view of the matrix."""
        q = self.spec.q
        out = np.zeros((q, self.spec.n), dtype=np.uint8)
        for j in range(q):
            out[j] = (self.columns >> j) & 1
        out.setflags(write=False)
        return out


@dataclass(frozen=True)
class GeneratorMatrix:
    """k x n generator with H @ G.T = 0; info_positions carry the message
    systematically (column pivoting permutation already undone)."""

    spec: CodeSpec
    rows: np.ndarray  # uint8[k, n]
    info_positions: tuple[int, ...]

    def __post_init__(self):
        rows = np.ascontiguousarray(np.asarray(self.rows, dtype=np.uint8))
        object.__setattr__(self, "rows", rows)
        if rows.shape != (self.spec.k, self.spec.n):
            raise ValueError("generator shape mismatch")
        rows.setflags(write=False)


def build_hamming_parity_check(m: int) -> ParityCheckMatrix:
    """(2^m - 1, 2^m - 1 - m, 3) Hamming code: column i is the integer i + 1."""
    if not 3 <= m <= WORD_BITS:
        raise CapacityError(f"need 3 <= m <= {WORD_BITS}, got {m}")
    n = (1 << m) - 1
    spec = CodeSpec(n=n, k=n - m, d=3)
    return ParityCheckMatrix(spec, np.arange(1, n + 1, dtype=np.int64))


def build_extended_hamming_parity_check(m: int) -> ParityCheckMatrix:
    """(2^m, 2^m - 1 - m, 4) extended Hamming code.

    Column i has bit 0 set (all-ones row) and bits 1..m equal to the binary
    expansion of i, least-significant bit in row 1.
    """
    if not 3 <= m <= WORD_BITS - 1:
        raise CapacityError(f"need 3 <= m <= {WORD_BITS - 1}, got {m}")
    n = 1 << m
    spec = CodeSpec(n=n, k=n - m - 1, d=4)
    cols = 1 | (np.arange(n, dtype=np.int64) << 1)
    return ParityCheckMatrix(spec, cols)


def load_parity_check(path, fmt: str = "text") -> ParityCheckMatrix:
    """Load a parity-check matrix from a text file.

    Format "text": first line "N K", then q = N - K lines of N space-separated
    bits, row-major. Row 0 of the file maps to bit 0 of the column words.
    """
    if fmt != "text":
        raise ValueError(f"unknown parity-check format {fmt!r}")
    with open(path) as fh:
        tokens = fh.read().split()
    if len(tokens) < 2:
        raise ValueError(f"{path}: missing 'N K' header")
    n, k = int(tokens[0]), int(tokens[1])
    spec = CodeSpec(n=n, k=k)
    bits = tokens[2:]
    if len(bits) != spec.q * n:
        raise ValueError(
            f"{path}: expected {spec.q * n} matrix bits, found {len(bits)}"
        )
    cols = np.zeros(n, dtype=np.int64)
    for j in range(spec.q):
        for i in range(n):
            v = bits[j * n + i]
            if v not in ("0", "1"):
                raise ValueError(f"{path}: bad matrix entry {v!r}")
            if v == "1":
                cols[i] |= 1 << j
    return ParityCheckMatrix(spec, cols)


def derive_generator(h: ParityCheckMatrix) -> GeneratorMatrix:
    """Generator matrix via GF(2) elimination with column pivoting.

    The returned rows emit codewords in original column order, systematic on
    the non-pivot (info) positions.
    """
    n, k, q = h.spec.n, h.spec.k, h.spec.q
    # Row-reduce H keeping track of pivot columns.
    rows = [int(x) for x in _column_words_to_row_words(h)]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, q) if (rows[i] >> col) & 1), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(q):
            if i != r and (rows[i] >> col) & 1:
                rows[i] ^= rows[r]
        pivots.append(col)
        r += 1
        if r == q:
            break
    assert r == q  # rank validated at construction
    info = tuple(sorted(set(range(n)) - set(pivots)))
    g = np.zeros((k, n), dtype=np.uint8)
    for j, pos in enumerate(info):
        g[j, pos] = 1
        # parity constraint row i: c[pivots[i]] = sum of c over info support
        for i, p in enumerate(pivots):
            g[j, p] = (rows[i] >> pos) & 1
    return GeneratorMatrix(h.spec, g, info)


def _column_words_to_row_words(h: ParityCheckMatrix) -> list[int]:
    words = [0] * h.spec.q
    for i, c in enumerate(h.columns):
        c = int(c)
        for j in range(h.spec.q):
            if (c >> j) & 1:
                words[j] |= 1 << i
    return words


def encode(g: GeneratorMatrix, message: np.ndarray) -> np.ndarray:
    message = np.asarray(message, dtype=np.uint8)
    if message.shape[-1] != g.spec.k:
        raise ValueError(f"message length {message.shape[-1]} != k={g.spec.k}")
    return (message.astype(np.int64) @ g.rows.astype(np.int64) % 2).astype(np.uint8)


def syndrome(h: ParityCheckMatrix, word: np.ndarray) -> int:
    """Hb^T as a q-bit integer: XOR of columns at the word's support."""
    word = np.asarray(word)
    if word.shape != (h.spec.n,):
        raise ValueError(f"word length {word.shape} != n={h.spec.n}")
    sel = h.columns[word != 0]
    return int(np.bitwise_xor.reduce(sel)) if sel.size else 0


def syndrome_batch(h: ParityCheckMatrix, words: np.ndarray) -> np.ndarray:
    """Syndromes of a (B, n) batch of binary words, as int64 values."""
    sbits = words.astype(np.int64) @ h.rows.T.astype(np.int64) % 2
    weights = np.int64(1) << np.arange(h.spec.q, dtype=np.int64)
    return sbits @ weights


def hard_decision(lam: np.ndarray) -> np.ndarray:
    """Per-position hard decision: bit i = 1 iff lam[i] < 0 (zero maps to 0)."""
    return (np.asarray(lam, dtype=np.float64) < 0).astype(np.uint8)
