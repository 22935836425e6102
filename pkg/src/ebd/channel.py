"""BPSK/AWGN frame generation with reproducible per-frame randomness.

Each frame owns a counter-based Philox stream keyed by (seed, frame_index),
so any partitioning of frame indices across workers reproduces the same
frames. Per frame the stream yields k 53-bit words (message bits = LSBs,
random mode only) followed by n words mapped to (0,1) uniforms and through
the inverse normal CDF. That transform is fixed here so recorded reliability
vectors stay portable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

from .gf2 import GeneratorMatrix, encode

_U53 = 2.0**-53


def ebn0_to_sigma(ebn0_db: float, rate: float) -> float:
    """Noise standard deviation for unit-energy BPSK at the given Eb/N0."""
    if not 0.0 < rate < 1.0:
        raise ValueError(f"rate must be in (0,1), got {rate}")
    return float(np.sqrt(1.0 / (2.0 * rate * 10.0 ** (ebn0_db / 10.0))))


@dataclass(frozen=True)
class ChannelConfig:
    ebn0_db: float
    rate: float
    seed: int
    message_mode: str = "random"  # "random" | "zero"

    def __post_init__(self):
        if not 0.0 < self.rate < 1.0:
            raise ValueError(f"rate must be in (0,1), got {self.rate}")
        if self.message_mode not in ("random", "zero"):
            raise ValueError(f"unknown message_mode {self.message_mode!r}")

    @property
    def sigma(self) -> float:
        return ebn0_to_sigma(self.ebn0_db, self.rate)


@dataclass(frozen=True)
class Frame:
    tx_codeword: np.ndarray
    lam: np.ndarray


def _frame_words(seed: int, stream_index: int, count: int) -> np.ndarray:
    key = np.array([seed, stream_index], dtype=np.uint64)
    rng = np.random.Generator(np.random.Philox(key=key))
    return rng.integers(0, 1 << 53, size=count, dtype=np.int64)


def generate_frame(g: GeneratorMatrix, cfg: ChannelConfig,
                   stream_index: int) -> Frame:
    """One deterministic frame: encode, BPSK-map (0 -> +1, 1 -> -1), add
    Gaussian noise, return the LLR-domain reliability vector 2y/sigma^2."""
    tx, lam = generate_frames(g, cfg, stream_index, 1)
    return Frame(tx[0], lam[0])


def generate_frames(g: GeneratorMatrix, cfg: ChannelConfig,
                    start: int, count: int):
    """Frames for indices [start, start+count); identical bits to repeated
    generate_frame calls."""
    n, k = g.spec.n, g.spec.k
    random_msg = cfg.message_mode == "random"
    per_frame = (k if random_msg else 0) + n
    words = np.empty((count, per_frame), dtype=np.int64)
    for i in range(count):
        words[i] = _frame_words(cfg.seed, start + i, per_frame)
    if random_msg:
        msgs = (words[:, :k] & 1).astype(np.uint8)
        tx = encode(g, msgs)
    else:
        tx = np.zeros((count, n), dtype=np.uint8)
    u = (words[:, -n:].astype(np.float64) + 0.5) * _U53
    noise = ndtri(u)
    sigma = cfg.sigma
    y = (1.0 - 2.0 * tx) + sigma * noise
    lam = 2.0 * y / (sigma * sigma)
    return tx, lam
