import numpy as np
import pytest

from ebd.channel import (ChannelConfig, ebn0_to_sigma, generate_frame,
                         generate_frames)
from ebd.gf2 import (build_extended_hamming_parity_check, derive_generator,
                     hard_decision, syndrome)


@pytest.fixture(scope="module")
def code64():
    h = build_extended_hamming_parity_check(6)
    return h, derive_generator(h)


def test_sigma_closed_form():
    assert ebn0_to_sigma(0.0, 0.5) == pytest.approx(1.0)
    assert ebn0_to_sigma(40.0, 0.5) < 0.012
    with pytest.raises(ValueError):
        ebn0_to_sigma(3.0, 1.2)


def test_sigma_round_trip():
    rate = 57 / 64
    sigma = ebn0_to_sigma(3.0, rate)
    back = 10 * np.log10(1.0 / (2 * rate * sigma**2))
    assert back == pytest.approx(3.0, abs=1e-12)


def test_config_validation():
    with pytest.raises(ValueError):
        ChannelConfig(3.0, 1.5, 1)
    with pytest.raises(ValueError):
        ChannelConfig(3.0, 0.5, 1, message_mode="bits")


def test_noiseless_limit(code64):
    h, g = code64
    cfg = ChannelConfig(60.0, h.spec.rate, seed=5)
    frame = generate_frame(g, cfg, 0)
    assert np.array_equal(hard_decision(frame.lam), frame.tx_codeword)
    assert syndrome(h, frame.tx_codeword) == 0


def test_determinism_and_stream_independence(code64):
    _, g = code64
    cfg = ChannelConfig(2.0, g.spec.rate, seed=99)
    f1 = generate_frame(g, cfg, 12)
    f2 = generate_frame(g, cfg, 12)
    assert np.array_equal(f1.lam, f2.lam)
    assert np.array_equal(f1.tx_codeword, f2.tx_codeword)
    other = generate_frame(g, cfg, 13)
    assert not np.array_equal(f1.lam, other.lam)


def test_batch_matches_single(code64):
    _, g = code64
    cfg = ChannelConfig(1.5, g.spec.rate, seed=7)
    tx, lam = generate_frames(g, cfg, 5, 9)
    for i in range(9):
        f = generate_frame(g, cfg, 5 + i)
        assert np.array_equal(tx[i], f.tx_codeword)
        assert np.array_equal(lam[i], f.lam)


def test_zero_message_mode(code64):
    _, g = code64
    cfg = ChannelConfig(2.0, g.spec.rate, seed=11, message_mode="zero")
    tx, lam = generate_frames(g, cfg, 0, 4)
    assert not tx.any()
    assert lam.shape == (4, 64)


def test_all_zero_and_random_messages_give_matching_fer(code64):
    # linear-code harness sanity: with >= 1e5 frames per mode the two FER
    # estimates must overlap at 95% binomial confidence
    from ebd.sim import run_fer_point
    h, g = code64
    frames = 100_000
    fers = {}
    for mode in ("random", "zero"):
        rec = run_fer_point(h, g, "fullopt", 5.0, frames, 10**9, seed=606,
                            message_mode=mode, code_label="exthamming:6")
        fers[mode] = rec.fer
    p1, p2 = fers["random"], fers["zero"]
    se = np.sqrt(p1 * (1 - p1) / frames) + np.sqrt(p2 * (1 - p2) / frames)
    assert abs(p1 - p2) <= 1.96 * se


def test_empirical_noise_variance(code64):
    h, g = code64
    cfg = ChannelConfig(3.0, h.spec.rate, seed=2024)
    sigma2 = cfg.sigma**2
    count = 16384  # > 1e6 noise samples at n = 64
    tx, lam = generate_frames(g, cfg, 0, count)
    y = lam * sigma2 / 2.0
    noise = y - (1.0 - 2.0 * tx)
    measured = noise.var()
    assert abs(measured - sigma2) / sigma2 < 0.01
    assert abs(noise.mean()) < 0.005
