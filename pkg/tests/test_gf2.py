import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ebd.gf2 import (CapacityError, CodeSpec, ParityCheckMatrix,
                     build_extended_hamming_parity_check,
                     build_hamming_parity_check, derive_generator, encode,
                     gf2_rank, hard_decision, load_parity_check, syndrome,
                     syndrome_batch)
from ebd.oracles import all_codewords


def test_hamming_columns_are_consecutive_integers():
    h = build_hamming_parity_check(4)
    assert h.spec.n == 15 and h.spec.k == 11
    assert list(h.columns) == list(range(1, 16))
    h3 = build_hamming_parity_check(3)
    assert list(h3.columns) == list(range(1, 8))
    assert gf2_rank(h3.columns) == 3


def test_hamming_m_out_of_range():
    with pytest.raises(CapacityError):
        build_hamming_parity_check(2)
    with pytest.raises(CapacityError):
        build_hamming_parity_check(65)


def test_extended_hamming_column_pattern():
    h = build_extended_hamming_parity_check(3)
    assert h.spec.n == 8 and h.spec.q == 4
    assert h.columns[0] == 1  # only the all-ones-row bit
    assert h.columns[5] == 0b1011  # bits {0, 1, 3} for i = 5 = 101b
    assert np.all(h.columns & 1 == 1)
    h6 = build_extended_hamming_parity_check(6)
    assert (h6.spec.n, h6.spec.k, h6.spec.d) == (64, 57, 4)


def test_extended_hamming_columns_cover_odd_parity_words():
    h = build_extended_hamming_parity_check(4)
    vals = set(int(c) for c in h.columns)
    assert len(vals) == 16
    assert vals == {v for v in range(1 << 5) if v & 1}


def test_codespec_validation():
    with pytest.raises(ValueError):
        CodeSpec(n=4, k=4)
    with pytest.raises(CapacityError):
        CodeSpec(n=200, k=100)


def test_parity_check_rejects_zero_column():
    spec = CodeSpec(n=4, k=2)
    with pytest.raises(ValueError, match="zero column"):
        ParityCheckMatrix(spec, np.array([1, 0, 2, 3]))


def test_parity_check_rejects_rank_deficiency():
    spec = CodeSpec(n=4, k=2)
    with pytest.raises(ValueError, match="rank"):
        ParityCheckMatrix(spec, np.array([1, 1, 1, 1]))


def test_load_parity_check_round_trip(tmp_path, hamming74):
    path = tmp_path / "h74.txt"
    rows = hamming74.rows
    lines = ["7 4"] + [" ".join(str(int(b)) for b in row) for row in rows]
    path.write_text("\n".join(lines) + "\n")
    loaded = load_parity_check(path)
    assert np.array_equal(loaded.columns, hamming74.columns)


def test_load_parity_check_errors(tmp_path):
    bad_zero = tmp_path / "zero.txt"
    bad_zero.write_text("4 2\n1 0 1 1\n1 0 0 1\n")
    with pytest.raises(ValueError, match="zero column"):
        load_parity_check(bad_zero)
    bad_rank = tmp_path / "rank.txt"
    bad_rank.write_text("4 2\n1 1 1 1\n1 1 1 1\n")
    with pytest.raises(ValueError, match="rank"):
        load_parity_check(bad_rank)
    bad_parse = tmp_path / "parse.txt"
    bad_parse.write_text("4 2\n1 x 1 1\n0 1 0 1\n")
    with pytest.raises(ValueError, match="bad matrix entry"):
        load_parity_check(bad_parse)
    with pytest.raises(ValueError, match="format"):
        load_parity_check(bad_parse, fmt="alist")


def test_generator_codewords_have_zero_syndrome(hamming74, gen74):
    book = all_codewords(gen74)
    assert book.shape == (16, 7)
    assert len({tuple(c) for c in book}) == 16
    for cw in book:
        assert syndrome(hamming74, cw) == 0


def test_generator_zero_message(gen74):
    assert np.array_equal(encode(gen74, np.zeros(4, dtype=np.uint8)),
                          np.zeros(7, dtype=np.uint8))


def test_extended_hamming_codewords_even_weight(exham84):
    g = derive_generator(exham84)
    book = all_codewords(g)
    assert np.all(book.sum(axis=1) % 2 == 0)


def test_systematic_round_trip(hamming15):
    g = derive_generator(hamming15)
    rng = np.random.default_rng(0)
    msgs = rng.integers(0, 2, size=(20, g.spec.k), dtype=np.uint8)
    cws = encode(g, msgs)
    assert np.array_equal(cws[:, list(g.info_positions)], msgs)


def test_syndrome_worked_values(hamming15, fig1_lambda):
    b = np.zeros(15, dtype=np.uint8)
    b[0] = 1
    assert syndrome(hamming15, b) == 1  # single one at position 0 -> column 0
    b_fig = hard_decision(fig1_lambda)
    assert syndrome(hamming15, b_fig) == 4
    assert syndrome(hamming15, np.zeros(15, dtype=np.uint8)) == 0


def test_syndrome_length_mismatch(hamming74):
    with pytest.raises(ValueError):
        syndrome(hamming74, np.zeros(8, dtype=np.uint8))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**15 - 1), st.integers(0, 2**15 - 1))
def test_syndrome_linearity(a_bits, b_bits):
    h = build_hamming_parity_check(4)
    a = np.array([(a_bits >> i) & 1 for i in range(15)], dtype=np.uint8)
    b = np.array([(b_bits >> i) & 1 for i in range(15)], dtype=np.uint8)
    assert syndrome(h, a ^ b) == syndrome(h, a) ^ syndrome(h, b)


def test_syndrome_batch_agrees(hamming15):
    rng = np.random.default_rng(3)
    words = rng.integers(0, 2, size=(40, 15), dtype=np.uint8)
    batch = syndrome_batch(hamming15, words)
    assert [syndrome(hamming15, w) for w in words] == list(batch)


def test_hard_decision_convention(fig1_lambda):
    b = hard_decision(fig1_lambda)
    assert b[0] == 1 and b[1] == 0
    assert np.all(hard_decision(np.ones(5)) == 0)
    assert hard_decision(np.array([0.0, -0.1]))[0] == 0  # exact zero -> 0
