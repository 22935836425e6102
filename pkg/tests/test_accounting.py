from ebd.accounting import OpCounter


def test_fresh_counter_zero():
    c = OpCounter()
    assert c.finite_total == 0 and c.total == 0


def test_record_and_flags():
    c = OpCounter()
    c.record_add(True)
    c.record_add(False)
    c.record_cmp(True)
    c.record_cmp(False)
    assert (c.adds_finite, c.adds_inf, c.cmps_finite, c.cmps_inf) == (1, 1, 1, 1)
    assert c.finite_total == 2 and c.total == 4


def test_min_reduction_convention():
    # min over m finite candidates costs m - 1 comparisons
    c = OpCounter()
    m = 9
    for _ in range(m - 1):
        c.record_cmp(True)
    assert c.cmps_finite == m - 1


def test_snapshot_then_reset():
    c = OpCounter()
    c.add_bulk(3, 1, 2, 0)
    snap = c.snapshot()
    c.reset()
    assert c.total == 0
    assert (snap.adds_finite, snap.adds_inf, snap.cmps_finite, snap.cmps_inf) == (3, 1, 2, 0)


def test_sequential_deltas_sum(hamming74, fig1_lambda):
    from ebd.core import decode_general
    from ebd.gf2 import build_hamming_parity_check
    h = build_hamming_parity_check(4)
    total = OpCounter()
    r1 = decode_general(h, fig1_lambda)
    r2 = decode_general(h, -fig1_lambda)
    total.merge(r1.ops)
    total.merge(r2.ops)
    assert total.total == r1.ops.total + r2.ops.total
    assert total.finite_total == r1.ops.finite_total + r2.ops.finite_total
