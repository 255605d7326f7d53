from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from maximin import hcbp
from maximin.core import ceil_lg, d, f_dc, f_maximin
from maximin.hcbp import (
    H_METHODS,
    alternating_point,
    c_count,
    c_distinct_d,
    enumerate_hcbp,
    extremal_pairs,
    h_abr,
    h_enum,
    h_mod8,
    h_reflect,
    hcbp_witnesses,
    strata,
    strata_table,
)

BASE = [0, 1, 1, 1, 2, 2, 1, 1]


def brute_h(n):
    """Count maximizing splits of n directly from f."""
    if n == 1:
        return 0
    scores = [a + f_dc(a) + f_dc(n - a) for a in range(1, n // 2 + 1)]
    return scores.count(max(scores))


def test_enumerate_examples():
    assert enumerate_hcbp(2).pairs == {(1, 1)}
    assert enumerate_hcbp(13).pairs == {(7, 6), (8, 5)}
    assert enumerate_hcbp(8).pairs == {(4, 4)}
    assert list(enumerate_hcbp(13)) == [(8, 5), (7, 6)]
    assert (7, 6) in enumerate_hcbp(13)
    with pytest.raises(ValueError):
        enumerate_hcbp(1)


def test_witnesses_dedupe_indices():
    assert hcbp_witnesses(13) == {(7, 6): [1, 2], (8, 5): [3, 4]}


@pytest.mark.parametrize("name", sorted(H_METHODS))
def test_base_vector(name):
    assert [H_METHODS[name](n) for n in range(1, 9)] == BASE


@pytest.mark.parametrize("name", sorted(H_METHODS))
def test_h_against_brute_force(name):
    fn = H_METHODS[name]
    for n in range(1, 400):
        assert fn(n) == brute_h(n), n


def test_h_examples():
    assert h_enum(13) == 2
    assert h_reflect(3) == 1 and h_reflect(13) == 2
    assert h_mod8(9) == 2 and h_mod8(12) == 2 and h_mod8(15) == 1
    assert h_abr(7) == 1 and h_abr(6) == 2 and h_abr(1) == 0
    for k in range(1, 80):
        assert h_reflect(1 << k) == 1
    for k in range(2, 80):
        assert h_reflect(alternating_point(k)) == k - 1


@given(st.integers(min_value=1, max_value=1 << 100))
def test_four_way_agreement_large(n):
    assert h_enum(n) == h_reflect(n) == h_mod8(n) == h_abr(n)


def test_four_way_agreement_range():
    for n in range(1, 20000):
        v = h_enum(n)
        assert h_reflect(n) == v and h_mod8(n) == v and h_abr(n) == v


def test_reflect_step_count():
    for n in range(3, 5000):
        steps, m = 0, n
        while m > 2:
            m = (1 << ceil_lg(m)) - m
            steps += 1
        assert steps <= ceil_lg(n) - 1


def test_c_count():
    assert c_count(0) == 1 and c_count(1) == 1
    assert c_count(8) == 2 and c_count(5) == 3
    for n in range(0, 5000):
        assert c_count(n) == c_distinct_d(n)
        if n:
            assert c_count(n) == h_enum(n) + 1


def test_c_distinct_d_direct():
    # distinct d_i(n) over a generous index range, no shortcut
    for n in range(0, 600):
        assert c_distinct_d(n) == len({d(i, n) for i in range(1, 40)})


def test_observation_5_bounds():
    assert h_reflect(1) == 0 and h_reflect(2) == 1
    for n in range(3, 1 << 14):
        assert 1 <= h_reflect(n) <= ceil_lg(n) - 1


def test_theorem_1_small():
    for n in range(2, 300):
        assert f_maximin(n).argmax == enumerate_hcbp(n).pairs


def test_hcbp_attains_f():
    for n in range(2, 2000):
        for p in enumerate_hcbp(n):
            assert f_dc(n) == p.n1 + f_dc(p.n1) + f_dc(p.n0)


def test_power_of_two_divides_a_part():
    for n in range(2, 1 << 10):
        for pair, idx in hcbp_witnesses(n).items():
            for i in idx:
                q = 1 << (i - 1)
                assert pair.n0 % q == 0 or pair.n1 % q == 0
            if n % 2 == 0 and pair.n0 % 2 and pair.n1 % 2:
                assert pair.n0 == pair.n1


def test_strata_examples():
    assert strata(2) == [2]
    assert strata(4) == [2, 4, 2]
    assert strata(5)[3] == 2
    row = strata_table(10)[4]
    assert (row.ell, row.brute, row.formula) == (5, 140, 140)
    with pytest.raises(ValueError):
        strata(1)


def test_strata_rows():
    for k in range(2, 15):
        rows = strata_table(k)
        assert [r.brute for r in rows] == [2 * comb(k - 2, l - 1) for l in range(1, k)]
        assert sum(r.brute for r in rows) == 1 << (k - 1)


def test_strata_formula_only_beyond_cutoff():
    rows = strata_table(30, brute_limit=20)
    assert all(r.brute is None and r.ok for r in rows)
    assert sum(r.formula for r in rows) == 1 << 29


def test_strata_mismatch_raises(monkeypatch):
    monkeypatch.setattr(hcbp, "h_reflect", lambda n: 1)
    with pytest.raises(hcbp.StrataMismatch):
        strata(4)


def test_alternating_point():
    assert [alternating_point(k) for k in range(2, 7)] == [3, 5, 11, 21, 43]


def test_extremal_pairs_examples():
    assert extremal_pairs(2) == ({3, 4}, {3, 4})
    assert extremal_pairs(3) == ({7, 8}, {5, 6})
    lo, hi = extremal_pairs(4)
    assert lo == {15, 16}
    assert hi == {10, 11}
    assert h_reflect(11) == 3 and h_reflect(10) == 3 and h_reflect(12) == 2


def test_extremal_pairs_scan():
    for k in range(2, 17):
        lo, hi = extremal_pairs(k)
        scan = range((1 << (k - 1)) + 1, (1 << k) + 1)
        assert {n for n in scan if h_reflect(n) == 1} == lo
        assert {n for n in scan if h_reflect(n) == k - 1} == hi


def test_extremal_pairs_closed_form_only():
    for k in range(21, 60):
        lo, hi = extremal_pairs(k)
        assert all(h_reflect(n) == 1 for n in lo)
        assert all(h_reflect(n) == k - 1 for n in hi)
        assert all(ceil_lg(n) == k for n in lo | hi)
