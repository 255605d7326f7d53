import random
from itertools import combinations

import pytest

from maximin.core import ceil_lg, d, digit_sum, f_dc
from maximin.grid import (
    BitPoint,
    BudgetExceeded,
    PointSet,
    beta_prefix,
    column_counts,
    coordinate_splits,
    exhaustive_max_edges,
    induced_edge_count,
)
from maximin.hcbp import enumerate_hcbp


def naive_edges(points):
    return sum(1 for p, q in combinations(points, 2) if bin(p ^ q).count("1") == 1)


def test_beta_prefix_examples():
    assert beta_prefix(2, 1).points == {0, 1}
    ps = beta_prefix(5, 3)
    assert [str(p) for p in ps.bitpoints()] == ["000", "001", "010", "011", "100"]
    assert beta_prefix(4, 2).points == {0, 1, 2, 3}
    with pytest.raises(ValueError):
        beta_prefix(5, 2)


def test_bitpoint_coordinates():
    # the last binary digit is the k-th coordinate
    assert BitPoint(1, 3).bits == (0, 0, 1)
    assert BitPoint(4, 3).bits == (1, 0, 0)


def test_pointset_validation():
    with pytest.raises(ValueError):
        PointSet(2, frozenset())
    with pytest.raises(ValueError):
        PointSet(2, frozenset({4}))


def test_edge_count_examples():
    assert induced_edge_count(PointSet(3, frozenset({5}))) == 0
    assert induced_edge_count(beta_prefix(5, 3)) == 5


def test_edge_count_matches_naive():
    rng = random.Random(7)
    for _ in range(300):
        k = rng.randint(1, 7)
        pts = rng.sample(range(1 << k), rng.randint(1, 1 << k))
        assert induced_edge_count(PointSet(k, frozenset(pts))) == naive_edges(pts)


def test_prefix_induces_f_and_increments_by_digit_sum():
    prev = 0
    for n in range(1, 1025):
        e = induced_edge_count(beta_prefix(n))
        assert e == f_dc(n)
        if n > 1:
            assert e - prev == digit_sum(n - 1)
        prev = e


def test_prefix_in_larger_cube():
    for n in range(1, 200):
        assert induced_edge_count(beta_prefix(n, ceil_lg(n) + 3)) == f_dc(n)


@pytest.mark.parametrize("n, k, expected", [(3, 2, 2), (4, 2, 4), (8, 4, 12)])
def test_exhaustive_examples(n, k, expected):
    assert exhaustive_max_edges(n, k) == expected


def test_exhaustive_naive_q3():
    for n in range(1, 9):
        best = max(naive_edges(c) for c in combinations(range(8), n))
        assert exhaustive_max_edges(n, 3) == best == f_dc(n)


def test_extra_dimensions_do_not_help():
    for n in range(1, 9):
        assert exhaustive_max_edges(n, 3) == exhaustive_max_edges(n, 4)
    for n in range(1, 5):
        assert exhaustive_max_edges(n, 4) == exhaustive_max_edges(n, 5)


def test_budget_guard(monkeypatch):
    with pytest.raises(BudgetExceeded):
        exhaustive_max_edges(8, 5)
    with pytest.raises(BudgetExceeded):
        exhaustive_max_edges(8, 4, budget=100)
    monkeypatch.setenv("MAXIMIN_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        exhaustive_max_edges(3, 3)
    with pytest.raises(ValueError):
        exhaustive_max_edges(9, 3)


def test_coordinate_split_examples():
    assert coordinate_splits(2).pairs == {(1, 1)}
    assert coordinate_splits(13).pairs == {(7, 6), (8, 5)}
    assert coordinate_splits(8).pairs == {(4, 4)}
    with pytest.raises(ValueError):
        coordinate_splits(1)


def test_column_imbalance_is_d():
    for n in range(2, 1500):
        k = ceil_lg(n)
        cols = column_counts(n)
        for i in range(1, k + 1):
            zeros, ones = cols[k - i]  # bit i-1 is coordinate k-i+1
            assert zeros - ones == d(i, n)


def test_coordinate_splits_are_hcbps():
    for n in range(2, 1500):
        assert coordinate_splits(n).pairs == enumerate_hcbp(n).pairs
