"""Hypercube ground truth: beta-point prefixes, induced edges, exhaustive maxima.

A vertex of Q_k is an int below 2^k. Coordinate j (1-based) is bit k - j, so
the last binary digit of i is the k-th coordinate of beta_k(i). Two vertices
are adjacent iff their xor is a single bit.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import FrozenSet, NamedTuple, Optional, Tuple

import numpy as np

from .core import Bipartition, _check_nat, ceil_lg
from .hcbp import HcbpSet

__all__ = [
    "BitPoint",
    "PointSet",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "beta_prefix",
    "induced_edge_count",
    "mask_edge_count",
    "exhaustive_max_edges",
    "column_counts",
    "coordinate_splits",
]

# C(16, 8) = 12870 per n is well inside; C(32, 8) ~ 1e7 is not.
DEFAULT_BUDGET = 1 << 20
BUDGET_ENV = "MAXIMIN_BUDGET"


class BudgetExceeded(RuntimeError):
    pass


class BitPoint(NamedTuple):
    value: int
    k: int

    @property
    def bits(self) -> Tuple[int, ...]:
        return tuple((self.value >> (self.k - j)) & 1 for j in range(1, self.k + 1))

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class PointSet:
    k: int
    points: FrozenSet[int]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("dimension k must be >= 1")
        if not self.points:
            raise ValueError("a point set needs at least one point")
        if any(p < 0 or p >> self.k for p in self.points):
            raise ValueError(f"points must lie in Q_{self.k}")

    def __len__(self) -> int:
        return len(self.points)

    def bitpoints(self) -> Tuple[BitPoint, ...]:
        return tuple(BitPoint(p, self.k) for p in sorted(self.points))

    def array(self) -> np.ndarray:
        return np.fromiter(self.points, dtype=np.int64, count=len(self.points))

    def mask(self) -> int:
        """The point set as a 2^k-bit integer, bit v set iff vertex v is present."""
        flags = np.zeros(1 << self.k, dtype=bool)
        flags[self.array()] = True
        return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def beta_prefix(n: int, k: Optional[int] = None) -> PointSet:
    """{beta_k(0), ..., beta_k(n-1)}; k defaults to max(1, ceil_lg(n))."""
    _check_nat(n, minimum=1)
    if k is None:
        k = max(1, ceil_lg(n))
    _check_nat(k, "k", minimum=1)
    if n > 1 << k:
        raise ValueError(f"Q_{k} has only {1 << k} vertices, cannot hold {n}")
    return PointSet(k, frozenset(range(n)))


def induced_edge_count(ps: PointSet) -> int:
    """Unordered pairs of points at Hamming distance 1."""
    return mask_edge_count(ps.mask(), ps.k)


@lru_cache(maxsize=None)
def _low_masks(k: int) -> Tuple[int, ...]:
    # dimension b -> mask of the vertices whose bit b is 0
    out = []
    for b in range(k):
        block = (1 << (1 << b)) - 1  # 2^b consecutive vertices with bit b clear
        period = 1 << (b + 1)
        m = 0
        for start in range(0, 1 << k, period):
            m |= block << start
        out.append(m)
    return tuple(out)


def mask_edge_count(mask: int, k: int, lows: Optional[Tuple[int, ...]] = None) -> int:
    """Induced edges of the vertex set encoded as a 2^k-bit mask.

    Along dimension b, vertex v (bit b clear) pairs with v + 2^b, so the
    edges are the set bits of mask & (mask >> 2^b) restricted to bit-b-clear v.
    """
    if lows is None:
        lows = _low_masks(k)
    return sum((mask & (mask >> (1 << b)) & lows[b]).bit_count() for b in range(k))


def _budget(budget: Optional[int]) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_BUDGET


def exhaustive_max_edges(n: int, k: int, budget: Optional[int] = None) -> int:
    """Max induced edge count over every n-subset of Q_k, by full enumeration.

    Raises BudgetExceeded when C(2^k, n) exceeds the budget (argument, then
    the MAXIMIN_BUDGET environment variable, then DEFAULT_BUDGET).
    """
    _check_nat(n, minimum=1)
    _check_nat(k, "k", minimum=1)
    size = 1 << k
    if n > size:
        raise ValueError(f"Q_{k} has only {size} vertices, cannot hold {n}")
    total = comb(size, n)
    limit = _budget(budget)
    if total > limit:
        raise BudgetExceeded(f"C({size}, {n}) = {total} subsets exceeds budget {limit}")
    lows = _low_masks(k)
    bits = [1 << v for v in range(size)]
    best = 0
    for combo in combinations(bits, n):
        mask = 0
        for bit in combo:
            mask |= bit
        e = mask_edge_count(mask, k, lows)
        if e > best:
            best = e
    return best


def column_counts(n: int, k: Optional[int] = None) -> Tuple[Tuple[int, int], ...]:
    """(zeros, ones) in each coordinate column j = 1..k of the beta prefix matrix."""
    ps = beta_prefix(n, k)
    pts = ps.array()
    out = []
    for j in range(1, ps.k + 1):
        ones = int(((pts >> (ps.k - j)) & 1).sum())
        out.append((len(ps) - ones, ones))
    return tuple(out)


def coordinate_splits(n: int) -> HcbpSet:
    """HCBPs read off as the hyperplane cuts x_j = 1/2 of the first n beta points."""
    _check_nat(n, minimum=2)
    pairs = set()
    for zeros, ones in column_counts(n):
        pair = Bipartition.of(zeros, ones)
        if pair.proper:
            pairs.add(pair)
    return HcbpSet(n, frozenset(pairs))
