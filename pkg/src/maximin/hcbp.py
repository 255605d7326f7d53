"""Hypercubic bipartitions (HCBPs) of n and their count h(n).

h(n) is available by four independent routes:

* ``h_enum``    -- count distinct d_i(n), 1 <= i <= ceil_lg(n), excluding d = n
* ``h_reflect`` -- h(n) = h(2^ceil_lg(n) - n) + 1
* ``h_mod8``    -- the halving recurrence dispatched on n mod 4 / n mod 8
* ``h_abr``     -- the length of the alternating binary representation
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple

from .abr import abr_greedy
from .core import Bipartition, _check_nat, ceil_lg, d

__all__ = [
    "HcbpSet",
    "enumerate_hcbp",
    "hcbp_witnesses",
    "h_enum",
    "h_reflect",
    "h_mod8",
    "h_abr",
    "h",
    "c_count",
    "c_distinct_d",
    "H_METHODS",
    "StrataRow",
    "StrataMismatch",
    "strata_table",
    "strata",
    "alternating_point",
    "extremal_pairs",
    "STRATA_BRUTE_LIMIT",
]

STRATA_BRUTE_LIMIT = 20

_H_BASE = (0, 1, 1, 1, 2, 2, 1, 1)  # h(1..8)


@dataclass(frozen=True)
class HcbpSet:
    n: int
    pairs: FrozenSet[Bipartition]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Bipartition]:
        return iter(sorted(self.pairs, reverse=True))

    def __contains__(self, item) -> bool:
        return tuple(item) in self.pairs


def hcbp_witnesses(n: int) -> Dict[Bipartition, List[int]]:
    """Map each proper HCBP of n to the indices i that produce it."""
    _check_nat(n, minimum=2)
    out: Dict[Bipartition, List[int]] = {}
    for i in range(1, ceil_lg(n) + 1):
        di = d(i, n)
        if di == n:
            continue
        out.setdefault(Bipartition((n + di) // 2, (n - di) // 2), []).append(i)
    return out


def enumerate_hcbp(n: int) -> HcbpSet:
    """All proper HCBPs ((n + d_i(n))/2, (n - d_i(n))/2) for 1 <= i <= ceil_lg(n)."""
    return HcbpSet(n, frozenset(hcbp_witnesses(n)))


def h_enum(n: int) -> int:
    _check_nat(n, minimum=1)
    if n == 1:
        return 0
    return len({d(i, n) for i in range(1, ceil_lg(n) + 1)} - {n})


def h_reflect(n: int) -> int:
    """Iterate n -> 2^ceil_lg(n) - n down to 1 or 2; at most ceil_lg(n) - 1 steps."""
    _check_nat(n, minimum=1)
    steps = 0
    while n > 2:
        n = (1 << (n - 1).bit_length()) - n
        steps += 1
    if n == 0:
        # reached from a power of two: h(0) = c(0) - 1 = 0
        return steps
    return steps + n - 1


def h_mod8(n: int) -> int:
    _check_nat(n, minimum=1)
    acc = 0
    while n > 8:
        if n & 3 == 0:
            n >>= 1
        elif n & 3 == 2:
            n >>= 1
            acc += 1
        else:
            r = n & 7
            if r == 1:
                n = (n + 1) >> 1
            elif r == 3:
                n = (n - 1) >> 1
                acc += 1
            elif r == 5:
                n = (n + 1) >> 1
                acc += 1
            else:
                n = (n - 1) >> 1
    return acc + _H_BASE[n - 1]


def h_abr(n: int) -> int:
    """h from the ABR length l: l - 1 for odd n, l for even n."""
    rep = abr_greedy(n)
    return len(rep) - 1 if rep[-1] == 0 else len(rep)


h = h_reflect

H_METHODS = {
    "enum": h_enum,
    "reflect": h_reflect,
    "mod8": h_mod8,
    "abr": h_abr,
}


def c_count(n: int) -> int:
    """c(n) = h(n) + 1, counting the trivial split; c(0) = c(1) = 1."""
    _check_nat(n)
    c = 1
    while n > 1:
        n = (1 << (n - 1).bit_length()) - n
        c += 1
    return c


def c_distinct_d(n: int) -> int:
    """c(n) as the number of distinct values of d_i(n) over all i >= 1."""
    _check_nat(n)
    if n == 0:
        return 1
    # d_i(n) = n for every i > ceil_lg(n), so one extra index covers the tail
    return len({d(i, n) for i in range(1, ceil_lg(n) + 2)})


@dataclass(frozen=True)
class StrataRow:
    ell: int
    brute: Optional[int]
    formula: int

    @property
    def ok(self) -> bool:
        return self.brute is None or self.brute == self.formula


class StrataMismatch(AssertionError):
    pass


def strata_table(k: int, brute_limit: int = STRATA_BRUTE_LIMIT) -> List[StrataRow]:
    """|{n : ceil_lg(n) = k, h(n) = l}| by scan (k <= brute_limit) and by 2 C(k-2, l-1)."""
    _check_nat(k, "k", minimum=2)
    counts: Optional[Dict[int, int]] = None
    if k <= brute_limit:
        counts = {}
        for n in range((1 << (k - 1)) + 1, (1 << k) + 1):
            hv = h_reflect(n)
            counts[hv] = counts.get(hv, 0) + 1
        stray = set(counts) - set(range(1, k))
        if stray:
            raise StrataMismatch(f"k={k}: h values {sorted(stray)} outside [1, {k - 1}]")
    return [
        StrataRow(ell, None if counts is None else counts.get(ell, 0), 2 * comb(k - 2, ell - 1))
        for ell in range(1, k)
    ]


def strata(k: int, brute_limit: int = STRATA_BRUTE_LIMIT) -> List[int]:
    rows = strata_table(k, brute_limit)
    bad = [r for r in rows if not r.ok]
    if bad:
        raise StrataMismatch(
            f"k={k}: " + ", ".join(f"l={r.ell} brute {r.brute} != formula {r.formula}" for r in bad)
        )
    return [r.formula for r in rows]


def alternating_point(k: int) -> int:
    """a_k = (2^(k+1) + (-1)^k) / 3 = 2^k - 2^(k-1) + ... ending in +-2^0."""
    _check_nat(k, "k", minimum=1)
    return ((1 << (k + 1)) + (1 if k % 2 == 0 else -1)) // 3


def extremal_pairs(
    k: int, brute_limit: int = STRATA_BRUTE_LIMIT
) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Numbers with ceil_lg(n) = k attaining h = 1 and h = k - 1.

    min: {2^k - 1, 2^k}. max: {a_k, a_k - (-1)^k} for k >= 3; for k = 2 the
    two extremes coincide at {3, 4}. Cross-checked by scan when k <= brute_limit.
    """
    _check_nat(k, "k", minimum=2)
    lo = frozenset({(1 << k) - 1, 1 << k})
    if k == 2:
        hi = lo
    else:
        a = alternating_point(k)
        hi = frozenset({a, a - (1 if k % 2 == 0 else -1)})
    if k <= brute_limit:
        scan_lo: Set[int] = set()
        scan_hi: Set[int] = set()
        for n in range((1 << (k - 1)) + 1, (1 << k) + 1):
            hv = h_reflect(n)
            if hv == 1:
                scan_lo.add(n)
            if hv == k - 1:
                scan_hi.add(n)
        if scan_lo != lo or scan_hi != hi:
            raise StrataMismatch(
                f"k={k}: closed form min {sorted(lo)} max {sorted(hi)}, "
                f"scan min {sorted(scan_lo)} max {sorted(scan_hi)}"
            )
    return lo, hi
