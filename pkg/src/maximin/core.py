"""Binary digit sums, the maximin recurrence f(n), and the imbalance d_i(n).

f(n) is computed three ways:

* ``f_digit``   -- sum of binary digit sums of 0..n-1 (linear scan, the oracle)
* ``f_dc``      -- the floor/ceil halving recursion, memoized (production path)
* ``f_maximin`` -- the max over every proper split, by dense table (quadratic)
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet, NamedTuple

import numpy as np

__all__ = [
    "Bipartition",
    "MaximinResult",
    "ceil_lg",
    "digit_sum",
    "f_digit",
    "f_dc",
    "f",
    "f_maximin",
    "d",
    "lg_fixed",
    "deficit",
    "LG_FRAC_BITS",
    "MAXIMIN_LIMIT",
]

# Dense maximin table holds int64; f(2^16) is far below 2^63.
MAXIMIN_LIMIT = 1 << 16

LG_FRAC_BITS = 32


class Bipartition(NamedTuple):
    """A split ``n0 + n1`` stored with ``n0 >= n1``."""

    n0: int
    n1: int

    @classmethod
    def of(cls, a: int, b: int) -> "Bipartition":
        return cls(a, b) if a >= b else cls(b, a)

    @property
    def total(self) -> int:
        return self.n0 + self.n1

    @property
    def proper(self) -> bool:
        return self.n1 >= 1


@dataclass(frozen=True)
class MaximinResult:
    n: int
    value: int
    argmax: FrozenSet[Bipartition]


def _check_nat(n: int, name: str = "n", minimum: int = 0) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise TypeError(f"{name} must be an integer, got {type(n).__name__}")
    if n < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {n}")


def ceil_lg(n: int) -> int:
    """Exact ceiling of log2(n) for n >= 1, with ceil_lg(1) == 0."""
    _check_nat(n, minimum=1)
    return (n - 1).bit_length()


def digit_sum(n: int) -> int:
    """Number of 1-bits of n."""
    _check_nat(n)
    return int(n).bit_count()


def f_digit(n: int) -> int:
    """f(n) as the total number of 1-bits in 0, 1, ..., n-1."""
    _check_nat(n, minimum=1)
    return sum(i.bit_count() for i in range(n))


@lru_cache(maxsize=None)
def _f_dc(n: int) -> int:
    if n == 1:
        return 0
    lo = n >> 1
    return lo + _f_dc(lo) + _f_dc(n - lo)


def f_dc(n: int) -> int:
    """f(n) by the halving recursion f(n) = floor(n/2) + f(floor(n/2)) + f(ceil(n/2)).

    Only O(lg n) distinct arguments appear per level, so the memo is a map
    rather than a table and arbitrarily large n is cheap.
    """
    _check_nat(n, minimum=1)
    return _f_dc(int(n))


f = f_dc


class _MaximinTable:
    """Grow-only table of max_{n1+n0=n} (n1 + f(n1) + f(n0)), filled from f(1) = 0.

    Never consults ``f_dc`` or ``f_digit``; it is the independent quadratic
    certificate for both. Writes are serialized by a lock.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._vals = np.zeros(2, dtype=np.int64)  # index 0 unused

    def ensure(self, n: int) -> np.ndarray:
        vals = self._vals
        if n < len(vals):
            return vals
        with self._lock:
            vals = self._vals
            if n < len(vals):
                return vals
            start = len(vals)
            size = max(n + 1, 2 * start)
            grown = np.zeros(size, dtype=np.int64)
            grown[:start] = vals
            for m in range(max(start, 2), size):
                n1 = np.arange(1, m // 2 + 1)
                grown[m] = int(np.max(n1 + grown[n1] + grown[m - n1]))
            self._vals = grown
            return grown


_table = _MaximinTable()


def f_maximin(n: int) -> MaximinResult:
    """Maximize n1 + f(n1) + f(n0) over every proper split n = n0 + n1.

    Quadratic in n; meant for certifying the other routes, not serving.
    """
    _check_nat(n, minimum=2)
    if n > MAXIMIN_LIMIT:
        raise ValueError(f"f_maximin is a dense-table oracle limited to n <= {MAXIMIN_LIMIT}")
    vals = _table.ensure(n)
    n1 = np.arange(1, n // 2 + 1)
    scores = n1 + vals[n1] + vals[n - n1]
    best = int(scores.max())
    argmax = frozenset(Bipartition(n - int(a), int(a)) for a in n1[scores == best])
    return MaximinResult(n=n, value=best, argmax=argmax)


def d(i: int, n: int) -> int:
    """Column imbalance d_i(n) = 2^(i-1) - |(n mod 2^i) - 2^(i-1)|.

    Defined for every n >= 0 (d_i(0) = 0); for i > ceil_lg(n) it equals n.
    """
    _check_nat(i, "i", minimum=1)
    _check_nat(n)
    half = 1 << (i - 1)
    r = n & ((half << 1) - 1)
    return half - abs(r - half)


def lg_fixed(n: int, frac_bits: int = LG_FRAC_BITS) -> int:
    """floor(lg(n) * 2^frac_bits) by integer repeated squaring.

    Exact at powers of two; elsewhere the error is below 2^-(frac_bits-1).
    """
    _check_nat(n, minimum=1)
    e = n.bit_length() - 1
    work = frac_bits + 32
    # mantissa in [1, 2) with `work` fractional bits
    x = (n << work) >> e
    one, two = 1 << work, 2 << work
    result = e
    for _ in range(frac_bits):
        x = (x * x) >> work
        result <<= 1
        if x >= two:
            x >>= 1
            result |= 1
    assert one <= x < two
    return result


def deficit(n: int) -> float:
    """f(n) - (n/2) lg n, with lg n in fixed point (diagnostic only)."""
    _check_nat(n, minimum=1)
    lg = Fraction(lg_fixed(n), 1 << LG_FRAC_BITS)
    return float(f_dc(n) - Fraction(n, 2) * lg)
