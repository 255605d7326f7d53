"""Truncated exact expansions of the HCBP generating functions.

    c(x) = 1/(1-x) + sum_{i>=1} c_i(x)
    h(x) = sum_{i>=1} c_i(x),
    c_i(x) = x^(2^(i-1)+1) (1 - x^(2^i - 1)) / ((1-x)(1-x^(2^(i+1))))

Coefficients are Python ints in dense lists truncated at ``order``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .core import _check_nat

__all__ = [
    "SeriesCoeffs",
    "c_i_indicator",
    "c_via_slices",
    "slice_term",
    "expand_h",
    "expand_c",
    "poly_times",
    "div_one_minus_xpow",
]


@dataclass(frozen=True)
class SeriesCoeffs:
    order: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.order:
            raise ValueError(f"expected {self.order} coefficients, got {len(self.coeffs)}")

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order


def c_i_indicator(i: int, n: int) -> int:
    """1 iff |(n mod 2^(i+1)) - 2^i| < 2^(i-1); c_0(n) = 1."""
    _check_nat(i, "i")
    _check_nat(n)
    if i == 0:
        return 1
    full = 1 << (i + 1)
    return int(abs(n % full - (1 << i)) < (1 << (i - 1)))


def c_via_slices(n: int) -> int:
    _check_nat(n)
    if n <= 1:
        return 1
    k = (n - 1).bit_length()
    return 1 + sum(c_i_indicator(i, n) for i in range(1, k + 1))


def poly_times(series: Sequence[int], poly: Dict[int, int], order: int) -> List[int]:
    """Multiply a truncated series by a sparse polynomial {degree: coeff}."""
    out = [0] * order
    for deg, coef in poly.items():
        if deg >= order:
            continue
        for n in range(deg, order):
            out[n] += coef * series[n - deg]
    return out


def div_one_minus_xpow(series: Sequence[int], step: int) -> List[int]:
    """Multiply by 1/(1 - x^step) = 1 + x^step + x^(2 step) + ..., in place of a convolution."""
    out = list(series)
    for n in range(step, len(out)):
        out[n] += out[n - step]
    return out


def slice_term(i: int, order: int) -> List[int]:
    """Truncated expansion of c_i(x), i >= 1."""
    _check_nat(i, "i", minimum=1)
    one = [1] + [0] * (order - 1) if order else []
    low = (1 << (i - 1)) + 1
    num = poly_times(one, {low: 1, low + (1 << i) - 1: -1}, order)
    return div_one_minus_xpow(div_one_minus_xpow(num, 1), 1 << (i + 1))


def _slice_count(order: int) -> int:
    # last i whose lowest monomial x^(2^(i-1)+1) still lands below `order`
    i = 0
    while (1 << i) + 1 < order:
        i += 1
    return i


def expand_h(order: int) -> SeriesCoeffs:
    _check_nat(order, "order", minimum=1)
    total = [0] * order
    for i in range(1, _slice_count(order) + 1):
        for n, v in enumerate(slice_term(i, order)):
            total[n] += v
    return SeriesCoeffs(order, tuple(total))


def expand_c(order: int) -> SeriesCoeffs:
    hs = expand_h(order)
    ones = div_one_minus_xpow([1] + [0] * (order - 1), 1)
    return SeriesCoeffs(order, tuple(a + b for a, b in zip(ones, hs.coeffs)))
