"""Alternating binary representation (ABR).

n = 2^a1 - 2^a2 + 2^a3 - ... with a1 > a2 > ... > a(l-1) > a(l) + 1.

Only the exponent list is stored; the sign of the t-th term is (-1)^(t-1).
"""

from __future__ import annotations

from typing import Iterable, Tuple

from .core import _check_nat

__all__ = [
    "AbrError",
    "AbrRep",
    "abr_greedy",
    "abr_runs",
    "abr_value",
    "abr_validate",
    "abr_format",
    "abr",
]

AbrRep = Tuple[int, ...]


class AbrError(ValueError):
    """An exponent list that breaks the ABR chain condition."""


def abr_greedy(n: int) -> AbrRep:
    """ABR of n by repeated reflection: a1 = ceil_lg(n), then recurse on 2^a1 - n."""
    _check_nat(n, minimum=1)
    out = []
    while True:
        a = (n - 1).bit_length()  # ceil_lg(n)
        out.append(a)
        n = (1 << a) - n
        if n == 0:
            return tuple(out)


def abr_runs(n: int) -> AbrRep:
    """ABR of n by rewriting maximal runs of 1-bits.

    A run covering bits hi..lo becomes 2^(hi+1) - 2^lo. The lowest run is kept
    as +2^lo when it is a single bit (n = 2^a (4m + 1)). Maximal runs are
    separated by at least one 0-bit, so neighbouring rewrites never share an
    exponent and the result needs no carry normalization.
    """
    _check_nat(n, minimum=1)
    runs = []  # (hi, lo), scanned from the least significant end
    pos = 0
    m = n
    while m:
        if m & 1:
            lo = pos
            while m & 1:
                m >>= 1
                pos += 1
            runs.append((pos - 1, lo))
        else:
            tz = (m & -m).bit_length() - 1
            m >>= tz
            pos += tz
    out = []
    last = len(runs) - 1
    for idx in range(last, -1, -1):
        hi, lo = runs[idx]
        if idx == 0 and hi == lo:
            out.append(lo)
        else:
            out.extend((hi + 1, lo))
    return tuple(out)


abr = abr_greedy


def abr_validate(rep: Iterable[int]) -> AbrRep:
    rep = tuple(rep)
    if not rep:
        raise AbrError("empty exponent list (need at least one term)")
    for t, a in enumerate(rep, start=1):
        if not isinstance(a, int) or isinstance(a, bool) or a < 0:
            raise AbrError(f"exponent {t} must be a non-negative integer, got {a!r}")
    for t in range(1, len(rep) - 1):
        if rep[t - 1] <= rep[t]:
            raise AbrError(
                f"exponents must strictly decrease: a{t}={rep[t - 1]} <= a{t + 1}={rep[t]}"
            )
    if len(rep) >= 2:
        l = len(rep)
        if rep[-2] <= rep[-1] + 1:
            raise AbrError(
                f"last gap too small: need a{l - 1} > a{l} + 1, got a{l - 1}={rep[-2]}, a{l}={rep[-1]}"
            )
    return rep


def abr_value(rep: Iterable[int]) -> int:
    """Evaluate a validated ABR exponent list."""
    rep = abr_validate(rep)
    total = 0
    for t, a in enumerate(rep):
        total += -(1 << a) if t & 1 else (1 << a)
    return total


def abr_format(rep: Iterable[int]) -> str:
    """Render as ``+2^4 -2^2 +2^0``."""
    return " ".join(("-" if t & 1 else "+") + f"2^{a}" for t, a in enumerate(rep))
