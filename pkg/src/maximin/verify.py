"""Cross-verification suites behind ``maximin verify``.

Each suite returns a list of PropertyResult; a failure carries the first
counterexample found. Per-suite bounds come from a key = value config file
(see ``verify_defaults.cfg``) and are capped by the run's ``limit``.
"""

from __future__ import annotations

import configparser
import os
import time
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Dict, Iterable, List, Optional

from . import core, genfunc, grid, hcbp
from .abr import abr_greedy, abr_runs, abr_value
from .core import ceil_lg, d

__all__ = [
    "PropertyResult",
    "VerifyReport",
    "SUITES",
    "load_bounds",
    "run_verify",
]

CONFIG_ENV = "MAXIMIN_CONFIG"


@dataclass
class PropertyResult:
    name: str
    passed: bool
    checked: int
    counterexample: Optional[object] = None

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        msg = f"[{tag}] {self.name} ({self.checked} checked)"
        if not self.passed:
            msg += f" counterexample: {self.counterexample}"
        return msg


@dataclass
class VerifyReport:
    limit: int
    results: Dict[str, List[PropertyResult]] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.passed for rs in self.results.values() for r in rs)

    def failures(self) -> List[PropertyResult]:
        return [r for rs in self.results.values() for r in rs if not r.passed]


def load_bounds(path: Optional[str] = None) -> Dict[str, int]:
    """Read the [verify] section of the defaults file, overlaid by ``path`` or $MAXIMIN_CONFIG."""
    parser = configparser.ConfigParser()
    parser.read_string(resources.files("maximin").joinpath("verify_defaults.cfg").read_text())
    path = path or os.environ.get(CONFIG_ENV)
    if path:
        if not parser.read(path):
            raise FileNotFoundError(path)
    return {key: parser.getint("verify", key) for key in parser.options("verify")}


def _check(name: str, cases: Iterable, pred: Callable[..., bool]) -> PropertyResult:
    count = 0
    for case in cases:
        count += 1
        if not pred(case):
            return PropertyResult(name, False, count, case)
    return PropertyResult(name, True, count)


def suite_agreement(limit: int, b: Dict[str, int]) -> List[PropertyResult]:
    top = min(limit, b["agreement"])
    base = [hcbp.h_enum, hcbp.h_reflect, hcbp.h_mod8, hcbp.h_abr]

    def agree(n):
        v = base[0](n)
        return all(fn(n) == v for fn in base[1:])

    return [
        _check(f"h_enum = h_reflect = h_mod8 = h_abr on [1, {top}]", range(1, top + 1), agree),
        _check(
            f"c_count = h + 1 = distinct d_i on [1, {top}]",
            range(1, top + 1),
            lambda n: hcbp.c_count(n) == hcbp.h_reflect(n) + 1 == hcbp.c_distinct_d(n),
        ),
        _check(
            f"1 <= h(n) <= ceil_lg(n) - 1 for n in [3, {top}]",
            range(3, top + 1),
            lambda n: 1 <= hcbp.h_reflect(n) <= ceil_lg(n) - 1,
        ),
    ]


def suite_maximin(limit: int, b: Dict[str, int]) -> List[PropertyResult]:
    top = min(limit, b["maximin"])

    def f_routes(n):
        v = core.f_dc(n)
        return v == core.f_digit(n) and (n < 2 or core.f_maximin(n).value == v)

    return [
        _check(f"f_digit = f_dc = f_maximin on [1, {top}]", range(1, top + 1), f_routes),
        _check(
            f"f(n+1) - f(n) = s(n) on [1, {top}]",
            range(1, top + 1),
            lambda n: core.f_dc(n + 1) - core.f_dc(n) == core.digit_sum(n),
        ),
        _check(
            f"maximin argmax = HCBPs on [2, {top}]",
            range(2, top + 1),
            lambda n: core.f_maximin(n).argmax == hcbp.enumerate_hcbp(n).pairs,
        ),
        _check(
            f"odd-odd HCBPs of even n are balanced on [2, {top}]",
            range(2, top + 1),
            lambda n: all(
                p.n0 == p.n1 or p.n0 % 2 == 0 or p.n1 % 2 == 0
                for p in hcbp.enumerate_hcbp(n).pairs
            ),
        ),
    ]


def suite_geometry(limit: int, b: Dict[str, int]) -> List[PropertyResult]:
    ex_top = min(limit, b["geometry_exhaustive"], 16)
    pre_top = min(limit, b["geometry_prefix"])
    return [
        _check(
            f"exhaustive max edges in Q_4 = f(n) on [1, {ex_top}]",
            range(1, ex_top + 1),
            lambda n: grid.exhaustive_max_edges(n, 4) == core.f_dc(n),
        ),
        _check(
            f"beta prefix induces f(n) edges on [1, {pre_top}]",
            range(1, pre_top + 1),
            lambda n: grid.induced_edge_count(grid.beta_prefix(n)) == core.f_dc(n),
        ),
        _check(
            f"coordinate splits = HCBPs on [2, {pre_top}]",
            range(2, pre_top + 1),
            lambda n: grid.coordinate_splits(n).pairs == hcbp.enumerate_hcbp(n).pairs,
        ),
    ]


def suite_series(limit: int, b: Dict[str, int]) -> List[PropertyResult]:
    order = min(limit, b["series"])
    hs = genfunc.expand_h(order)
    cs = genfunc.expand_c(order)
    return [
        _check(
            f"h(x) coefficients = h(n) below {order}",
            range(order),
            lambda n: hs[n] == (0 if n == 0 else hcbp.h_enum(n)),
        ),
        _check(
            f"c(x) coefficients = c(n) = slice sum below {order}",
            range(order),
            lambda n: cs[n] == hcbp.c_count(n) == genfunc.c_via_slices(n),
        ),
    ]


def suite_strata(limit: int, b: Dict[str, int]) -> List[PropertyResult]:
    k_top = max(2, min(b["strata"], ceil_lg(limit)))

    def row_ok(k):
        rows = hcbp.strata_table(k, brute_limit=k_top)
        return all(r.ok for r in rows) and sum(r.brute for r in rows) == 1 << (k - 1)

    def extremes_ok(k):
        try:
            hcbp.extremal_pairs(k, brute_limit=k_top)
        except hcbp.StrataMismatch:
            return False
        return True

    ks = range(2, k_top + 1)
    return [
        _check(f"|H_k(l)| = 2 C(k-2, l-1) for k in [2, {k_top}]", ks, row_ok),
        _check(f"extremal h values for k in [2, {k_top}]", ks, extremes_ok),
    ]


def _valid_abr_lists(max_top: int):
    """Every exponent list satisfying the ABR chain with a1 <= max_top."""
    for a1 in range(max_top + 1):
        for mask in range(1 << a1):
            rep = (a1,) + tuple(x for x in range(a1 - 1, -1, -1) if mask >> x & 1)
            if len(rep) == 1 or rep[-2] > rep[-1] + 1:
                yield rep


def suite_abr(limit: int, b: Dict[str, int]) -> List[PropertyResult]:
    top = min(limit, b["abr"])
    utop = min(b["abr_uniqueness"], max(1, ceil_lg(limit)))

    def roundtrip(n):
        rep = abr_greedy(n)
        return abr_value(rep) == n and abr_runs(n) == rep and (rep[-1] == 0) == (n % 2 == 1)

    def reflection(n):
        rep = abr_greedy(n)
        return len(rep) == 1 or rep[1:] == abr_greedy((1 << rep[0]) - n)

    seen: Dict[int, tuple] = {}

    def unique(rep):
        v = abr_value(rep)
        if v in seen or abr_greedy(v) != rep:
            return False
        seen[v] = rep
        return True

    res = [
        _check(f"ABR round trip and greedy = runs on [1, {top}]", range(1, top + 1), roundtrip),
        _check(f"ABR tail is ABR of 2^a1 - n on [1, {top}]", range(1, top + 1), reflection),
        _check(f"valid ABR lists with a1 <= {utop} are injective", _valid_abr_lists(utop), unique),
    ]
    covered = set(seen) == set(range(1, (1 << utop) + 1))
    res.append(PropertyResult(f"valid ABR lists with a1 <= {utop} cover [1, 2^{utop}]", covered, len(seen),
                              None if covered else sorted(set(range(1, (1 << utop) + 1)) - set(seen))[:5]))
    return res


def suite_claims(limit: int, b: Dict[str, int]) -> List[PropertyResult]:
    n_top = min(limit, b["claims"])
    l_top = min(limit, b["lemma"])
    i_top = 12
    ns = range(n_top + 1)

    def claim1(i):
        # d_i(m) = d_i(n) <=> m = +-n mod 2^i, checked as equality of the two partitions of [0, n_top]
        mod = 1 << i
        by_d: Dict[int, int] = {}
        by_res: Dict[int, int] = {}
        for n in ns:
            key = min(n % mod, -n % mod)
            v = d(i, n)
            if by_d.setdefault(v, key) != key or by_res.setdefault(key, v) != v:
                return False
        return True

    def claim21(ij):
        i, j = ij
        return all(d(i, n) <= d(j, n) for n in ns)

    def claim22(ij):
        i, j = ij
        values = {d(i, n) for n in ns}
        return all(d(j, m) == d(i, m) for m in ns if d(j, m) in values)

    def claim3(n):
        return all(
            d(i + 1, 2 * n) == 2 * d(i, n) and d(i + 1, 2 * n + 1) == d(i, n + 1) + d(i, n)
            for i in range(1, i_top + 1)
        )

    def lemma1(n):
        for i in range(1, 11):
            for j in range(1, 11):
                dj, di = d(j, n + 1), d(i, n)
                if abs(dj - di) == 1 and not any(dj + di == d(l, 2 * n + 1) for l in (3, i + 1, j + 1)):
                    return False
        return True

    def d_shape(n):
        for i in range(1, i_top + 1):
            v = d(i, n)
            half = 1 << (i - 1)
            if not 0 <= v <= min(n, half) or v != d(i, n + 2 * half):
                return False
            if n <= half and v != n:
                return False
            if n <= 2 * half and v != d(i, 2 * half - n):
                return False
        return True

    pairs = [(i, j) for i in range(1, i_top + 1) for j in range(i, i_top + 1)]
    return [
        _check(f"d_i(m) = d_i(n) iff m = +-n mod 2^i, i <= {i_top}, n <= {n_top}", range(1, i_top + 1), claim1),
        _check(f"i <= j implies d_i(n) <= d_j(n), n <= {n_top}", pairs, claim21),
        _check(f"i <= j, d_j(m) = d_i(n) implies d_j(m) = d_i(m), m, n <= {n_top}", pairs, claim22),
        _check(f"doubling laws for d, n <= {n_top}", ns, claim3),
        _check(f"d_j(n+1) = d_i(n) +- 1 sums to some d_l(2n+1), n <= {l_top}", range(l_top + 1), lemma1),
        _check(f"d_i bounded, periodic and even, n <= {n_top}", ns, d_shape),
    ]


SUITES: Dict[str, Callable[[int, Dict[str, int]], List[PropertyResult]]] = {
    "agreement": suite_agreement,
    "maximin": suite_maximin,
    "geometry": suite_geometry,
    "series": suite_series,
    "strata": suite_strata,
    "abr": suite_abr,
    "claims": suite_claims,
}


def run_verify(
    limit: int,
    suites: Optional[Iterable[str]] = None,
    bounds: Optional[Dict[str, int]] = None,
) -> VerifyReport:
    if limit < 8:
        raise ValueError("verify limit must be >= 8")
    bounds = bounds if bounds is not None else load_bounds()
    names = list(suites) if suites else list(SUITES)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    report = VerifyReport(limit)
    t0 = time.perf_counter()
    for name in names:
        report.results[name] = SUITES[name](limit, bounds)
    report.elapsed = time.perf_counter() - t0
    return report
