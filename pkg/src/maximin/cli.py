"""Command-line interface: ``maximin seq|inspect|verify|series|strata|plot-deficit``.

Exit codes: 0 success, 1 verification failure or strata mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, TextIO, Tuple

from . import core, genfunc, hcbp
from .abr import abr_format, abr_greedy
from .verify import SUITES, load_bounds, run_verify

MAX_INPUT = 1 << 62

Record = Tuple[int, object]

SEQUENCES: Dict[str, Tuple[Callable[[int], object], int]] = {
    # name -> (function, smallest admissible index)
    "f": (core.f_dc, 1),
    "h": (lambda n: 0 if n == 0 else hcbp.h_reflect(n), 0),
    "c": (hcbp.c_count, 0),
    "s": (core.digit_sum, 0),
    "deficit": (core.deficit, 1),
}


def nat(text: str) -> int:
    if not text.isdigit() or not text.isascii():
        raise argparse.ArgumentTypeError(f"expected a decimal unsigned integer, got {text!r}")
    value = int(text)
    if value > MAX_INPUT:
        raise argparse.ArgumentTypeError(f"{text} exceeds the input limit 2^62")
    return value


def _fmt(value: object) -> str:
    return repr(value) if isinstance(value, float) else str(value)


def write_records(records: Iterable[Record], fmt: str, out: TextIO) -> None:
    if fmt == "bfile":
        for n, v in records:
            out.write(f"{n} {_fmt(v)}\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "value"])
        for n, v in records:
            writer.writerow([n, _fmt(v)])
    elif fmt == "json":
        json.dump([{"n": n, "value": v} for n, v in records], out)
        out.write("\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")


def read_bfile(lines: Iterable[str]) -> List[Tuple[int, str]]:
    """Parse b-file lines back into (index, value-text) records."""
    out = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        idx, val = line.split()
        out.append((int(idx), val))
    return out


def sequence_records(name: str, start: int, stop: int) -> Iterator[Record]:
    fn, lowest = SEQUENCES[name]
    if start < lowest:
        raise ValueError(f"sequence {name!r} starts at index {lowest}")
    if start > stop:
        raise ValueError(f"empty range: from {start} > to {stop}")
    for n in range(start, stop + 1):
        yield n, fn(n)


def inspect_report(n: int) -> dict:
    rep = abr_greedy(n)
    pairs = []
    if n >= 2:
        for pair, idx in sorted(hcbp.hcbp_witnesses(n).items(), key=lambda kv: kv[0].n1, reverse=True):
            pairs.append({"n0": pair.n0, "n1": pair.n1, "d": pair.n0 - pair.n1, "indices": idx})
    return {
        "n": n,
        "f": core.f_dc(n),
        "h": hcbp.h_reflect(n),
        "c": hcbp.c_count(n),
        "abr": list(rep),
        "abr_text": abr_format(rep),
        "hcbp": pairs,
    }


def _print_inspect(r: dict, out: TextIO) -> None:
    out.write(f"n     = {r['n']}\n")
    out.write(f"f(n)  = {r['f']}\n")
    out.write(f"h(n)  = {r['h']}\n")
    out.write(f"c(n)  = {r['c']}\n")
    out.write(f"ABR   = {r['abr_text']}\n")
    if not r["hcbp"]:
        out.write("HCBPs: none\n")
        return
    out.write("HCBPs:\n")
    for p in r["hcbp"]:
        idx = ", ".join(map(str, p["indices"]))
        out.write(f"  ({p['n0']}, {p['n1']})  d = {p['d']}  i = {idx}\n")


def _parse_bound(text: str) -> Tuple[str, int]:
    key, sep, val = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected KEY=VALUE, got {text!r}")
    return key.strip(), nat(val.strip())


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="maximin", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("seq", help="emit f, h, c, s or deficit over an index range")
    s.add_argument("name", choices=sorted(SEQUENCES))
    s.add_argument("start", type=nat, metavar="from")
    s.add_argument("stop", type=nat, metavar="to")
    s.add_argument("--format", choices=["bfile", "csv", "json"], default="bfile")

    s = sub.add_parser("inspect", help="f, h, c, ABR and all HCBPs of one n")
    s.add_argument("n", type=nat)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("verify", help="run cross-verification suites")
    s.add_argument("limit", type=nat)
    s.add_argument("--suite", action="append", choices=sorted(SUITES), dest="suites")
    s.add_argument("--config", help="key = value file overriding the default bounds")
    s.add_argument("--bound", action="append", type=_parse_bound, default=[], metavar="KEY=N")

    s = sub.add_parser("series", help="coefficients of c(x) or h(x)")
    s.add_argument("order", type=nat)
    s.add_argument("which", choices=["c", "h"])
    s.add_argument("--format", choices=["bfile", "csv", "json"], default="bfile")

    s = sub.add_parser("strata", help="|H_k(l)| by scan and by 2 C(k-2, l-1)")
    s.add_argument("k", type=nat)
    s.add_argument("--brute-limit", type=nat, default=hcbp.STRATA_BRUTE_LIMIT)

    s = sub.add_parser("plot-deficit", help="n, f(n) - (n/2) lg n as CSV")
    s.add_argument("start", type=nat, metavar="from")
    s.add_argument("stop", type=nat, metavar="to")
    return p


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    def usage(msg: str) -> int:
        err.write(f"maximin {args.command}: error: {msg}\n")
        return 2

    try:
        if args.command == "seq":
            write_records(list(sequence_records(args.name, args.start, args.stop)), args.format, out)
        elif args.command == "plot-deficit":
            write_records(list(sequence_records("deficit", args.start, args.stop)), "csv", out)
        elif args.command == "inspect":
            if args.n < 1:
                return usage("n must be >= 1")
            report = inspect_report(args.n)
            if args.json:
                json.dump(report, out)
                out.write("\n")
            else:
                _print_inspect(report, out)
        elif args.command == "series":
            if args.order < 1:
                return usage("order must be >= 1")
            coeffs = (genfunc.expand_c if args.which == "c" else genfunc.expand_h)(args.order)
            write_records(enumerate(coeffs.coeffs), args.format, out)
        elif args.command == "strata":
            if args.k < 2:
                return usage("k must be >= 2")
            rows = hcbp.strata_table(args.k, args.brute_limit)
            out.write("l,brute,formula,status\n")
            for r in rows:
                brute = "-" if r.brute is None else r.brute
                out.write(f"{r.ell},{brute},{r.formula},{'ok' if r.ok else 'MISMATCH'}\n")
            return 0 if all(r.ok for r in rows) else 1
        elif args.command == "verify":
            if args.limit < 8:
                return usage("limit must be >= 8")
            bounds = load_bounds(args.config)
            for key, val in args.bound:
                if key not in bounds:
                    return usage(f"unknown bound {key!r}; known: {', '.join(sorted(bounds))}")
                bounds[key] = val
            report = run_verify(args.limit, args.suites, bounds)
            for name, results in report.results.items():
                for r in results:
                    out.write(f"{name}: {r.line()}\n")
            out.write("verify: " + ("PASS" if report.ok else "FAIL") + "\n")
            err.write(f"verify finished in {report.elapsed:.2f} s\n")
            return 0 if report.ok else 1
    except (ValueError, OSError) as exc:
        return usage(str(exc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
