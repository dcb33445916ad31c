"""``kappa`` command line interface."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional, Sequence

from .bernoulli import bernoulli_paper, den_b_over_2i, vsc_denominator
from .divisor import (
    ValuationLemmaQuery,
    adams_valuation_closed,
    adams_valuation_direct,
    akita_vanishes,
    resolve,
)
from .dlalgebra import bss_report
from .numtheory import is_prime, is_valid_k
from .verify import SUITES, run_suite
from .wu import wu_total_inverse, wu_vanishing_criterion

MAX_BERNOULLI_INDEX = 500
MAX_BSS_CAP = 8

log = logging.getLogger("kappa")


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kappa", description="Divisibility of the stable kappa classes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str, *flags: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        for flag in flags:
            p.add_argument(f"--{flag}", type=_positive, default=None)
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--header", action="store_true", help="add a header row to CSV output")
        return p

    add("d-table", "table of D_i", "max-i", "i", "jobs")
    add("akita", "indices where kappa_i vanishes mod p", "p", "max-i")
    add("bernoulli", "B_i, den(B_i/2i) and the von Staudt-Clausen denominator", "i", "max-i")
    add("valuation", "nu_p(1 - (-k)^s), closed form and direct", "p", "k", "s")
    add("wu", "total Wu class series (1 + e^(p-1))^-1 mod p", "p", "trunc", "i")
    add("bss", "Bockstein spectral sequence report at p = 2", "max-deg")
    v = sub.add_parser("verify", help="run the verification suites")
    v.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    return parser


def _require(args: argparse.Namespace, *names: str) -> None:
    for n in names:
        if getattr(args, n.replace("-", "_")) is None:
            raise UsageError(f"{args.command} needs --{n}")


def _emit_rows(rows: Iterable[Sequence], header: Sequence[str], args: argparse.Namespace, out) -> None:
    rows = list(rows)
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        if args.header:
            w.writerow(header)
        w.writerows(rows)
    else:
        widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
        for r in [header, *rows]:
            out.write("  ".join(str(x).rjust(w) for x, w in zip(r, widths)).rstrip() + "\n")


def _dump(obj, out) -> None:
    out.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


def _factor_str(D: dict) -> str:
    return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in D.items())


def cmd_d_table(args, out) -> int:
    if args.i is not None:
        indices: List[int] = [args.i]
    else:
        _require(args, "max-i")
        indices = list(range(1, args.max_i + 1))
    if args.jobs and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(resolve, indices, chunksize=8))
    else:
        reports = [resolve(i) for i in indices]
    if args.format == "json":
        _dump([r.to_json() for r in reports], out)
    elif args.format == "csv":
        _emit_rows(((r.i, r.value) for r in reports), ("i", "D"), args, out)
    else:
        rows = [(r.i, r.value, _factor_str(r.D), r.lower_bound, r.upper_bound) for r in reports]
        _emit_rows(rows, ("i", "D_i", "factorization", "lower", "upper"), args, out)
    return 0


def cmd_akita(args, out) -> int:
    _require(args, "p", "max-i")
    if not is_prime(args.p):
        raise UsageError(f"--p {args.p} is not a prime")
    p = args.p
    rows = [(i, akita_vanishes(p, i), wu_vanishing_criterion(p, i)) for i in range(1, args.max_i + 1)]
    if any(a != w for _, a, w in rows):
        log.error("Wu-class criterion disagrees with (p-1) | (i+1)")
        return 1
    if args.format == "json":
        _dump({"p": p, "vanishing": [i for i, v, _ in rows if v]}, out)
    elif args.format == "csv":
        _emit_rows(((i, str(v).lower()) for i, v, _ in rows), ("i", "vanishes"), args, out)
    else:
        _emit_rows(((i, f"kappa_{i} = 0 mod {p}" if v else "") for i, v, _ in rows), ("i", "mod p"), args, out)
    return 0


def cmd_bernoulli(args, out) -> int:
    if args.i is not None:
        indices = [args.i]
    else:
        _require(args, "max-i")
        indices = list(range(1, args.max_i + 1))
    if max(indices) > MAX_BERNOULLI_INDEX:
        raise UsageError(f"Bernoulli index is capped at {MAX_BERNOULLI_INDEX}")
    rows = []
    for i in indices:
        b = bernoulli_paper(i)
        rows.append((i, str(b.paper_value), den_b_over_2i(i), vsc_denominator(i)))
    if args.format == "json":
        _dump([dict(zip(("i", "B", "den_B_over_2i", "den_B"), map(str, r))) for r in rows], out)
    else:
        _emit_rows(rows, ("i", "B_i", "den(B_i/2i)", "den(B_i)"), args, out)
    return 0


def cmd_valuation(args, out) -> int:
    _require(args, "p", "k", "s")
    try:
        q = ValuationLemmaQuery(args.p, args.k, args.s)
    except ValueError as exc:
        raise UsageError(str(exc))
    direct = adams_valuation_direct(q)
    closed = adams_valuation_closed(q) if is_valid_k(q.p, q.k) else None
    row = (q.p, q.k, q.s, direct, "" if closed is None else closed)
    if args.format == "json":
        _dump({"p": q.p, "k": q.k, "s": q.s, "direct": direct, "closed": closed}, out)
    else:
        _emit_rows([row], ("p", "k", "s", "direct", "closed"), args, out)
    return 0


def cmd_wu(args, out) -> int:
    _require(args, "p")
    if not is_prime(args.p):
        raise UsageError(f"--p {args.p} is not a prime")
    if args.i is not None:
        v = wu_vanishing_criterion(args.p, args.i)
        if args.format == "json":
            _dump({"p": args.p, "i": args.i, "vanishes": v}, out)
        else:
            _emit_rows([(args.p, args.i, str(v).lower())], ("p", "i", "vanishes"), args, out)
        return 0
    _require(args, "trunc")
    series = wu_total_inverse(args.p, args.trunc)
    if args.format == "json":
        _dump({"p": args.p, "trunc": args.trunc, "coeffs": list(series.coeffs)}, out)
    else:
        _emit_rows(enumerate(series.coeffs), ("e^m", "coeff"), args, out)
    return 0


def cmd_bss(args, out) -> int:
    cap = args.max_deg or 6
    if not 5 <= cap <= MAX_BSS_CAP:
        raise UsageError(f"--max-deg must lie in 5..{MAX_BSS_CAP}")
    report = bss_report(cap)
    if args.format == "json":
        _dump(report.to_json(), out)
        return 0
    data = report.to_json()
    lines = [f"basis {k}: {v}" for k, v in data["basis_sizes"].items()]
    lines += [f"d1-cycle {k}: {v}" for k, v in data["cycles"].items()]
    for b in data["boundaries"]:
        lines.append(f"boundary {b['element']}: {b['is_boundary']}" + (f" (d1 of {b['witness']})" if b["witness"] else ""))
    lines += [f"primitive {k}: {v}" for k, v in data["primitive"].items()]
    lines += [f"flag {k}: {v}" for k, v in data["flags"].items()]
    out.write("\n".join(lines) + "\n")
    return 0


COMMANDS = {
    "d-table": cmd_d_table,
    "akita": cmd_akita,
    "bernoulli": cmd_bernoulli,
    "valuation": cmd_valuation,
    "wu": cmd_wu,
    "bss": cmd_bss,
}


def _configure_logging() -> None:
    level = os.environ.get("KAPPA_LOG", "off").lower()
    levels = {"off": logging.CRITICAL + 1, "info": logging.INFO, "debug": logging.DEBUG}
    logging.basicConfig(level=levels.get(level, logging.WARNING), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    """Parse ``argv`` and run one command; returns the exit status."""
    out = out if out is not None else sys.stdout
    _configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    log.debug("arguments: %s", vars(args))
    if args.command == "verify":
        return 0 if run_suite(args.suite, out) else 1
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        sys.stderr.write(f"kappa {args.command}: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
