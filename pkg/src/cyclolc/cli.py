"""Command-line front end: ``analyze``, ``sweep`` and ``tables``.

Exit codes: 0 success, 1 oracle disagreement, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

import numpy as np

from . import extfield
from .cyclotomy import (
    build_system,
    classify,
    cyclotomic_numbers_bruteforce,
    cyclotomic_numbers_formula,
    quartic_decomposition,
    table_consistent_b,
)
from .errors import CycloError, FormulaInconsistency
from .numthy import PrimePair, common_primitive_root, generator_from_roots, is_prime, primes_between
from .predict import RECORD_FIELDS, verify

log = logging.getLogger("cyclolc")

EXIT_OK, EXIT_BREACH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- helpers


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}")


def _range(text: str) -> tuple[int, int]:
    parts = _int_list(text.replace(":", ","))
    if len(parts) != 2 or parts[0] > parts[1]:
        raise argparse.ArgumentTypeError(f"expected LO:HI with LO <= HI, got {text!r}")
    return parts[0], parts[1]


def _pair(p: int, q: int) -> PrimePair:
    try:
        pair = PrimePair(p, q)
    except CycloError as exc:
        raise UsageError(str(exc))
    if pair.d != 4:
        raise UsageError(f"gcd(p-1, q-1) = {pair.d}; the order-4 construction needs 4")
    return pair


def _roots(args) -> tuple[int | None, int | None]:
    if (args.g1 is None) != (args.g2 is None):
        raise UsageError("--g1 and --g2 go together")
    return args.g1, args.g2


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":"))


def _csv_row(rec: dict) -> list:
    row = []
    for k in RECORD_FIELDS:
        v = rec[k]
        row.append(_dump(v) if isinstance(v, dict) else "" if v is None else v)
    return row


def write_records(records: list[dict], fmt: str, stream) -> None:
    if fmt == "jsonl":
        for rec in records:
            stream.write(_dump(rec) + "\n")
        return
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(RECORD_FIELDS)
    for rec in records:
        w.writerow(_csv_row(rec))


# ---------------------------------------------------------------- analyze


def cmd_analyze(args, out) -> int:
    pair = _pair(args.p, args.q)
    g1, g2 = _roots(args)
    l = args.l
    if not is_prime(l) or gcd(l, pair.n) != 1:
        raise UsageError(f"l = {l} must be a prime coprime to n = {pair.n}")
    try:
        rep = verify(pair, g1, g2, l, diag_cap=args.diag_cap, charsum_cap=args.charsum_cap)
    except CycloError as exc:
        raise UsageError(str(exc))
    rec = rep.to_record()
    pr, dec = rep.predicates, rep.decomposition
    two = rep.diagnostics["info"]["class_of_2"]

    lines = [
        f"p={pair.p} q={pair.q} n={pair.n} g1={rep.g1} g2={rep.g2} g={rep.g} l={l}",
        f"a={dec.a} b={dec.b} M={dec.M}  2 in {two}  -1 in {rep.class_of_minus1}  l in {pr.l_class}",
        f"delta={pr.delta} delta1={pr.delta1} delta2={pr.delta2} quarter_test={pr.quarter_test} "
        f"pq_mod8_equal={pr.pq_mod8_equal} half_b_test={pr.half_b_test} quartic_test={pr.quartic_test}",
        f"branch={rep.prediction.branch} predicted_L={rep.prediction.predicted_L}",
        f"L (gcd)={rep.computed_L_gcd} L (berlekamp-massey)={rep.computed_L_bm} match={rep.match}",
        f"minimal polynomial degree={rep.minimal_poly.degree}",
    ]
    if args.minpoly:
        lines.append(f"minimal polynomial={rep.minimal_poly}")
    checks = rep.diagnostics["checks"]
    ran = [k for k, v in checks.items() if v is not None]
    lines.append(f"checks: {sum(checks[k] is True for k in ran)}/{len(ran)} hold")
    for k in rep.failed_checks:
        lines.append(f"  FAILED {k}")
    for k, v in rep.diagnostics["literal"].items():
        lines.append(f"  literal: {k}={v}")
    conflict = rep.diagnostics["info"].get("reference_conflict")
    if conflict:
        lines.append(f"  reference conflict: {conflict}")
    if "discrepancy" in rep.diagnostics["info"]:
        lines.append(f"  discrepancy: {_dump(rep.diagnostics['info']['discrepancy'])}")

    if args.format is not None:
        write_records([rec], args.format, out)
    else:
        out.write("\n".join(lines) + "\n")
    return EXIT_OK if rep.oracles_agree else EXIT_BREACH


# ---------------------------------------------------------------- sweep


@dataclass(frozen=True)
class SweepConfig:
    p_values: tuple[int, ...]
    q_values: tuple[int, ...]
    l_set: tuple[int, ...]
    g1: int | None = None
    g2: int | None = None
    diag_cap: int = extfield.ROOT_SCAN_CAP
    charsum_cap: int = extfield.CHARSUM_CAP

    def triples(self) -> tuple[list[tuple[int, int, int]], list[str]]:
        """Admissible (p, q, l) in lexicographic order, plus reasons for skipped ones."""
        todo, skipped = [], []
        for p in sorted(set(self.p_values)):
            for q in sorted(set(self.q_values)):
                if p == q or gcd(p - 1, q - 1) != 4:
                    continue
                for l in sorted(set(self.l_set)):
                    if gcd(l, p * q) != 1:
                        skipped.append(f"skip p={p} q={q} l={l}: gcd(l, n) != 1")
                        continue
                    todo.append((p, q, l))
        return todo, skipped


def _sweep_one(task) -> tuple[dict, bool]:
    p, q, l, g1, g2, diag_cap, charsum_cap = task
    rep = verify(PrimePair(p, q), g1, g2, l, diag_cap=diag_cap, charsum_cap=charsum_cap)
    return rep.to_record(), rep.oracles_agree


def run_sweep(cfg: SweepConfig, jobs: int = 1) -> tuple[list[dict], bool, list[str]]:
    todo, skipped = cfg.triples()
    tasks = [(p, q, l, cfg.g1, cfg.g2, cfg.diag_cap, cfg.charsum_cap) for p, q, l in todo]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_one, tasks))  # map keeps input order
    else:
        results = [_sweep_one(t) for t in tasks]
    records = [r for r, _ in results]
    return records, all(ok for _, ok in results), skipped


def summarize(records: list[dict]) -> str:
    by_branch = Counter((r["branch"], r["match"]) for r in records)
    lines = [f"{len(records)} cases"]
    for (branch, match), k in sorted(by_branch.items()):
        lines.append(f"  {branch:<12} {match:<10} {k}")
    return "\n".join(lines)


def _prime_values(args, which: str) -> tuple[int, ...]:
    rng = getattr(args, f"{which}_range")
    if rng is not None:
        vals = primes_between(rng[0], rng[1])
    elif args.primes is not None:
        vals = args.primes
    else:
        raise UsageError(f"give --primes or --{which}-range")
    bad = [v for v in vals if not is_prime(v) or v < 3]
    if bad:
        raise UsageError(f"not odd primes: {bad}")
    return tuple(vals)


def cmd_sweep(args, out) -> int:
    g1, g2 = _roots(args)
    ls = args.l_list
    if not ls or any(not is_prime(l) for l in ls):
        raise UsageError(f"--l needs a list of primes, got {ls}")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    cfg = SweepConfig(
        _prime_values(args, "p"), _prime_values(args, "q"), tuple(ls), g1, g2, args.diag_cap, args.charsum_cap
    )
    try:
        records, agree, skipped = run_sweep(cfg, args.jobs)
    except CycloError as exc:
        raise UsageError(str(exc))
    for msg in skipped:
        log.info(msg)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            write_records(records, args.format or "jsonl", fh)
    else:
        write_records(records, args.format or "jsonl", out)
    print(summarize(records), file=sys.stderr)
    if skipped:
        print(f"{len(skipped)} triples skipped (gcd(l, n) != 1); -v lists them", file=sys.stderr)
    return EXIT_OK if agree else EXIT_BREACH


# ---------------------------------------------------------------- tables


def _grid(entries: np.ndarray) -> list[str]:
    return ["    " + " ".join(f"{int(v):4d}" for v in row) for row in entries]


def cmd_tables(args, out) -> int:
    pair = _pair(args.p, args.q)
    g1, g2 = _roots(args)
    g = common_primitive_root(pair) if g1 is None else generator_from_roots(pair, g1, g2)
    sys_ = build_system(pair, 4, g)
    dec = quartic_decomposition(pair, sys_.g1, sys_.g2)
    brute = cyclotomic_numbers_bruteforce(sys_)
    lines = [
        f"p={pair.p} q={pair.q} g1={sys_.g1} g2={sys_.g2} g={g}",
        f"a={dec.a} b={dec.b} M={dec.M}  2 in {classify(2, sys_)}",
        "counted (i, j):",
        *_grid(brute.entries),
    ]
    try:
        formula = cyclotomic_numbers_formula(pair, dec)
    except FormulaInconsistency as exc:
        formula = None
        lines.append(f"closed form: not integral ({exc})")
    if formula is not None:
        layout = "p = q (mod 8)" if formula.source.endswith("2") else "p != q (mod 8)"
        lines.append(f"closed form, {formula.source}, {layout}:")
        lines.extend(_grid(formula.entries))
        lines.append("  " + " ".join(f"{k}={v}" for k, v in formula.letters.items()))
        diff = np.abs(formula.entries - brute.entries)
        if diff.max() == 0:
            lines.append("AGREE")
        else:
            i, j = np.unravel_index(int(np.argmax(diff)), diff.shape)
            lines.append(f"DISAGREE max |diff| = {int(diff[i, j])} at ({i}, {j})")
    alt = table_consistent_b(sys_, dec)
    if alt is not None and alt != dec.b:
        lines.append(f"the count is reproduced with b = {alt}")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclolc", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def roots(sp):
        sp.add_argument("--g1", type=int)
        sp.add_argument("--g2", type=int)

    def caps(sp):
        sp.add_argument("--diag-cap", type=int, default=extfield.ROOT_SCAN_CAP, help="max n for root scans")
        sp.add_argument("--charsum-cap", type=int, default=extfield.CHARSUM_CAP, help="max n for character sums")

    a = sub.add_parser("analyze", help="one (p, q, l) case")
    a.add_argument("-p", type=int, required=True)
    a.add_argument("-q", type=int, required=True)
    a.add_argument("-l", type=int, required=True)
    roots(a)
    caps(a)
    a.add_argument("--minpoly", action="store_true", help="print the full minimal polynomial")
    a.add_argument("--format", choices=("jsonl", "csv"), help="machine-readable record instead of text")

    s = sub.add_parser("sweep", help="grid of (p, q, l)")
    s.add_argument("--primes", type=_int_list, help="candidate primes for both p and q")
    s.add_argument("--p-range", type=_range, metavar="LO:HI")
    s.add_argument("--q-range", type=_range, metavar="LO:HI")
    s.add_argument("--l", dest="l_list", type=_int_list, default=[2], help="field characteristics")
    roots(s)
    caps(s)
    s.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    s.add_argument("--out", metavar="PATH")
    s.add_argument("--jobs", type=int, default=1)

    t = sub.add_parser("tables", help="cyclotomic numbers, counted and closed form")
    t.add_argument("-p", type=int, required=True)
    t.add_argument("-q", type=int, required=True)
    roots(t)
    return ap


COMMANDS = {"analyze": cmd_analyze, "sweep": cmd_sweep, "tables": cmd_tables}


def main(argv: list[str] | None = None, out=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    out = out if out is not None else sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"cyclolc {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"cyclolc {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv: list[str] | None = None) -> str:
    """Run a command and return its stdout text (handy in notebooks and tests)."""
    buf = io.StringIO()
    code = main(argv, buf)
    if code:
        raise SystemExit(code)
    return buf.getvalue()
