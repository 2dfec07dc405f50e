"""Command-line front end.

Data goes to stdout (or ``--out``); everything meant for humans goes to
stderr.  Exit codes: 0 success, 1 usage or domain error, 2 capacity
error, 3 scan finished with mismatches.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import formula, scan, semigroup, squares
from .errors import CapacityError, DomainError, HypothesisFailure

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAPACITY = 2
EXIT_MISMATCH = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _mod8_list(text: str) -> list[int]:
    try:
        vals = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")
    if not vals or any(not 0 <= v < 8 for v in vals):
        raise argparse.ArgumentTypeError(f"residues must lie in 0..7: {text!r}")
    return vals


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="shiftfrob", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("iota", help="least number of positive squares summing to n")
    s.add_argument("n", type=int)
    s.add_argument("--format", choices=("plain", "json"), default="plain")

    s = sub.add_parser("classify", help="square-sum type of n with the supporting facts")
    s.add_argument("n", type=int)
    s.add_argument("--format", choices=("plain", "json"), default="plain")

    s = sub.add_parser("frobenius", help="Frobenius number of <a, a+1, a+4, ...>")
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--method", choices=("closed", "maxr", "oracle", "all"), default="all")
    s.add_argument("--format", choices=("plain", "json"), default="plain")

    for name, text in (("apery", "Apery set w.r.t. a (or --modulus)"), ("gaps", "every gap")):
        s = sub.add_parser(name, help=text)
        s.add_argument("--a", type=int, required=True)
        if name == "apery":
            s.add_argument("--modulus", type=int)
        s.add_argument("--format", choices=("plain", "json"), default="plain")

    s = sub.add_parser("scan", help="compare all methods over a range of a")
    s.add_argument("--from", dest="start", type=int, required=True)
    s.add_argument("--to", dest="stop", type=int, required=True)
    s.add_argument("--step", type=_positive, default=1)
    s.add_argument("--mod8", type=_mod8_list)
    s.add_argument("--oracle", action="store_true")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--jobs", type=_positive)
    s.add_argument("--out")

    s = sub.add_parser("profile", help="distribution of a - max_r(a) per residue mod 8")
    s.add_argument("--from", dest="start", type=int, required=True)
    s.add_argument("--to", dest="stop", type=int, required=True)
    s.add_argument("--format", choices=("plain", "json"), default="plain")
    return p


def _emit(text: str, out: Optional[str] = None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_iota(args) -> int:
    cls = squares.classify(args.n)
    try:
        parts = list(squares.decompose(args.n).parts)
    except CapacityError as exc:
        print(f"no witness: {exc}", file=sys.stderr)
        parts = None
    if args.format == "json":
        _emit(json.dumps({"n": args.n, "iota": cls.iota, "class": cls.name, "type": cls.value, "witness": parts}) + "\n")
    else:
        lines = [str(cls.iota), f"class {cls.name} (type {cls.value})"]
        if parts is not None:
            lines.append("witness " + " + ".join(f"{k}^2" for k in parts))
        _emit("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_classify(args) -> int:
    n = args.n
    cls = squares.classify(n)
    fac = squares.factorize(n)
    e, core = squares.strip_fours(n)
    info = {
        "n": n,
        "class": cls.name,
        "type": cls.value,
        "iota": cls.iota,
        "factorization": [list(pe) for pe in fac.factors],
        "perfect_square": squares.is_perfect_square(n),
        "sum_of_two_squares": squares.is_sum_of_two_squares(n),
        "odd_exponent_primes_3_mod_4": [p for p, k in fac.factors if p % 4 == 3 and k % 2],
        "four_power": e,
        "core": core,
        "core_mod8": core % 8,
        "legendre_form": core % 8 == 7,
    }
    if args.format == "json":
        _emit(json.dumps(info) + "\n")
    else:
        factors = " * ".join(f"{p}^{k}" if k > 1 else str(p) for p, k in fac.factors) or "1"
        _emit(
            f"{cls.name}\n"
            f"type {cls.value}, iota {cls.iota}\n"
            f"factorization {factors}\n"
            f"primes 3 mod 4 with odd exponent: {info['odd_exponent_primes_3_mod_4'] or 'none'}\n"
            f"n = 4^{e} * {core}, core mod 8 = {core % 8}\n"
        )
    return EXIT_OK


def _cmd_frobenius(args) -> int:
    a = args.a
    wanted = ("closed", "maxr", "oracle") if args.method == "all" else (args.method,)
    results = {}
    for m in wanted:
        try:
            if m == "closed":
                results[m] = formula.frobenius_closed_form(a)
            elif m == "maxr":
                results[m] = formula.frobenius_via_max_r(a)
            else:
                results[m] = semigroup.frobenius_bruteforce(semigroup.shifted_square_generators(a))
        except (DomainError, HypothesisFailure) as exc:
            if args.method != "all":
                raise
            print(f"{m}: not applicable: {exc}", file=sys.stderr)
    values = {m: r.value for m, r in results.items()}
    agree = len(set(values.values())) <= 1 if args.method == "all" else None
    if args.format == "json":
        doc = {"a": a, "results": [r.to_dict() for r in results.values()]}
        if agree is not None:
            doc["agree"] = agree
        _emit(json.dumps(doc) + "\n")
    else:
        lines = []
        for m, r in results.items():
            extra = ""
            if r.witness_r is not None:
                extra = f" r={r.witness_r}"
            elif r.branch is not None:
                extra = f" branch={r.branch.value}"
            lines.append(f"{m} {r.value}{extra}")
        if agree is not None:
            lines.append(f"agree {'true' if agree else 'false'}")
        _emit("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_apery(args) -> int:
    S = semigroup.shifted_square_generators(args.a)
    ap = semigroup.apery_set(S, args.modulus if args.modulus is not None else S.multiplicity)
    elems = [int(x) for x in ap.elements]
    if args.format == "json":
        _emit(json.dumps({"a": args.a, "generators": list(S.generators), "modulus": ap.modulus, "elements": elems}) + "\n")
    else:
        _emit(f"generators {' '.join(map(str, S.generators))}\nmodulus {ap.modulus}\n"
              + "".join(f"{i} {w}\n" for i, w in enumerate(elems)))
    return EXIT_OK


def _cmd_gaps(args) -> int:
    S = semigroup.shifted_square_generators(args.a)
    gs = semigroup.gaps(S)
    if args.format == "json":
        _emit(json.dumps({"a": args.a, "genus": len(gs), "gaps": gs}) + "\n")
    else:
        _emit("".join(f"{g}\n" for g in gs))
    print(f"genus {len(gs)}, Frobenius {gs[-1] if gs else -1}", file=sys.stderr)
    return EXIT_OK


def _cmd_scan(args) -> int:
    n_values = len(scan.scan_values(args.start, args.stop, args.step, args.mod8))
    jobs = args.jobs or scan.default_jobs(n_values)
    report = scan.scan_range(args.start, args.stop, args.step, args.oracle, args.mod8, jobs=jobs)
    _emit(report.to_csv() if args.format == "csv" else report.to_json(), args.out)
    bad = report.mismatches
    print(f"{len(report.records)} records, {len(bad)} mismatches", file=sys.stderr)
    for rec in bad:
        print(f"mismatch at a={rec.a}: {rec}", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def _cmd_profile(args) -> int:
    prof = scan.empirical_max_r_profile(args.start, args.stop)
    if args.format == "json":
        doc = [
            {"residue": p.residue, "offsets": {str(k): v for k, v in p.offsets.items()},
             "exceptions": list(p.exceptions), "missing": list(p.missing)}
            for p in prof
        ]
        _emit(json.dumps(doc) + "\n")
    else:
        lines = []
        for p in prof:
            offs = " ".join(f"{k}:{v}" for k, v in p.offsets.items())
            lines.append(f"{p.residue} n={p.count} exceptions={len(p.exceptions)} missing={len(p.missing)} offsets {offs}")
        _emit("\n".join(lines) + "\n")
    return EXIT_OK


_COMMANDS = {
    "iota": _cmd_iota,
    "classify": _cmd_classify,
    "frobenius": _cmd_frobenius,
    "apery": _cmd_apery,
    "gaps": _cmd_gaps,
    "scan": _cmd_scan,
    "profile": _cmd_profile,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, HypothesisFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


def main() -> None:
    sys.exit(run())
