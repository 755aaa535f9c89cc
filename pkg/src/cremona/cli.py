"""Command-line front end.

Exit status: 0 on success (and for a Cremona verdict), 1 when ``verify`` finds
a valid set that is not Cremona, 2 for usage and precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .birational import is_cremona
from .census import (
    CensusQuery,
    catalog_csv,
    catalog_json,
    census,
    default_threads,
)
from .core import ParseError, parse_monomial_set
from .reductions import dual_complement, reduce_to_base
from .symmetry import isomorphism_witness

EXIT_OK, EXIT_NOT_CREMONA, EXIT_USAGE = 0, 1, 2


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cremona", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("census", help="count Cremona sets up to isomorphism")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--d", type=int)
    c.add_argument("--json", metavar="PATH", help="also write the catalog here")
    c.add_argument("--threads", type=int)
    c.add_argument("--stats", action="store_true", help="report runtime and node counts")
    c.add_argument("--verify-duality", action="store_true")
    c.add_argument("--allow-large", action="store_true")

    v = sub.add_parser("verify", help="determinant test for one set")
    v.add_argument("set")

    d = sub.add_parser("dual", help="print the dual complement")
    d.add_argument("set")

    r = sub.add_parser("reduce", help="print a reduction certificate")
    r.add_argument("set")
    r.add_argument("--json", action="store_true")

    o = sub.add_parser("orbit", help="decide isomorphism of two sets")
    o.add_argument("--a", required=True)
    o.add_argument("--b", required=True)

    k = sub.add_parser("catalog", help="write the full classification")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--format", choices=["json", "csv"], default="json")
    k.add_argument("--out", metavar="PATH")
    k.add_argument("--threads", type=int)
    return p


def _census_table(report, stats: bool) -> str:
    lines = [f"n={report.n}", "d  count"]
    for d in sorted(report.counts):
        line = f"{d:<2} {report.counts[d]}"
        if stats:
            nodes = report.stats["nodes"][d]
            line += (
                f"    candidates={nodes['candidates']} canonical={nodes['canonical']}"
                f" cohesive={nodes['cohesive']} cremona={nodes['cremona']}"
            )
        lines.append(line)
    if stats:
        lines.append(f"seconds {report.stats['seconds']:.3f}")
    lines.append(f"total {report.total}")
    return "\n".join(lines)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _run(args, out) -> int:
    if args.verb == "census":
        q = CensusQuery(
            args.n, args.d,
            verify_duality=args.verify_duality,
            threads=args.threads or default_threads(),
            allow_large=args.allow_large,
        )
        report = census(q)
        if args.json:
            with open(args.json, "w") as fh:
                fh.write(_dump(catalog_json(report)))
        print(_census_table(report, args.stats), file=out)
        return EXIT_OK

    if args.verb == "catalog":
        report = census(CensusQuery(args.n, threads=args.threads or default_threads()))
        text = _dump(catalog_json(report)) if args.format == "json" else catalog_csv(report)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            out.write(text)
        return EXIT_OK

    if args.verb == "verify":
        verdict = is_cremona(parse_monomial_set(args.set))
        print(verdict, file=out)
        return EXIT_OK if verdict.is_cremona else EXIT_NOT_CREMONA

    if args.verb == "dual":
        print(dual_complement(parse_monomial_set(args.set)), file=out)
        return EXIT_OK

    if args.verb == "reduce":
        F = parse_monomial_set(args.set)
        cert = reduce_to_base(F)
        if args.json:
            out.write(_dump(cert.to_json()))
            return EXIT_OK
        for step in cert.steps:
            tail = "" if step.variable is None else f" x{step.variable}"
            print(f"{step.kind.value}{tail}", file=out)
        print(f"terminal {cert.terminal.value} det={cert.terminal_det}", file=out)
        print(f"set {cert.terminal_set}", file=out)
        print("CREMONA" if cert.cremona else "NOT CREMONA", file=out)
        return EXIT_OK

    if args.verb == "orbit":
        A, B = parse_monomial_set(args.a), parse_monomial_set(args.b)
        w = isomorphism_witness(A, B)
        if w is None:
            print("NOT ISOMORPHIC", file=out)
        else:
            print(f"ISOMORPHIC {w}", file=out)
        return EXIT_OK
    raise AssertionError(args.verb)


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    try:
        return _run(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
