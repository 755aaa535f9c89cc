"""Census for a range of n with timings and search-node counts.

    python scripts/run_census.py --n 3 6 --threads 4 --json-dir out/
"""

import argparse
import json
import pathlib

from cremona.census import CensusQuery, catalog_json, census


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs=2, default=(3, 6), metavar=("LO", "HI"))
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--json-dir", type=pathlib.Path)
    ap.add_argument("--allow-large", action="store_true")
    args = ap.parse_args()

    for n in range(args.n[0], args.n[1] + 1):
        q = CensusQuery(n, verify_duality=True, verify_mdc=True, threads=args.threads,
                        allow_large=args.allow_large)
        report = census(q)
        print(f"n={n} total={report.total} seconds={report.stats['seconds']:.2f}")
        for d in sorted(report.counts):
            nodes = report.stats["nodes"][d]
            print(f"  d={d} count={report.counts[d]} " + " ".join(f"{k}={v}" for k, v in nodes.items()))
        if n == 6:
            print(f"  types {report.type_counts()}  gcd lemma {report.mdc_ok}")
        if args.json_dir:
            args.json_dir.mkdir(parents=True, exist_ok=True)
            path = args.json_dir / f"catalog_n{n}.json"
            path.write_text(json.dumps(catalog_json(report), indent=2) + "\n")


if __name__ == "__main__":
    main()
