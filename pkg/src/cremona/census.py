"""Isomorph-free census of square-free monomial Cremona sets."""

from __future__ import annotations

import csv
import io
import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Sequence

from .birational import masks_determinant
from .core import (
    MonomialSet,
    incidence_profile,
    masks_canonical,
    masks_connected,
)
from .reductions import ReductionCertificate, dual_masks, reduce_to_base
from .symmetry import (
    CanonicalForm,
    canonical_key,
    maximal_cones,
    monomial_masks,
    orbit_masks,
    orbit_representatives,
)

# beyond this many candidate subsets a census needs allow_large
SEARCH_LIMIT = 10**8


@dataclass(frozen=True)
class CensusQuery:
    n: int
    d: int | None = None  # None means every degree 1..n-1
    verify_duality: bool = False
    verify_mdc: bool = False
    classify_types: bool = True
    filter_canonical: bool = True
    filter_cohesive: bool = True
    with_certificates: bool = True
    threads: int = 1
    allow_large: bool = False

    def degrees(self) -> list[int]:
        return list(range(1, self.n)) if self.d is None else [self.d]

    def validate(self) -> None:
        if not 3 <= self.n <= 8:
            raise ValueError(f"census needs 3 <= n <= 8, got n={self.n}")
        if self.d is not None and not 1 <= self.d <= self.n - 1:
            raise ValueError(f"degree must satisfy 1 <= d <= n-1, got d={self.d}")
        if self.threads < 1:
            raise ValueError("threads must be positive")
        if not self.allow_large:
            for d in self.degrees():
                size = search_size(self.n, d)
                if size > SEARCH_LIMIT:
                    raise ValueError(
                        f"(n={self.n}, d={d}) has {size} candidate subsets; "
                        "pass allow_large to run it"
                    )


def search_size(n: int, d: int) -> int:
    return comb(comb(n, d), n)


@dataclass(frozen=True)
class Representative:
    form: CanonicalForm
    monomials: MonomialSet
    det: int
    incidence: tuple[int, ...]
    cones: tuple
    type: str | None
    certificate: ReductionCertificate | None

    def to_json(self) -> dict:
        return {
            "monomials": [str(m) for m in self.monomials.members],
            "det": self.det,
            "incidence": list(self.incidence),
            "type": self.type,
            "cones": [
                {
                    "apex": c.apex,
                    "size": len(c.members),
                    "members": [str(self.monomials.members[j]) for j in c.members],
                    "base": ["".join(f"x{i}" for i in e) for e in c.base.sorted_edges()],
                }
                for c in self.cones
            ],
            "certificate": self.certificate.to_json() if self.certificate else None,
        }


@dataclass
class CensusReport:
    n: int
    counts: dict[int, int]
    representatives: dict[int, list[Representative]]
    duality_ok: bool | None = None
    mdc_ok: bool | None = None
    stats: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def forms(self, d: int) -> set[tuple[int, ...]]:
        return {r.form.key for r in self.representatives[d]}

    def type_counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for reps in self.representatives.values():
            for r in reps:
                if r.type is not None:
                    out[r.type] = out.get(r.type, 0) + 1
        return out


# subset enumeration

def colex_subsets(m: int, k: int, start: int | None = None) -> Iterator[int]:
    """k-subsets of range(m) as bitmasks in colexicographic order.

    ``start`` resumes the walk at a previously yielded subset.
    """
    if k == 0:
        yield 0
        return
    x = (1 << k) - 1 if start is None else start
    limit = 1 << m
    while x < limit:
        yield x
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r


def _scan_shard(args) -> tuple[list[tuple[tuple[int, ...], int]], dict]:
    """Cremona candidates whose largest monomial index is ``top``."""
    n, d, top, filter_canonical, filter_cohesive = args
    universe = monomial_masks(n, d)
    stats = {"candidates": 0, "canonical": 0, "cohesive": 0, "cremona": 0}
    hits = []
    head = universe[top]
    for sub in colex_subsets(top, n - 1):
        masks = [head]
        s, j = sub, 0
        while s:
            if s & 1:
                masks.append(universe[j])
            s >>= 1
            j += 1
        stats["candidates"] += 1
        if filter_canonical and not masks_canonical(masks, n):
            continue
        stats["canonical"] += 1
        # disconnected sets cannot be Cremona once d >= 2
        if filter_cohesive and d >= 2 and not masks_connected(masks):
            continue
        stats["cohesive"] += 1
        det = masks_determinant(sorted(masks), n)
        if abs(det) == d:
            stats["cremona"] += 1
            hits.append((tuple(sorted(masks)), det))
    return hits, stats


def cremona_candidates(n: int, d: int, *, filter_canonical=True, filter_cohesive=True,
                       threads=1) -> tuple[list[tuple[int, ...]], dict]:
    """All labeled Cremona sets of degree d in n variables."""
    m = comb(n, d)
    shards = [(n, d, top, filter_canonical, filter_cohesive) for top in range(n - 1, m)]
    totals = {"candidates": 0, "canonical": 0, "cohesive": 0, "cremona": 0}
    found: list[tuple[int, ...]] = []
    if threads > 1 and len(shards) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_scan_shard, shards))
    else:
        results = [_scan_shard(s) for s in shards]
    for hits, stats in results:
        found.extend(h for h, _ in hits)
        for k, v in stats.items():
            totals[k] += v
    return found, totals


def dedup_orbits(sets: Sequence[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    """Canonical keys of the distinct orbits among ``sets``."""
    seen: set[tuple[int, ...]] = set()
    keys = []
    for s in sets:
        if s in seen:
            continue
        key, _ = canonical_key(s, n)
        seen |= orbit_masks(key, n)
        keys.append(key)
    return sorted(keys)


def classify_type_n6_d3(F: MonomialSet) -> str:
    """TYPE2 if a root exists, else TYPE1 if a leaf exists, else TYPE3."""
    if F.n != 6 or F.d != 3:
        raise ValueError(f"type classification needs n=6, d=3, got n={F.n}, d={F.d}")
    if not F.is_square_free:
        raise ValueError("type classification needs a square-free set")
    if abs(masks_determinant(F.masks, 6)) != 3:
        raise ValueError("type classification needs a Cremona set")
    rows = [sum(m.exponents[i] for m in F.members) for i in range(6)]
    if 5 in rows:
        return "TYPE2"
    if 1 in rows:
        return "TYPE1"
    return "TYPE3"


def verify_gcd_lemma(F: MonomialSet) -> bool:
    """Every 4 members include two that share at least two variables."""
    masks = F.masks
    for quad in itertools.combinations(masks, 4):
        if not any(bin(a & b).count("1") >= 2 for a, b in itertools.combinations(quad, 2)):
            return False
    return True


class DualityMismatch(AssertionError):
    def __init__(self, diff: dict):
        super().__init__(f"dual complement is not a bijection on orbits: {diff}")
        self.diff = diff


def duality_diff(report: CensusReport) -> dict:
    """Orbits at degree d whose duals are missing at n-d, and vice versa."""
    n = report.n
    diff = {}
    for d in report.representatives:
        if n - d not in report.representatives:
            continue
        images = {canonical_key(dual_masks(k, n), n)[0] for k in report.forms(d)}
        target = report.forms(n - d)
        missing = sorted(images - target)
        extra = sorted(target - images)
        if missing or extra or len(images) != len(report.forms(d)):
            diff[d] = {"unmatched_duals": missing, "unreached": extra}
    return diff


def cross_check_duality(report: CensusReport) -> bool:
    pairs = [d for d in report.representatives if report.n - d in report.representatives]
    if not pairs:
        raise ValueError("report must cover some degree d together with n-d")
    diff = duality_diff(report)
    if diff:
        raise DualityMismatch(diff)
    return True


def _representative(key: tuple[int, ...], n: int, d: int, q: CensusQuery) -> Representative:
    F = MonomialSet.from_masks(key, n)
    tag = None
    if q.classify_types and n == 6 and d == 3:
        tag = classify_type_n6_d3(F)
    cert = reduce_to_base(F) if q.with_certificates else None
    return Representative(
        form=CanonicalForm(n, key),
        monomials=F,
        det=masks_determinant(key, n),
        incidence=incidence_profile(F),
        cones=tuple(maximal_cones(F).maximal),
        type=tag,
        certificate=cert,
    )


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("CREMONA_THREADS", "1")))
    except ValueError:
        return 1


def census(q: CensusQuery) -> CensusReport:
    q.validate()
    n = q.n
    counts, reps, stats = {}, {}, {}
    started = time.perf_counter()
    for d in q.degrees():
        found, st = cremona_candidates(
            n, d,
            filter_canonical=q.filter_canonical,
            filter_cohesive=q.filter_cohesive,
            threads=q.threads,
        )
        keys = dedup_orbits(found, n)
        reps[d] = [_representative(k, n, d, q) for k in keys]
        counts[d] = len(keys)
        stats[d] = st
    report = CensusReport(n, counts, reps, stats={"nodes": stats})
    if q.verify_duality:
        report.duality_ok = cross_check_duality(report)
    if q.verify_mdc and n == 6 and 3 in reps:
        report.mdc_ok = all(verify_gcd_lemma(r.monomials) for r in reps[3])
    report.stats["seconds"] = time.perf_counter() - started
    return report


def census_by_extension(n: int, d: int) -> list[tuple[int, ...]]:
    """Grow orbit representatives one monomial at a time, then test determinants."""
    reps = orbit_representatives(n, d, n)
    return sorted(
        r.key for r in reps
        if masks_canonical(r.key, n) and abs(masks_determinant(r.key, n)) == d
    )


# catalog export

CATALOG_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["n", "d", "count", "representatives"],
        "properties": {
            "n": {"type": "integer"},
            "d": {"type": "integer"},
            "count": {"type": "integer"},
            "representatives": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["monomials", "det", "incidence", "type", "cones", "certificate"],
                    "properties": {
                        "monomials": {"type": "array", "items": {"type": "string"}},
                        "det": {"type": "integer"},
                        "incidence": {"type": "array", "items": {"type": "integer"}},
                        "type": {"type": ["string", "null"]},
                        "cones": {"type": "array"},
                        "certificate": {
                            "type": ["object", "null"],
                            "required": ["steps", "terminal", "terminal_det"],
                            "properties": {
                                "steps": {
                                    "type": "array",
                                    "items": {
                                        "type": "object",
                                        "required": ["kind", "variable"],
                                    },
                                },
                                "terminal": {"type": "string"},
                                "terminal_det": {"type": ["integer", "null"]},
                            },
                        },
                    },
                },
            },
        },
    },
}


def catalog_json(report: CensusReport) -> list[dict]:
    return [
        {
            "n": report.n,
            "d": d,
            "count": report.counts[d],
            "representatives": [r.to_json() for r in report.representatives[d]],
        }
        for d in sorted(report.counts)
    ]


def catalog_csv(report: CensusReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "d", "count"])
    for d in sorted(report.counts):
        w.writerow([report.n, d, report.counts[d]])
    return buf.getvalue()
