import itertools
import json
from collections import Counter
from math import comb

import jsonschema
import pytest

from cremona.birational import DegreeTwoKind, classify_degree_two, masks_determinant
from cremona.census import (
    CATALOG_SCHEMA,
    SEARCH_LIMIT,
    CensusQuery,
    CensusReport,
    DualityMismatch,
    catalog_csv,
    catalog_json,
    census,
    census_by_extension,
    classify_type_n6_d3,
    colex_subsets,
    cremona_candidates,
    cross_check_duality,
    dedup_orbits,
    duality_diff,
    search_size,
    verify_gcd_lemma,
)
from cremona.core import (
    MonomialSet,
    bit,
    incidence_degrees,
    is_cohesive,
    log_matrix,
    parse_monomial_set,
    satisfies_canonical_restrictions,
)
from cremona.symmetry import canonical_form, canonical_key, monomial_masks

import named_sets
from conftest import census_report, oracle_forms

P = parse_monomial_set

EXPECTED = {
    3: {1: 1, 2: 1},
    4: {1: 1, 2: 1, 3: 1},
    5: {1: 1, 2: 4, 3: 4, 4: 1},
    6: {1: 1, 2: 8, 3: 40, 4: 8, 5: 1},
}


@pytest.mark.parametrize("n", sorted(EXPECTED))
def test_counts(reports, n):
    assert reports[n].counts == EXPECTED[n]


def test_totals(reports):
    assert [reports[n].total for n in (4, 5, 6)] == [3, 10, 58]


def test_counts_are_palindromic(reports):
    for report in reports.values():
        n = report.n
        assert all(report.counts[d] == report.counts[n - d] for d in report.counts)
        assert report.duality_ok


@pytest.mark.parametrize("n, d", [(n, d) for n in range(3, 7) for d in range(1, n)])
def test_oracle_agrees(reports, n, d):
    assert oracle_forms(n, d) == reports[n].forms(d)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_extension_path_agrees(reports, n):
    for d in range(1, n):
        assert set(census_by_extension(n, d)) == reports[n].forms(d)


def test_representative_invariants(reports):
    for report in reports.values():
        n = report.n
        for d, reps in report.representatives.items():
            keys = [r.form.key for r in reps]
            assert keys == sorted(keys) and len(set(keys)) == len(keys)
            for r in reps:
                F = r.monomials
                assert canonical_form(F) == r.form
                assert satisfies_canonical_restrictions(F)
                assert d == 1 or is_cohesive(F)
                assert abs(r.det) == d == abs(masks_determinant(F.masks, n))
                assert sum(r.incidence) == n * d
                assert r.certificate.cremona


def test_mdc_holds_for_cubics(report6):
    assert report6.mdc_ok
    assert all(verify_gcd_lemma(r.monomials) for r in report6.representatives[3])


def test_mdc_fails_on_the_block():
    F = P(" ".join(named_sets.MDC_BLOCK + ["x1x2x4", "x1x2x5"]))
    assert not verify_gcd_lemma(F)


def test_degree_two_census_is_odd_cycles(reports):
    for report in reports.values():
        for r in report.representatives.get(2, []):
            assert classify_degree_two(r.monomials).kind is DegreeTwoKind.UNIQUE_ODD_CYCLE


def test_type_counts(report6):
    assert report6.type_counts() == {"TYPE1": 10, "TYPE2": 20, "TYPE3": 10}


def test_type_examples():
    assert classify_type_n6_d3(named_sets.type2_sets()[0]) == "TYPE2"
    assert classify_type_n6_d3(named_sets.type1_sets()[0]) == "TYPE1"


@pytest.mark.parametrize("text", [
    "x1x2 x2x3 x3x4 x4x5 x5x6 x1x6",
    "x1x2x3 x1x2x4 x1x2x5 x1x2x6 x3x4x5 x3x4x6",
])
def test_type_classification_preconditions(text):
    with pytest.raises(ValueError):
        classify_type_n6_d3(P(text))


def _orbit_set(sets):
    return {canonical_form(F).key for F in sets}


def test_type2_sets_are_the_census_type2(report6):
    sets = named_sets.type2_sets()
    assert len(sets) == 20 == len(_orbit_set(sets))
    expected = {r.form.key for r in report6.representatives[3] if r.type == "TYPE2"}
    assert _orbit_set(sets) == expected


def test_type1_sets_are_the_census_type1(report6):
    sets = named_sets.type1_sets()
    assert len(sets) == 10 == len(_orbit_set(sets))
    expected = {r.form.key for r in report6.representatives[3] if r.type == "TYPE1"}
    assert _orbit_set(sets) == expected


def _sequences(report6, tag):
    return Counter(
        tuple(sorted(incidence_degrees(r.monomials), reverse=True))
        for r in report6.representatives[3] if r.type == tag
    )


def test_type1_incidence_tallies(report6):
    c = _sequences(report6, "TYPE1")
    assert c[(4, 4, 4, 3, 2, 1)] == 4
    assert c[(4, 4, 3, 3, 3, 1)] == 5
    assert sum(c.values()) == 10 and len(c) == 3


def test_type2_incidence_tallies(report6):
    c = _sequences(report6, "TYPE2")
    assert sum(1 for v in c.values() if v == 1) == 6
    assert c[(5, 4, 3, 2, 2, 2)] == 4
    assert c[(5, 3, 3, 3, 2, 2)] == 5
    assert c[(5, 4, 3, 3, 2, 1)] == 5


def _cone_completions(edges):
    cone = [bit(1, 6) | bit(a, 6) | bit(b, 6) for a, b in edges]
    rest = [m for m in monomial_masks(6, 3) if not m & bit(1, 6)]
    out = []
    for pair in itertools.combinations(rest, 2):
        masks = tuple(sorted(cone + list(pair)))
        if abs(masks_determinant(masks, 6)) == 3:
            out.append(masks)
    return out


def _is_type3(masks):
    degs = incidence_degrees(MonomialSet.from_masks(masks, 6))
    return 1 not in degs and 5 not in degs


def test_type3_cone_branches(report6):
    from cremona.symmetry import Permutation, act_masks, generated_group
    per_branch = {}
    union = set()
    for name, edges in named_sets.TYPE3_CONE_BASES.items():
        group = generated_group(
            [Permutation.from_cycles(g, 6) for g in named_sets.TYPE3_CONE_GENERATORS[name]], 6
        )
        hits = [m for m in _cone_completions(edges) if _is_type3(m)]
        classes = {min(act_masks(g, m, 6) for g in group) for m in hits}
        per_branch[name] = len(classes)
        union |= {canonical_key(m, 6)[0] for m in hits}
    # eight classes on the path base up to its stabilizer, six up to full relabeling
    assert per_branch == {"C1": 5, "C4": 2, "C5": 8}
    assert sum(per_branch.values()) == 15
    expected = {r.form.key for r in report6.representatives[3] if r.type == "TYPE3"}
    assert union == expected and len(union) == 10


def test_square_base_is_dead():
    assert _cone_completions(named_sets.TYPE3_DEAD_BASES["square"]) == []


@pytest.mark.parametrize("name", ["star", "paw"])
def test_star_and_paw_bases_give_no_type3(name):
    hits = _cone_completions(named_sets.TYPE3_DEAD_BASES[name])
    assert not any(_is_type3(m) for m in hits)


def test_duality_cross_check_detects_mismatch(report6):
    assert cross_check_duality(report6)
    broken = CensusReport(
        6, dict(report6.counts),
        {d: list(r) for d, r in report6.representatives.items()},
    )
    broken.representatives[4] = broken.representatives[4][1:]
    assert duality_diff(broken)
    with pytest.raises(DualityMismatch):
        cross_check_duality(broken)


def test_duality_needs_a_pair():
    lone = census(CensusQuery(6, 3, with_certificates=False))
    assert cross_check_duality(lone)  # d = 3 pairs with itself
    one_sided = census(CensusQuery(5, 2, with_certificates=False))
    with pytest.raises(ValueError):
        cross_check_duality(one_sided)


def test_colex_order():
    seq = list(colex_subsets(5, 3))
    assert len(seq) == comb(5, 3)
    assert seq[:4] == [0b00111, 0b01011, 0b01101, 0b01110]
    # restart from a yielded subset
    assert list(colex_subsets(5, 3, start=seq[3])) == seq[3:]
    assert list(colex_subsets(4, 0)) == [0]


def test_node_counts(report6):
    nodes = report6.stats["nodes"][3]
    assert nodes["candidates"] == comb(20, 6)
    assert nodes["candidates"] >= nodes["canonical"] >= nodes["cohesive"] >= nodes["cremona"]


def test_filters_do_not_change_counts():
    for n, d in [(5, 2), (5, 3), (6, 2)]:
        a, _ = cremona_candidates(n, d)
        b, _ = cremona_candidates(n, d, filter_canonical=False, filter_cohesive=False)
        assert dedup_orbits(a, n) == dedup_orbits(
            [m for m in b if satisfies_canonical_restrictions(MonomialSet.from_masks(m, n))], n
        )


def test_threads_match_serial():
    a = census(CensusQuery(6, 3, threads=2))
    b = census(CensusQuery(6, 3, threads=1))
    assert a.forms(3) == b.forms(3)
    assert a.stats["nodes"] == b.stats["nodes"]


@pytest.mark.parametrize("kwargs, message", [
    (dict(n=2), "3 <= n <= 8"),
    (dict(n=9), "3 <= n <= 8"),
    (dict(n=5, d=5), "degree"),
    (dict(n=5, d=0), "degree"),
    (dict(n=5, threads=0), "threads"),
])
def test_query_validation(kwargs, message):
    with pytest.raises(ValueError, match=message):
        census(CensusQuery(**kwargs))


def test_size_gate():
    assert search_size(8, 4) > SEARCH_LIMIT >= search_size(7, 3)
    with pytest.raises(ValueError, match="allow_large"):
        CensusQuery(8, 4).validate()
    CensusQuery(8, 4, allow_large=True).validate()


def test_catalog_json_validates_and_is_stable(report6):
    data = catalog_json(report6)
    jsonschema.validate(data, CATALOG_SCHEMA)
    assert [e["count"] for e in data] == [1, 8, 40, 8, 1]
    again = catalog_json(census(CensusQuery(6)))
    assert json.dumps(data, indent=2) == json.dumps(again, indent=2)


def test_catalog_entries_round_trip(report6):
    for entry in catalog_json(report6):
        for rep in entry["representatives"]:
            F = P(", ".join(rep["monomials"]))
            assert abs(masks_determinant(F.masks, 6)) == entry["d"]
            if rep["cones"]:
                assert all(c["size"] == len(c["members"]) for c in rep["cones"])


def test_catalog_csv(report6):
    lines = catalog_csv(report6).splitlines()
    assert lines == ["n,d,count", "6,1,1", "6,2,8", "6,3,40", "6,4,8", "6,5,1"]


def test_determinants_of_all_columns_stochastic(report6):
    for reps in report6.representatives.values():
        for r in reps:
            assert log_matrix(r.monomials).is_stochastic(r.monomials.d)


def test_census_is_cached_and_repeatable():
    assert census_report(5).counts == census(CensusQuery(5)).counts
