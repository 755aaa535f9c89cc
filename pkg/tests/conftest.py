import sys

import pytest
from hypothesis import settings

# canonical forms at n = 7 walk all 5040 relabelings
settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

from cremona.census import CensusQuery, census
from cremona.oracle import brute_force_oracle


_reports = {}
_oracles = {}


def census_report(n):
    if n not in _reports:
        _reports[n] = census(CensusQuery(n, verify_duality=True, verify_mdc=True))
    return _reports[n]


def oracle_forms(n, d):
    if (n, d) not in _oracles:
        _oracles[n, d] = brute_force_oracle(n, d)
    return _oracles[n, d]


@pytest.fixture(scope="session")
def reports():
    return {n: census_report(n) for n in (3, 4, 5, 6)}


@pytest.fixture(scope="session")
def report6():
    return census_report(6)


@pytest.fixture(scope="session")
def cubic6(report6):
    return [r.monomials for r in report6.representatives[3]]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
