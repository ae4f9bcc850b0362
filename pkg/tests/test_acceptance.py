"""One test per acceptance criterion; each prints a PASS/FAIL line.

Criteria 5 and 7 check two printed values that the computation does not
reproduce (a coefficient in one Eisenstein relation and the value of
beta(m6')).  They are strict xfails: the FAIL line is still reported, and
the run breaks if they ever start passing.
"""
import pytest

from ainf_elliptic import checks

from .conftest import ACCEPTANCE_LINES

_cache: dict[int, checks.Check] = {}


def outcome(i):
    if i not in _cache:
        _cache[i] = checks.run(i)
        line = _cache[i].line()
        ACCEPTANCE_LINES.append(line)
        print(line)
    return _cache[i]


def failing(c):
    return [r for r in c.rows if not r.get("diagnostic") and not r["pass"]]


@pytest.mark.parametrize("i", [1, 2, 3, 4, 6, 8, 9, 10])
def test_criterion(i):
    c = outcome(i)
    assert c.passed, failing(c)


@pytest.mark.xfail(strict=True, reason="printed coefficient -5 in the fourth relation; -4 holds")
def test_criterion_5():
    c = outcome(5)
    assert c.passed, failing(c)


def test_criterion_5_failure_is_only_the_fourth_relation():
    c = outcome(5)
    bad = failing(c)
    assert bad and all(r["relation"].startswith("g41 = -5") for r in bad)
    assert {r["tau"] for r in bad} == {"0+2i", "0.3+1.2i"}


@pytest.mark.xfail(strict=True, reason="beta(m6') = -15 t^4 e4 from t_x = -10 and t_w = 5, not -5")
def test_criterion_7():
    c = outcome(7)
    assert c.passed, failing(c)


def test_criterion_7_failure_is_only_beta():
    c = outcome(7)
    bad = failing(c)
    assert bad and all(r["quantity"].startswith("beta") for r in bad)
