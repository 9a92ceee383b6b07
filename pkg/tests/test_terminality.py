import itertools
from math import lcm, prod

import pytest
from hypothesis import given, settings, strategies as st

from brieskorn.model import discrepancy, discrepancy_lower_bound
from brieskorn.terminality import (
    SizeLimitError,
    brute_force_min_discrepancy,
    is_terminal,
    scan_bound,
)


def naive_min(a, box):
    """Plain enumeration, independent of both oracle code paths."""
    best = None
    for p in itertools.product(range(1, box + 1), repeat=len(a)):
        v = sum(p) - min(x * y for x, y in zip(p, a)) - 1
        if best is None or v < best[0]:
            best = (v, p)
    return best


@pytest.mark.parametrize("a,mode,expected", [
    ((2, 3, 11, 17, 19), "product", 21318),
    ((2, 3, 11, 17, 19), "lcm", 21318),
    ((2, 2, 2), "lcm", 2),
    ((2, 2, 2), "product", 8),
    ((4, 6, 10), "lcm", 60),
])
def test_scan_bound(a, mode, expected):
    assert scan_bound(a, mode) == expected


def test_paper_tuple_terminal():
    v = is_terminal((2, 3, 11, 17, 19))
    assert v.terminal and v.status == "Terminal"
    assert v.min_scanned_h >= 1
    assert v.witness is None


@pytest.mark.parametrize("a,witness", [
    ((2, 2, 2), (1, 1, 1)),
    ((2, 3, 5), (1, 1, 1)),
    # first failing d is 6: h(6) = 3+2+1+1-7 = 0
    ((2, 3, 7, 41), (3, 2, 1, 1)),
])
def test_non_terminal_witnesses(a, witness):
    v = is_terminal(a)
    assert not v.terminal
    assert v.witness.coordinates == witness
    assert v.witness.interior
    assert discrepancy(v.witness, a) == v.witness_discrepancy <= 0


def test_first_failure_is_first():
    a = (2, 3, 7, 41)
    v = is_terminal(a)
    assert all(discrepancy_lower_bound(d, a) >= 1 for d in range(1, v.first_failing_d))
    assert discrepancy_lower_bound(v.first_failing_d, a) <= 0
    # d = 42 from the balanced vector (21,14,6,2) also fails, later
    assert discrepancy((21, 14, 6, 2), a) == 0


@pytest.mark.parametrize("a", [(2, 3, 6), (2, 4, 4), (3, 3, 3), (2, 3, 7, 42)])
def test_reciprocal_sum_at_most_one(a):
    v = is_terminal(a)
    assert not v.terminal
    period = lcm(*a)
    assert v.witness.coordinates == tuple(period // x for x in a)
    assert v.witness_discrepancy <= -1


def test_full_scan_reports_global_min():
    a = (2, 3, 7, 41)
    full = is_terminal(a, full_scan=True)
    early = is_terminal(a)
    assert full.witness == early.witness
    assert full.min_scanned_h == min(discrepancy_lower_bound(d, a) for d in range(1, lcm(*a) + 1))
    assert early.min_scanned_h == min(discrepancy_lower_bound(d, a) for d in range(1, early.first_failing_d + 1))


def test_chunking_and_jobs_do_not_change_verdict():
    for a in [(2, 3, 11, 17, 19), (2, 3, 7, 41), (3, 4, 5, 7, 9)]:
        base = is_terminal(a)
        assert is_terminal(a, chunk=97) == base
        assert is_terminal(a, chunk=1000, jobs=3) == base
        assert is_terminal(a, full_scan=True, chunk=513, jobs=2) == is_terminal(a, full_scan=True)


@pytest.mark.parametrize("a", [(2, 3, 11, 17, 19), (2, 2, 2), (2, 3, 5), (2, 4, 6), (3, 3, 4, 4), (2, 3, 7, 41)])
def test_lcm_and_product_agree(a):
    x, y = is_terminal(a, "lcm"), is_terminal(a, "product")
    assert (x.terminal, x.witness, x.first_failing_d) == (y.terminal, y.witness, y.first_failing_d)


@pytest.mark.parametrize("a,box,expected", [
    ((2, 2, 2), 2, (0, (1, 1, 1))),
    ((2, 3, 11, 17, 19), 1, (2, (1, 1, 1, 1, 1))),
    ((2, 3, 5), 30, (0, (1, 1, 1))),
])
def test_oracle_examples(a, box, expected):
    for method in ("reduced", "full"):
        value, vec = brute_force_min_discrepancy(a, box, method=method)
        assert (value, vec.coordinates) == expected


def test_oracle_size_guard():
    with pytest.raises(SizeLimitError):
        brute_force_min_discrepancy((2, 3, 5), 300, limit=10**7)
    brute_force_min_discrepancy((2, 3, 5), 10, limit=1000)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(2, 9), min_size=3, max_size=4), st.integers(1, 9))
def test_oracle_methods_match_naive(a, box):
    expected = naive_min(a, box)
    for method in ("reduced", "full"):
        value, vec = brute_force_min_discrepancy(a, box, method=method)
        assert (value, vec.coordinates) == expected


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(2, 14), min_size=3, max_size=4))
def test_oracle_agreement_random(a):
    period = lcm(*a)
    if period ** len(a) > 10**6:
        return
    value, _ = brute_force_min_discrepancy(a, period)
    assert is_terminal(a).terminal == (value >= 1)


def test_product_mode_on_paper_bound():
    v = is_terminal((2, 3, 11, 17, 19), "product")
    assert v.terminal and v.scan_bound_used == prod((2, 3, 11, 17, 19))
