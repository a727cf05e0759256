from math import comb

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geodekit import bounds as B
from geodekit import families as F


def test_capacity_inequality():
    assert B.eq1_holds(3, 5, 4, 32)
    assert (3 * 2 + 3) * 3 == 27 == 32 - 5
    assert not B.eq1_holds(2, 5, 4, 32)
    assert B.eq1_holds(0, 7, 3, 7)
    with pytest.raises(ValueError):
        B.eq1_holds(1, 2, 1, 3)


@pytest.mark.parametrize("n,s,d,expect", [
    (6, 4, 2, (1, 2)),
    (32, 5, 4, (3, 4)),
    (10, 4, 2, (3, 3)),
])
def test_sgc_bounds(n, s, d, expect):
    assert B.sgc_bounds(n, s, d) == expect


def test_sgc_bounds_rejects_bad_ranges():
    for args in [(5, 5, 2), (5, 1, 2), (5, 3, 1)]:
        with pytest.raises(ValueError):
            B.sgc_bounds(*args)
    with pytest.raises(ValueError):
        B.sgc_bounds(100, 2, 2)  # a single pair cannot host 98 inner vertices


def test_hat_lower():
    assert B.hat_lower(4, 6) == 3
    assert B.hat_lower(10, 24) == 3
    assert B.hat_lower(7, 1) == 1
    with pytest.raises(ValueError):
        B.hat_lower(4, 7)


def test_product_upper_bounds():
    for n in range(2, 8):
        assert B.product_upper_old(n, n, n, n) == n * n - n + 1
        assert B.product_upper_sgc(n, 1, n, n, 1, n) == 2 * n - 1
    assert B.product_upper_old(2, 5, 2, 3) == min(2 * 5 - 1, 2 * 3 - 1)
    assert B.product_upper_old(1, 1, 4, 9) == 4
    for n in range(3, 10):
        assert B.product_upper_sgc(2, 1, n, 2, 1, 3) == 4
    with pytest.raises(ValueError):
        B.product_upper_sgc(2, 3, 4, 2, 1, 3)


def test_counterexample_closed_forms():
    assert B.counterexample_closed_forms(4, 2) == (10, 9)
    assert B.counterexample_closed_forms(5, 2) == (15, 11)
    assert B.counterexample_gap(4, 2) == 1
    with pytest.raises(ValueError):
        B.counterexample_closed_forms(3, 2)


def _radical(n, s, d):
    with mpmath.workdps(60):
        disc = mpmath.mpf(2 * s - 1) ** 2 - mpmath.mpf(8 * (n - s)) / (d - 1)
        return mpmath.ceil(s - (1 + mpmath.sqrt(disc)) / 2)


@st.composite
def valid_triples(draw):
    d = draw(st.integers(2, 12))
    s = draw(st.integers(2, 60))
    cap = comb(s, 2) * (d - 1)
    n = draw(st.integers(s + 1, s + cap))
    return n, s, d


@settings(max_examples=1000, deadline=None)
@given(valid_triples())
def test_integer_search_matches_radical(t):
    n, s, d = t
    lower, upper = B.sgc_bounds(n, s, d)
    rad = _radical(n, s, d)
    # at an exact root the radical's ceiling and the inequality can differ by one
    with mpmath.workdps(60):
        disc = mpmath.mpf(2 * s - 1) ** 2 - mpmath.mpf(8 * (n - s)) / (d - 1)
        root = s - (1 + mpmath.sqrt(disc)) / 2
        on_boundary = mpmath.almosteq(root, mpmath.nint(root), 1e-40)
    if not on_boundary:
        assert lower == max(1, int(rad))
    else:
        assert abs(lower - max(1, int(rad))) <= 1
    assert lower >= 1
    assert B.eq1_holds(lower, s, d, n) and (lower == 1 or not B.eq1_holds(lower - 1, s, d, n))
    assert abs(B.sgc_lower_radical(n, s, d) - lower) <= 1


@st.composite
def factor(draw):
    sg = draw(st.integers(2, 30))
    return sg, draw(st.integers(1, sg - 1)), draw(st.integers(sg, 60))


@given(factor(), factor())
def test_core_bound_dominates_old(fg, fh):
    (sgG, sgcG, nG), (sgH, sgcH, nH) = fg, fh
    assert B.product_upper_sgc(sgG, sgcG, nG, sgH, sgcH, nH) <= B.product_upper_old(sgG, nG, sgH, nH)


def test_check_bounds_examples():
    rep = B.check_bounds(F.cocktail_party(6), graph_id="cocktail(6)")
    assert (rep.sg, rep.sgc) == (4, 2) and not rep.violations
    upper = next(c for c in rep.checks if c.name.startswith("sgc upper"))
    assert upper.value == 2 and upper.tight
    rep = B.check_bounds(F.h_graph(3, 2, 4))
    cap = next(c for c in rep.checks if c.name.startswith("capacity inequality"))
    assert cap.tight and cap.satisfied
    rep = B.check_bounds(F.hat_subdivision(F.complete(4)))
    lower = next(c for c in rep.checks if c.name.startswith("sgc lower"))
    assert lower.value == 3 and lower.tight
    rep = B.check_bounds(F.complete(5))
    assert rep.exempt and not rep.violations


def test_check_bounds_trees():
    for T in (F.path(5), F.star(4), F.tree_from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])):
        rep = B.check_bounds(T)
        assert rep.sgc == 1 and not rep.violations
        assert next(c for c in rep.checks if c.name == "sgc >= 1").tight


def test_check_bounds_brackets_when_budget_runs_out():
    from geodekit.limits import SearchLimits
    rep = B.check_bounds(F.h_graph(3, 2, 4), SearchLimits(node_budget=3))
    assert rep.sg is None and "sg" in rep.brackets and not rep.violations
    table = rep.to_table()
    assert "sg=[" in table


def test_report_serializes():
    import json
    rep = B.check_bounds(F.cycle(6), graph_id="C6")
    d = json.loads(json.dumps(rep.to_dict()))
    assert d["graph_id"] == "C6" and d["sg"] == 3 and isinstance(d["checks"], list)
    assert rep.to_table().splitlines()[0] == "graph C6: n=6 m=6 diam=3"
