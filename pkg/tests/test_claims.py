import pytest

from geodekit import claims as C
from geodekit.certificates import check_sg_certificate


def test_registry_fields():
    assert {"C-HAT-K4", "C-711", "C-COCKTAIL", "C-KN-BIP", "C-H324", "C-SMALL", "C-TREES",
            "C-KNKN", "C-PNP3", "C-K4K2", "C-CLIQUETREE", "C-PROJECTION", "C-CONVEX2",
            "C-COUNTEREXAMPLE", "C-HAT-STRICT", "C-CONJ-SMALL"} <= set(C.REGISTRY)
    for c in C.REGISTRY.values():
        assert c.budget_class in C.BUDGET_CLASSES
        assert c.provenance and c.quote and c.location and c.graphs


def test_select():
    fast = C.select(["fast"])
    assert fast and all(c.budget_class == "fast" for c in fast)
    assert len(C.select(["all"])) == len(C.REGISTRY)
    assert [c.claim_id for c in C.select(["C-711", "C-HAT-K4"])] == ["C-HAT-K4", "C-711"]
    with pytest.raises(KeyError):
        C.select(["bogus"])


def test_fast_claims_pass():
    records = C.run_claims(C.select(["fast"]))
    assert [r.result for r in records] == ["pass"] * len(records), [
        (r.claim_id, r.measured, r.detail) for r in records if r.result != "pass"]


def test_failures_are_reported_not_suppressed():
    rec = C.run_claim("C-KNKN")
    assert rec.result == "fail"
    assert rec.measured["K4xK4"]["sg"] == 6 and rec.measured["K4xK4"]["core_bound"] == 7
    assert rec.measured["K3xK3"]["sg"] == 5


def test_counterexample_witness():
    P, cert = C.counterexample_witness(4, 2)
    assert P.n == 34 and len(cert.set) == 9
    check_sg_certificate(P, cert)


def test_random_tree_is_seeded():
    import random
    a = C.random_tree(10, random.Random(3))
    b = C.random_tree(10, random.Random(3))
    assert a.edges == b.edges and a.m == 9


def test_format_table():
    rec = C.run_claim("C-FORMULAS")
    table = C.format_table([rec])
    assert table.splitlines()[1].startswith("C-FORMULAS")
