import json

import pytest

from geodekit import families as F
from geodekit.certificates import (
    CertificateError,
    CoreCertificate,
    SgCertificate,
    check_core_certificate,
    check_sg_certificate,
    verify,
)
from geodekit.solvers import sgc_of_set, strong_geodetic_number


def test_json_shape_and_round_trip():
    G = F.hat_subdivision(F.complete(4))
    out = strong_geodetic_number(G)
    d = out.to_dict()
    assert list(d)[:4] == ["set", "paths", "value", "status"]
    assert d["set"] == [0, 1, 2, 3] and d["value"] == 4 and d["status"] == "proved"
    assert d["paths"][0] == {"pair": [0, 1], "path": [0, 4, 1]}
    again = SgCertificate.from_dict(json.loads(json.dumps(d)))
    assert again == out.certificate and verify(G, again)


def test_core_round_trip():
    K = F.complete_bipartite(7, 11)
    out = sgc_of_set(K, range(7))
    d = out.to_dict()
    assert d["core"] == [0, 1] and d["value"] == 2
    back = CoreCertificate.from_dict(json.loads(json.dumps(d)))
    assert verify(K, back)


def test_checker_rejects_non_geodesic():
    G = F.cycle(6)
    paths = {(0, 2): (0, 1, 2), (0, 4): (0, 5, 4), (2, 4): (2, 1, 0, 5, 4)}
    with pytest.raises(CertificateError):
        check_sg_certificate(G, SgCertificate((0, 2, 4), paths))


def test_checker_rejects_non_path_and_missing_pairs():
    G = F.path(3)
    with pytest.raises(CertificateError):
        check_sg_certificate(G, SgCertificate((0, 2), {(0, 2): (0, 2)}))
    with pytest.raises(CertificateError):
        check_sg_certificate(G, SgCertificate((0, 2), {}))
    with pytest.raises(CertificateError):
        check_sg_certificate(G, SgCertificate((0, 2), {(0, 2): (0, 1)}))


def test_checker_rejects_uncovered():
    G = F.cycle(6)
    with pytest.raises(CertificateError):
        check_sg_certificate(G, SgCertificate((0, 3), {(0, 3): (0, 1, 2, 3)}))
    assert not verify(G, SgCertificate((0, 3), {(0, 3): (0, 1, 2, 3)}))


def test_core_checker():
    K = F.complete_bipartite(2, 2)
    good = CoreCertificate((0, 1), (0,), {(0, 1): (0, 2, 1)})
    with pytest.raises(CertificateError):
        check_core_certificate(K, good)  # vertex 3 uncovered
    ok = CoreCertificate((0, 1), (0,), {(0, 1): (0, 3, 1)})
    with pytest.raises(CertificateError):
        check_core_certificate(K, ok)
    with pytest.raises(CertificateError):
        check_core_certificate(K, CoreCertificate((0, 1), (2,), {}))


def test_single_vertex():
    G = F.path(1)
    check_sg_certificate(G, SgCertificate((0,), {}))
    check_core_certificate(G, CoreCertificate((0,), (0,), {}))
