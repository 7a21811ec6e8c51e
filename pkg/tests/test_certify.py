import json

import pytest

from multisym.certify import (
    Certificate, certificate_diff, certify_power_sum, certify_pth_power,
    expand_certificate, replay_matches, replay_trace, verify,
)
from multisym.errors import SelfCheckError
from multisym.exptuples import scale
from multisym.invariants import power_sum
from multisym.selftest import suite_certificates
from multisym.spans import in_p_algebra


def test_base_case_single_column():
    cert = certify_power_sum((4,), 2)
    assert cert.terms == [(1, ((1,), (1,), (1,), (1,)))]
    assert [s.kind for s in cert.trace] == ["base-case"]
    assert verify(cert)


def test_base_case_later_column():
    cert = certify_pth_power((0, 0, 1), 3)
    assert cert.target == (0, 0, 3)
    assert cert.width == 3
    assert [s.kind for s in cert.trace] == ["frobenius", "base-case"]
    assert verify(cert)


def test_paper_style_double_induction():
    # M_(3,3): the last column is rewritten through the Newton identity, and
    # the inner targets M_(3,1), M_(3,2) come from flattening M_(4), M_(5)
    cert = certify_power_sum((3, 3), 3)
    kinds = [s.kind for s in cert.trace]
    assert kinds == [
        "base-case", "merge", "base-case", "flatten",
        "merge", "base-case", "flatten", "newton-rewrite",
    ]
    merges = [tuple(s.params["merged"]) for s in cert.trace if s.kind == "merge"]
    assert merges == [(4,), (5,)]
    assert verify(cert)
    assert replay_matches(cert)


def test_pth_power_certificates():
    for alpha, p in [((1,), 2), ((1, 1), 3), ((2, 1), 2)]:
        cert = certify_pth_power(alpha, p)
        assert cert.target == scale(alpha, p)
        assert verify(cert)
        assert replay_matches(cert)
        assert cert.constructive


def test_oracle_agreement_small():
    for alpha, p in [((2, 2), 2), ((1, 1), 3)]:
        cert = certify_pth_power(alpha, p)
        assert verify(cert)
        target = power_sum(cert.target, p, cert.width)
        assert in_p_algebra(target) is not None


def test_divisibility_precondition():
    with pytest.raises(SelfCheckError):
        certify_power_sum((1, 1), 2)  # first entry not divisible by 2
    with pytest.raises(ValueError):
        certify_power_sum((0,), 2)


def test_degree_bookkeeping():
    cert = certify_power_sum((3, 2), 3)
    d = 5
    for coeff, factors in cert.terms:
        assert sum(sum(b) for b in factors) == d
    assert verify(cert)


def test_mutated_certificate_rejected():
    cert = certify_power_sum((3, 3), 3)
    broken = Certificate.from_json_obj(cert.to_json_obj())
    coeff, factors = broken.terms[0]
    broken.terms[0] = (3 - coeff, factors)
    assert not verify(broken)
    assert not certificate_diff(broken).is_zero
    # dropping a factor breaks the degree bookkeeping shape check
    broken2 = Certificate.from_json_obj(cert.to_json_obj())
    c2, f2 = broken2.terms[0]
    broken2.terms[0] = (c2, f2[:-1])
    assert not verify(broken2)


def test_json_schema_and_disk_roundtrip(tmp_path):
    cert = certify_pth_power((1, 1), 3)
    path = tmp_path / "cert.json"
    cert.save(path)
    obj = json.loads(path.read_text())
    assert set(obj) == {"p", "width", "target", "terms", "trace", "constructive"}
    assert obj["p"] == 3 and obj["target"] == [3, 3]
    assert all(set(t) == {"coeff", "factors"} for t in obj["terms"])
    loaded = Certificate.load(path)
    assert loaded.terms == cert.terms
    assert verify(loaded)
    assert replay_matches(loaded)


def test_trace_replay_reproduces_terms():
    for alpha, p in [((4,), 2), ((2, 1), 2), ((3, 2), 3), ((3, 3), 3)]:
        cert = certify_power_sum(alpha, p)
        assert replay_trace(cert) == cert.terms


def test_expand_matches_target():
    cert = certify_power_sum((2, 2), 2)
    assert expand_certificate(cert) == power_sum((2, 2), 2, 2)


def test_certificate_suite():
    assert suite_certificates(seed=0).passed


def test_width_override():
    cert = certify_power_sum((2, 1), 2, width=3)
    assert cert.width == 3
    assert verify(cert)
    with pytest.raises(ValueError):
        certify_power_sum((2, 1), 2, width=1)
