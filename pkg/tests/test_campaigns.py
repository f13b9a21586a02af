"""Certificate campaigns and their independent checkers."""

from __future__ import annotations

import copy
import json

import pytest

from orderdim import OrderdimError
from orderdim.campaigns import (
    CAMPAIGNS,
    CHECKERS,
    recheck_certificate,
    run_campaign,
)
from orderdim.serialize import dumps

SMALL = {
    "odim-eq-dicr": {"n": 3},
    "dim-agreement": {"n": 4},
    "dim-landmarks": {},
    "dicr-landmarks": {},
    "graph-collapse": {"n": 5},
    "h1plus": {"n": 3},
    "cyclefree-extends": {"n": 5},
    "roundtrip": {"n": 3},
    "g0": {"n": 2},
    "xinapg": {"n": 4},
    "hom-transfer": {"n": 4},
    "separators": {"n": 3},
    "minimal-hom": {},
}


def first_cert(name, **kw):
    return next(iter(run_campaign(name, **kw)))


def test_every_campaign_produces_verified_certificates():
    for name, kw in SMALL.items():
        certs = list(run_campaign(name, seed=3, **kw))
        assert certs, name
        assert all(c.verified for c in certs), name


def test_certificates_recheck_from_serialized_payload():
    for name, kw in SMALL.items():
        cert = first_cert(name, seed=3, **kw)
        payload = json.loads(dumps(cert.to_payload()))
        assert recheck_certificate(payload) is True


def test_registry_and_unknown_names():
    assert set(CAMPAIGNS) == set(SMALL)
    with pytest.raises(OrderdimError):
        run_campaign("no-such-campaign")
    with pytest.raises(OrderdimError):
        recheck_certificate({"claim": "bogus", "instance": {}, "witness": {}})


def corrupt(payload, path, value):
    doc = copy.deepcopy(payload)
    target = doc["witness"]
    for key in path[:-1]:
        target = target[key]
    target[path[-1]] = value
    return doc


def test_checkers_reject_corrupted_witnesses():
    cases = [
        ("odim-eq-dicr", {"n": 3}, [(["d_via_dicr"], 9)]),
        ("dim-landmarks", {}, [(["d"], 7), (["expected"], 7)]),
        ("dicr-landmarks", {}, [(["k"], 0)]),
        ("graph-collapse", {"n": 5}, [(["chromatic"], 99)]),
        ("h1plus", {"n": 3}, [(["k_pair_digraph"], 50)]),
        ("separators", {"n": 3}, [(["bound"], -1)]),
    ]
    for name, kw, edits in cases:
        base = json.loads(dumps(first_cert(name, seed=3, **kw).to_payload()))
        for path, value in edits:
            assert recheck_certificate(corrupt(base, path, value)) is False, (
                name,
                path,
            )


def test_checker_rejects_tampered_mapping():
    for cert in run_campaign("hom-transfer", n=4, seed=3):
        payload = json.loads(dumps(cert.to_payload()))
        if payload["witness"]["map"]:
            h_n = payload["instance"]["h"]["n"]
            if h_n < 2:
                continue
            broken = corrupt(
                payload,
                ["map"],
                [(v + 1) % h_n for v in payload["witness"]["map"]],
            )
            if broken["witness"]["map"] != payload["witness"]["map"]:
                got = recheck_certificate(broken)
                if got is False:
                    return
    raise AssertionError("no tampered mapping was rejected")


def test_checker_rejects_dropped_cover_class():
    cert = first_cert("odim-eq-dicr", n=3, seed=3)
    payload = json.loads(dumps(cert.to_payload()))
    classes = payload["witness"]["cover"]["classes"]
    if not classes:
        for cert in run_campaign("odim-eq-dicr", n=3):
            payload = json.loads(dumps(cert.to_payload()))
            classes = payload["witness"]["cover"]["classes"]
            if classes:
                break
    broken = copy.deepcopy(payload)
    broken["witness"]["cover"]["classes"] = classes[:-1]
    assert recheck_certificate(broken) is False


def test_cyclefree_prefiltered_instances_never_report_cycles():
    for cert in run_campaign("cyclefree-extends", n=5, seed=3):
        if cert.instance["prefiltered"]:
            assert cert.witness["outcome"] == "extension"


def test_cyclefree_campaign_exercises_both_outcomes():
    outcomes = {
        c.witness["outcome"]
        for c in run_campaign("cyclefree-extends", n=5, seed=3)
    }
    assert outcomes == {"extension", "cycle"}


def test_checkers_cover_every_claim():
    claims = set()
    for name, kw in SMALL.items():
        for cert in run_campaign(name, seed=3, **kw):
            claims.add(cert.claim)
    assert claims == set(CHECKERS)
