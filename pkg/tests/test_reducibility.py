"""The reducible-configuration catalog and its replay checker."""

import json

import pytest

from facet.reducibility import (
    ConfigurationError,
    catalog,
    check,
    check_all,
    configuration_from_json,
    configuration_to_json,
    neighborhood_audit,
)

EXPECTED_NAMES = [
    "four-vertex",
    "face-length-4",
    "three-thread",
    "eight-face",
    "nine-face",
    "ten-face-adjacent",
    "ten-face-dist3",
    "ten-face-dist4",
]


@pytest.fixture(scope="module")
def configs():
    return {c.name: c for c in catalog()}


def test_catalog_names(configs):
    assert list(configs) == EXPECTED_NAMES


def test_all_configurations_check_out():
    reports = check_all()
    assert [r.name for r in reports] == EXPECTED_NAMES
    for r in reports:
        assert r.ok, (r.name, r.failures())


@pytest.mark.parametrize("name", EXPECTED_NAMES)
def test_every_step_logged_ok(configs, name):
    report = check(configs[name])
    assert report.ok
    assert report.failures() == []
    labels = [s.label for s in report.steps]
    assert labels[0] == "shape"
    assert "surgery" in labels
    assert "availability" in labels
    assert "conflicts-covered" in labels


def test_certified_configs_replay_their_certificates(configs):
    for name, c in configs.items():
        if c.certificate is None:
            continue
        labels = [s.label for s in check(c).steps]
        assert "certificate-coefficient" in labels, name
        assert "certificate-witness" in labels, name


def test_three_thread_middle_edge_neighborhood(configs):
    c = configs["three-thread"]
    audit = neighborhood_audit(c.host, c.ell, c.colors, c.uncolored)
    # the middle edge of a three-edge thread sees exactly nine other
    # edges facially, leaving one admissible color out of ten
    assert audit == {1: (9, 1)}


def test_face_length_4_neighborhoods(configs):
    c = configs["face-length-4"]
    audit = neighborhood_audit(c.host, c.ell, c.colors, c.uncolored)
    assert sorted(audit) == [4, 5, 6, 7]
    for e, (count, avail) in audit.items():
        assert count <= 6
        assert (count, avail) == (3, 7)


def test_dummy_variables_carry_cap_one(configs):
    for c in configs.values():
        for i in c.dummies:
            assert c.caps[i - 1] == 1
            for a, b in c.conflicts:
                assert i not in (a, b)


class TestJson:
    def test_roundtrip_all(self, configs):
        for c in configs.values():
            again = configuration_from_json(configuration_to_json(c))
            assert again == c
            assert check(again).ok

    def test_document_shape(self, configs):
        doc = json.loads(configuration_to_json(configs["four-vertex"]))
        assert sorted(doc) == [
            "caps", "certificate", "colors", "conflicts", "description",
            "dummies", "ell", "host", "name", "obligations", "surgery",
            "variables",
        ]

    def test_missing_key_rejected(self, configs):
        doc = json.loads(configuration_to_json(configs["four-vertex"]))
        del doc["caps"]
        with pytest.raises(ConfigurationError, match="bad configuration"):
            configuration_from_json(json.dumps(doc))

    def test_garbage_rejected(self):
        with pytest.raises(ConfigurationError):
            configuration_from_json("[]")


class TestMalformedConfigs:
    def mutate(self, configs, **changes):
        doc = json.loads(configuration_to_json(configs["four-vertex"]))
        doc.update(changes)
        return configuration_from_json(json.dumps(doc))

    def test_caps_length_mismatch_fails_shape(self, configs):
        doc = json.loads(configuration_to_json(configs["four-vertex"]))
        bad = self.mutate(configs, caps=doc["caps"][:-1])
        report = check(bad)
        assert not report.ok
        assert report.steps[0].label == "shape"
        assert not report.steps[0].ok

    def test_variable_edge_out_of_host(self, configs):
        doc = json.loads(configuration_to_json(configs["four-vertex"]))
        bad = self.mutate(configs, variables=[999] + doc["variables"][1:])
        report = check(bad)
        assert not report.ok
        assert any(s.label == "variable-edges" and not s.ok for s in report.steps)

    def test_self_conflict_rejected_by_report(self, configs):
        doc = json.loads(configuration_to_json(configs["four-vertex"]))
        bad = self.mutate(configs, conflicts=[[1, 1]] + doc["conflicts"])
        report = check(bad)
        assert not report.ok
        assert any(s.label == "conflict-indices" and not s.ok for s in report.steps)

    def test_dropped_conflict_caught_by_coverage(self, configs):
        doc = json.loads(configuration_to_json(configs["four-vertex"]))
        bad = self.mutate(configs, conflicts=doc["conflicts"][1:])
        report = check(bad)
        assert not report.ok
        failing = {s.label for s in report.steps if not s.ok}
        assert "conflicts-covered" in failing or "certificate-transcription" in failing

    def test_inflated_cap_caught_by_availability(self, configs):
        doc = json.loads(configuration_to_json(configs["four-vertex"]))
        caps = list(doc["caps"])
        caps[0] = 11
        bad = self.mutate(configs, caps=caps)
        report = check(bad)
        assert not report.ok
        failing = {s.label for s in report.steps if not s.ok}
        assert "availability" in failing or "certificate-transcription" in failing
