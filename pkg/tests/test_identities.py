import json

from hsk.identities import CHECKS, verify_identity_suite


def test_suite_all_pass(identity_report):
    failures = [e.name for e in identity_report.entries if not e.ok]
    assert failures == []
    assert identity_report.ok


def test_suite_has_enough_named_checks(identity_report):
    names = [e.name for e in identity_report.entries]
    assert len(names) == len(set(names))
    assert len(names) >= 38


def test_suite_order_is_declaration_order(identity_report):
    assert [e.name for e in identity_report.entries] == \
        [name for name, _, _ in CHECKS]


def test_json_schema(identity_report):
    payload = json.loads(identity_report.to_json())
    assert payload["failed"] == 0
    for entry in payload["checks"]:
        assert set(entry) == {"check", "status", "paper_ref", "millis",
                              "detail"}
        assert entry["status"] in ("pass", "fail")
        assert isinstance(entry["millis"], (int, float))


def test_contested_coefficient_is_resolved(identity_report):
    entry = next(e for e in identity_report.entries
                 if e.name == "specialized_difference_reals")
    assert entry.ok
    assert "variant fails" in entry.detail


def test_parallel_run_matches_sequential(identity_report):
    parallel = verify_identity_suite(max_workers=4)
    assert [(e.name, e.ok, e.detail) for e in parallel.entries] == \
        [(e.name, e.ok, e.detail) for e in identity_report.entries]
