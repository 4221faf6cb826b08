import json

from rrcodes import verify
from rrcodes.verify import CheckResult, Mismatch, VerifyResult, load_ledger, run_verify


def test_packaged_ledger_loads():
    ids = [e["id"] for e in load_ledger()]
    assert "table:C1:U<=Phi:*" in ids
    assert all(e.get("summary") for e in load_ledger())


def test_ledger_from_file(tmp_path):
    path = tmp_path / "ledger.json"
    path.write_text(json.dumps([{"id": "x:*"}]))
    assert load_ledger(path) == [{"id": "x:*"}]
    path.write_text(json.dumps({"id": "x"}))
    try:
        load_ledger(path)
    except ValueError:
        pass
    else:
        raise AssertionError("a non-list ledger must be rejected")


def test_report_format():
    res = VerifyResult([
        CheckResult("a", "fine"),
        CheckResult("b", "two groups", [Mismatch("t:1", 2, "ex", known=True), Mismatch("t:2", 1, "ex2")]),
    ])
    assert not res.ok
    assert res.report() == (
        "[PASS] a: fine\n"
        "[FAIL] b: two groups\n"
        "    known t:1 count=2 example=ex\n"
        "    UNEXPECTED t:2 count=1 example=ex2\n"
        "summary: 2 checks, 1 known mismatch groups, 1 unexpected\n"
    )


def _fake_checks():
    return (verify.check_weights, verify.check_min_pt)


def test_ledger_marks_known(monkeypatch):
    monkeypatch.setattr(verify, "CHECKS", _fake_checks())
    res = run_verify()
    assert res.ok
    assert [m.id for m in res.known] == ["printed-component-distance:C1"]
    res = run_verify(ledger=[])
    assert not res.ok
    assert [m.id for m in res.unexpected] == ["printed-component-distance:C1"]


def test_cheap_checks_pass():
    for fn in (verify.check_macwilliams, verify.check_digit_identity, verify.check_min_pt):
        assert fn().mismatches == []


def test_duality_check_groups():
    ids = [m.id for m in verify.check_duality().mismatches]
    assert ids == ["printed-containment:C2", "printed-containment:C3", "printed-dual:C3"]


def test_mds_check_groups():
    ids = [m.id for m in verify.check_mds().mismatches]
    assert ids == ["mds-theorem:C1:missing"]
