import json

from zinbiel.report import Report
from zinbiel.suites import verify_core


def test_render_layout():
    r = Report("demo")
    r.note("first line\nsecond line")
    r.check("equal", 3, 3)
    r.check("flag", True, False)
    assert r.render().splitlines() == [
        "report: demo",
        "note: first line",
        "  second line",
        "check equal: expected=3 computed=3 PASS",
        "check flag: expected=true computed=false FAIL",
        "result: FAIL",
    ]
    assert not r.passed


def test_json_is_flat_mirror():
    r = Report("demo")
    r.check("n", 1, 1)
    data = json.loads(r.to_json())
    assert data == {
        "title": "demo",
        "notes": [],
        "checks": [{"name": "n", "expected": "1", "computed": "1", "status": "PASS"}],
        "result": "PASS",
    }


def test_explicit_verdict_overrides_equality():
    r = Report("demo")
    r.check("tally", "5/5", "4/4", passed=False)
    assert not r.passed


def test_verify_core_small_passes():
    report = verify_core(max_degree=4, trials=5, seed=11)
    assert report.passed and len(report.checks) == 15
