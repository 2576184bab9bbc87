"""The identity suites: outcomes, report schema, and mutation sensitivity."""

from __future__ import annotations

import json

from qschub import quantum, verify
from qschub.poly import parse


def test_report_schema():
    rep = verify.suite_counterexamples()
    obj = rep.as_json_obj()
    assert list(obj) == ["suite", "cases", "failures", "elapsed_ms"]
    assert obj["suite"] == "counterexamples"
    assert obj["cases"] == 4
    assert obj["failures"] == []
    assert isinstance(obj["elapsed_ms"], int)
    assert json.loads(rep.as_json()) == obj
    assert rep.ok
    assert "4 cases, ok" in rep.text()


def test_failure_entries_carry_replay_data():
    rep = verify.Report("demo")
    rep.check("case-a", parse("x1"), parse("x2"))
    assert not rep.ok
    f = rep.failures[0]
    assert f["case"] == "case-a"
    assert f["expected"] == "x2"
    assert f["actual"] == "x1"
    assert "FAIL case-a" in rep.text()


def test_identity_suites_pass_at_rank_four():
    for name in ("cauchy", "schur", "vexillary", "grassmannian", "factorization"):
        rep = verify.SUITES[name](4)
        assert rep.ok, rep.text()
        assert rep.cases > 0


def test_counterexample_suite_passes():
    assert verify.suite_counterexamples().ok


def test_conjecture_findings_are_exact():
    rep = verify.suite_conjectures(4)
    # the single-alphabet expansion holds everywhere scanned
    assert not [f for f in rep.failures if f["case"].startswith("skew-single")]
    # the double-alphabet expansion fails only on the two disconnected shapes
    bad_b = sorted(
        f["case"].split("w=")[1] for f in rep.failures if f["case"].startswith("skew-double-B")
    )
    assert bad_b == ["2143", "3142"]
    # the flag-truncation hypothesis has no rank-4 counterexamples
    assert not [f for f in rep.failures if f["case"].startswith("flag-truncation")]


def test_conjecture_exercise_fails_at_rank_five():
    rep = verify.suite_conjectures(5)
    bad = sorted(
        f["case"].split("w=")[1].split()[0]
        for f in rep.failures
        if f["case"].startswith("flag-truncation")
    )
    assert bad == ["35142", "35214", "35241", "35421"]


def test_run_all_and_exit_policy():
    reports = verify.run_all(4)
    names = [r.suite for r in reports]
    assert names == [
        "cauchy",
        "cauchy",
        "cauchy",
        "schur",
        "vexillary",
        "grassmannian",
        "factorization",
        "counterexamples",
        "conjectures",
    ]
    assert verify.exit_ok(reports)
    # conjecture findings never flip the aggregate outcome
    conj = [r for r in reports if r.suite == "conjectures"][0]
    assert not conj.ok
    # a fabricated failure in an identity suite does
    reports[0].failures.append({"case": "x", "expected": "1", "actual": "0"})
    assert not verify.exit_ok(reports)


def test_mutation_sensitivity():
    corrupted = parse("x1*x2 - q1")
    quantum.set_elementary_override(lambda k, r: corrupted if (k, r) == (2, 2) else None)
    try:
        quantum.clear_caches()
        rep = verify.suite_cauchy(3)
        assert not rep.ok
        assert any(f["case"] == "anchor e~_2(X_2)" for f in rep.failures)
    finally:
        quantum.set_elementary_override(None)
        quantum.clear_caches()
    assert verify.suite_cauchy(3).ok
