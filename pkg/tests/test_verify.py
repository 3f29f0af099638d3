"""Suite records, canonical report serialization, and thread determinism."""

import csv
import io
import json

import pytest

from rotsym.verify import (
    EXPECTED_SUBFAMILY_SPECTRUM_6,
    EXPECTED_ZERO_VALUES,
    report_to_csv,
    report_to_json,
    run_suite,
)


def by_id(report):
    return {r.check_id: r for r in report.records}


def test_tables_suite_passes():
    rep = run_suite("tables", 10)
    assert rep.passed
    assert [r.check_id for r in rep.records] == [
        "zero-value-table",
        "subfamily-spectrum-table-n6",
    ]


def test_expected_tables_shape():
    assert EXPECTED_ZERO_VALUES == {
        3: 6, 4: 8, 5: 20, 6: 28, 7: 56, 8: 96, 9: 168, 10: 304,
    }
    assert len(EXPECTED_SUBFAMILY_SPECTRUM_6) == 64
    assert EXPECTED_SUBFAMILY_SPECTRUM_6[0] == (36, 28, 28, 4)
    assert EXPECTED_SUBFAMILY_SPECTRUM_6[21] == (4, 4, 4, 4)
    assert EXPECTED_SUBFAMILY_SPECTRUM_6[63] == (4, -4, -4, 20)


def test_theorem_suite_reports_the_small_exception():
    # the strict spectral gap has one genuine counterexample, at four variables
    rep = run_suite("theorem", 8)
    recs = by_id(rep)
    assert not rep.passed
    failing = [r.check_id for r in rep.records if not r.ok]
    assert failing == ["theorem-strict-max-n4"]
    assert "mask=15" in recs["theorem-strict-max-n4"].witness
    assert recs["theorem-strict-max-n5"].ok


def test_lemmas_suite_records():
    rep = run_suite("lemmas", 10)
    recs = by_id(rep)
    assert recs["subfamily-engine-vs-bruteforce"].ok
    assert recs["case-table-vs-restricted-oracle"].ok
    assert recs["zero-value-sandwich"].ok
    quarter = recs["subfamily-quarter-bound"]
    assert not quarter.ok
    assert "n=3 family=F3 mask=7" in quarter.witness
    assert "n=4" in quarter.witness


def test_lemmas_suite_skips_below_thresholds():
    rep = run_suite("lemmas", 4)
    recs = by_id(rep)
    assert recs["case-table-vs-restricted-oracle"].ok
    assert recs["case-table-vs-restricted-oracle"].detail.startswith("skipped")
    assert recs["subfamily-quarter-bound"].detail.startswith("skipped")


def test_recurrences_suite_passes():
    rep = run_suite("recurrences", 10)
    assert rep.passed
    ids = [r.check_id for r in rep.records]
    assert ids == [
        "alternate-zero-recurrence",
        "weight-identity",
        "sequences-vs-fwht",
        "point-eval-at-scale",
    ]


def test_run_suite_all_concatenates_in_order():
    rep = run_suite("all", 8)
    ids = [r.check_id for r in rep.records]
    assert ids[0] == "zero-value-table"
    assert ids.index("theorem-strict-max-n3") < ids.index("subfamily-engine-vs-bruteforce")
    assert ids.index("subfamily-engine-vs-bruteforce") < ids.index("alternate-zero-recurrence")
    assert not rep.passed  # carries the theorem exception


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope", 10)


def test_json_report_is_canonical():
    rep = run_suite("tables", 10)
    text = report_to_json(rep)
    data = json.loads(text)
    assert data["suite"] == "tables"
    assert data["passed"] is True
    assert data["totals"] == {"pass": 2, "fail": 0}
    assert [c["id"] for c in data["checks"]] == [
        "zero-value-table",
        "subfamily-spectrum-table-n6",
    ]
    # canonical form: sorted keys, trailing newline, stable bytes
    assert text == report_to_json(run_suite("tables", 10))
    assert text.endswith("\n")
    assert json.dumps(data, sort_keys=True, indent=2) + "\n" == text


def test_csv_report_is_canonical():
    rep = run_suite("tables", 10)
    text = report_to_csv(rep)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["check_id", "n_lo", "n_hi", "status", "detail", "witness"]
    assert rows[1][0] == "zero-value-table"
    assert rows[1][3] == "pass"
    assert text == report_to_csv(run_suite("tables", 10))
    assert not text.endswith("\n\n")


def test_thread_count_does_not_change_output():
    base = report_to_json(run_suite("all", 12, threads=1))
    for threads in (2, 5):
        assert report_to_json(run_suite("all", 12, threads=threads)) == base
