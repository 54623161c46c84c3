import csv
import io
import json

import pytest

from fqhyper.verify import (CheckRecord, GridConfig, Report, run_suite,
                            select_families)


def test_select_families():
    assert select_families(("all",)) == select_families(())
    assert select_families(("thm-1.2",)) == ["thm-1.2"]
    assert set(select_families(("lem",))) == {
        "lem-2.1", "lem-2.2", "lem-2.3", "lem-2.5", "lem-2.7", "lem-2.8",
        "lem-4.1", "lem-5.1", "lem-5.2"}
    assert select_families(("thm-1.3",)) == ["thm-1.1"]  # sibling family
    with pytest.raises(ValueError):
        select_families(("nope",))


def test_skip_rows_have_reasons():
    rep = run_suite(GridConfig(suites=("thm-1.9",), pmax=11))
    by_p = {r.params["p"]: r for r in rep.records}
    assert by_p[5].status == "pass"
    assert by_p[11].status == "pass"
    assert by_p[7].status == "skip" and "q = 1 mod 3" in by_p[7].note
    assert by_p[3].status == "skip" and "p > 3" in by_p[3].note
    assert rep.failed == 0


def test_single_family_filtering():
    rep = run_suite(GridConfig(suites=("thm-1.3",), pmax=5, rmax=1, dmax=6))
    assert rep.records, "expected some records"
    assert all(r.check == "thm-1.3" for r in rep.records)


def test_report_serializations():
    rep = run_suite(GridConfig(suites=("sum-phi",), pmax=7, rmax=1))
    payload = json.loads(rep.to_json())
    assert set(payload) == {"config", "summary", "records"}
    assert payload["summary"]["fail"] == 0
    assert all("wall_ms" not in rec for rec in payload["records"])
    payload_t = json.loads(rep.to_json(timings=True))
    assert all("wall_ms" in rec for rec in payload_t["records"])
    rows = list(csv.reader(io.StringIO(rep.to_csv())))
    assert rows[0] == ["check", "params", "status", "lhs", "rhs",
                       "precision", "note"]
    assert len(rows) == len(rep.records) + 1
    plain = rep.to_plain()
    assert plain.strip().endswith("skip=0")


def test_thread_count_does_not_change_bytes():
    cfg1 = GridConfig(suites=("lem-2.8", "sum-phi", "thm-1.9"), pmax=11,
                      threads=1)
    cfg4 = GridConfig(suites=("lem-2.8", "sum-phi", "thm-1.9"), pmax=11,
                      threads=4)
    assert run_suite(cfg1).to_json() == run_suite(cfg4).to_json()


def test_record_sorting_is_numeric():
    recs = [CheckRecord("x", {"p": 11}, "pass"),
            CheckRecord("x", {"p": 3}, "pass")]
    rep = Report({}, sorted(recs, key=CheckRecord.sort_key))
    assert rep.records[0].params["p"] == 3


def test_exit_status_semantics():
    rep = run_suite(GridConfig(suites=("orthogonality",), pmax=5, rmax=1))
    assert rep.failed == 0
    # fabricate a failure to check the counter
    rep.records.append(CheckRecord("orthogonality", {"p": 0}, "fail"))
    assert rep.failed == 1
