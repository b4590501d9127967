from __future__ import annotations

import csv
import json

import pytest

from cyclosemi.enumeration import (
    CensusReport,
    census_frobenius,
    census_record,
    cyclotomic_census,
    enumerate_all_with_frobenius,
    enumerate_symmetric_with_frobenius,
    length_from_betti,
    read_checkpoint,
    symmetric_masks,
    verify_conjectures,
)
from cyclosemi.errors import DomainError
from cyclosemi.semigroup import from_generators, is_symmetric

# symmetric semigroups per odd Frobenius number 1, 3, ..., 19
SYMMETRIC_COUNTS = [1, 1, 2, 3, 3, 6, 8, 7, 15, 20]


def gens_set(semigroups):
    return {S.minimal_generators for S in semigroups}


def test_brute_force_examples():
    assert gens_set(enumerate_all_with_frobenius(1)) == {(2, 3)}
    assert gens_set(enumerate_all_with_frobenius(2)) == {(3, 4, 5)}
    assert gens_set(enumerate_all_with_frobenius(3)) == {(2, 5), (4, 5, 6, 7)}
    with pytest.raises(DomainError):
        enumerate_all_with_frobenius(0)
    with pytest.raises(DomainError):
        enumerate_all_with_frobenius(40)


def test_brute_force_counts(brute_corpus):
    # the number of numerical semigroups with Frobenius number F
    known = [1, 1, 2, 2, 5, 4, 11, 10, 21, 22, 51, 40, 106, 103, 200, 205, 465, 405, 961]
    assert [len(brute_corpus[F]) for F in range(1, 20)] == known


def test_symmetric_examples():
    assert gens_set(enumerate_symmetric_with_frobenius(1)) == {(2, 3)}
    assert gens_set(enumerate_symmetric_with_frobenius(5)) == {(2, 7), (3, 4)}
    assert (4, 6, 7) in gens_set(enumerate_symmetric_with_frobenius(9))
    for F in (0, 4, -1):
        with pytest.raises(DomainError):
            list(symmetric_masks(F))


def test_backtracker_matches_brute_force(brute_corpus):
    for F in range(1, 20, 2):
        brute = {S.minimal_generators for S in brute_corpus[F] if is_symmetric(S)}
        fast = enumerate_symmetric_with_frobenius(F)
        assert gens_set(fast) == brute
        assert len(fast) == len(brute)
    assert [len(enumerate_symmetric_with_frobenius(F)) for F in range(1, 20, 2)] == SYMMETRIC_COUNTS


def test_backtracker_is_deterministic():
    assert list(symmetric_masks(31)) == list(symmetric_masks(31))


def test_census_small():
    report = cyclotomic_census(1)
    assert report.total_cyclotomic == 1 and report.counts == {1: 1}
    assert report.records[0]["min_gens"] == [2, 3]
    with pytest.raises(DomainError):
        cyclotomic_census(0)


def test_census_block_record_shape():
    block = census_frobenius(9)
    rec = next(r for r in block["records"] if r["min_gens"] == [4, 6, 7])
    assert rec["factors"] == [[12, 1], [14, 1]]
    assert rec["length"] == 2 and rec["ci"] and rec["betti"] == [12, 14]
    assert rec["classification"] == "PQ2QR(7,2,3)"
    assert rec["exponents"] == [[1, 1], [4, -1], [6, -1], [7, -1], [12, 1], [14, 1]]
    assert all(rec["checks"].values())
    assert length_from_betti(rec) == 2


def test_census_matches_direct_scan(cyclotomic_corpus):
    report = cyclotomic_census(40)
    assert {tuple(r["min_gens"]) for r in report.records} == {S.minimal_generators for S, _ in cyclotomic_corpus}
    lengths = {S.minimal_generators: fac.length for S, fac in cyclotomic_corpus}
    assert all(lengths[tuple(r["min_gens"])] == r["length"] for r in report.records)


def test_census_is_monotone(census70):
    small = cyclotomic_census(50)
    restricted = census70.restrict(50)
    assert small.per_frobenius == restricted.per_frobenius
    assert small.counts == restricted.counts


def test_resume_after_interruption(tmp_path):
    ckpt = tmp_path / "census.jsonl"
    full = cyclotomic_census(31, checkpoint=ckpt)
    lines = ckpt.read_text().splitlines()
    assert len(lines) == 16
    # keep the first few blocks and a torn line, as after a crash
    ckpt.write_text("\n".join(lines[:5]) + "\n" + lines[5][:30])
    seen = []
    resumed = cyclotomic_census(31, checkpoint=ckpt, resume=True, on_block=lambda b: seen.append(b["F"]))
    assert min(seen) > 9
    assert resumed.per_frobenius == full.per_frobenius
    assert set(read_checkpoint(ckpt)) == set(range(1, 32, 2))


def test_jobs_do_not_change_results():
    one = cyclotomic_census(33, jobs=1)
    two = cyclotomic_census(33, jobs=2)
    assert json.dumps(one.per_frobenius, sort_keys=True) == json.dumps(two.per_frobenius, sort_keys=True)


def test_conjectures_hold_up_to_30():
    results = verify_conjectures(30)
    assert all(r["verified"] and not r["counterexamples"] for r in results.values())
    assert verify_conjectures(9, ["C-length"])["C-length"]["verified"]
    with pytest.raises(DomainError):
        verify_conjectures(9, ["C9"])


def test_conjecture_results_report_counterexamples():
    block = census_frobenius(9)
    bad = json.loads(json.dumps(block))
    bad["records"][0]["checks"]["C-msg"] = False
    bad["ci_not_cyclotomic"] = [[9, 10, 11]]
    res = CensusReport(9, [bad]).conjecture_results()
    assert res["C-msg"]["counterexamples"] == [bad["records"][0]["min_gens"]]
    assert res["C1"]["counterexamples"] == [[9, 10, 11]]
    assert res["C-length"]["verified"]


def test_csv_and_summary(tmp_path):
    report = cyclotomic_census(15)
    path = tmp_path / "out.csv"
    report.write_csv(path)
    report.write_summary(tmp_path / "out.summary.json")
    with open(path) as fh:
        rows = list(csv.reader(fh, delimiter=";"))
    assert rows[0] == ["min_gens", "frobenius", "genus", "length", "ci", "classification"]
    assert len(rows) == report.total_cyclotomic + 1
    assert ["2,3", "1", "1", "1", "true", "PQ(2,3)"] in rows
    summary = json.loads((tmp_path / "out.summary.json").read_text())
    assert summary["total_cyclotomic"] == report.total_cyclotomic
    assert sum(summary["histogram"].values()) == report.total_cyclotomic


def test_table_format():
    table = cyclotomic_census(9).table()
    first, _, counts, total = table.splitlines()
    assert first.startswith("Length") and counts.startswith("Number of semigroups")
    assert total == f"Total: {cyclotomic_census(9).total_cyclotomic}"


def test_census_record_for_analysis_input():
    S = from_generators([4, 6, 7])
    rec = census_record(S, ((12, 1), (14, 1)))
    assert rec["min_gens"] == [4, 6, 7] and rec["frobenius"] == 9 and rec["genus"] == 5
