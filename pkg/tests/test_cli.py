"""Driver: suites, report formats, determinism, exit codes, dumps."""

import json

import pytest

from igq.cli import main, run_dcat_suite, run_qh_suite
from igq.poly import load_generators
from igq.presentations import ab_ring
from igq.report import (
    CheckResult,
    check,
    emit_json,
    emit_markdown,
    informational,
    summarize,
)


def test_qh_suite_full_run_n3():
    rows = run_qh_suite(3)
    assert len(rows) >= 7
    assert all(r.status == "PASS" for r in rows), [
        (r.claim_id, r.computed) for r in rows if r.status != "PASS"
    ]
    spectrum = [r for r in rows if r.claim_id == "spectrum.n=3"]
    assert spectrum and spectrum[0].computed == "(12, 1, 2, 10, 10)"


def test_qh_suite_single_check():
    rows = run_qh_suite(2, checks=("spectrum",))
    assert len(rows) == 1
    assert rows[0].computed == "(4, 0, 1, 3, 3)"


def test_qh_suite_empty_check_list():
    assert run_qh_suite(3, checks=()) == []


def test_qh_suite_range_guard():
    with pytest.raises(ValueError):
        run_qh_suite(1)
    with pytest.raises(ValueError):
        run_qh_suite(6, max_n=5)


def test_dcat_suite_keyext():
    rows = run_dcat_suite(3, "igr", checks=("keyext",))
    assert len(rows) == 1
    assert rows[0].status == "PASS" and rows[0].computed == "C[3]"


def test_dcat_suite_residual_statuses():
    rows = run_dcat_suite(2, "gr", checks=("residual",))
    asserted = [r for r in rows if "i=2.j=1" in r.claim_id]
    assert asserted and asserted[0].status == "PASS"
    informative = [r for r in rows if r.status == "INCONCLUSIVE"]
    assert all(".i=" in r.claim_id for r in informative)
    # informational rows appear only in the i <= j direction
    for r in informative:
        i = int(r.claim_id.split("i=")[1].split(".")[0])
        j = int(r.claim_id.split("j=")[1])
        assert i <= j


def test_dcat_suite_lefschetz_counts():
    rows = run_dcat_suite(2, "igr", checks=("lefschetz",))
    assert rows[0].status == "PASS"
    assert "4 objects" in rows[0].note


def test_check_result_invariant():
    with pytest.raises(ValueError):
        CheckResult("x", "1", "2", "PASS")
    with pytest.raises(ValueError):
        CheckResult("x", "1", "1", "FAIL")
    with pytest.raises(ValueError):
        CheckResult("x", "1", "1", "MAYBE")


def test_summarize_counts():
    rows = [check("a", 1, 1), check("b", 1, 2), informational("c", "p")]
    assert summarize(rows) == {"pass": 1, "fail": 1, "inconclusive": 1}


def test_json_is_deterministic_and_free_of_timing():
    rows = run_qh_suite(2, checks=("spectrum", "regularity"))
    doc1 = emit_json(rows, "0.1.0", {"command": "qh", "n": 2})
    doc2 = emit_json(
        run_qh_suite(2, checks=("spectrum", "regularity")),
        "0.1.0",
        {"command": "qh", "n": 2},
    )
    assert doc1 == doc2
    parsed = json.loads(doc1)
    assert set(parsed) == {"tool_version", "invocation", "rows", "summary"}
    assert all("millis" not in row for row in parsed["rows"])
    ids = [row["claim_id"] for row in parsed["rows"]]
    assert ids == sorted(ids)


def test_markdown_contains_summary_line():
    rows = run_qh_suite(2, checks=("regularity",))
    md = emit_markdown(rows, "0.1.0", {"command": "qh"})
    assert "| regularity.corank.n=2 | 1 | 1 | PASS |" in md
    assert "summary: 1 pass, 0 fail, 0 inconclusive" in md


def test_main_exit_codes_and_output(capsys):
    code = main(["qh", "--n", "2", "--check", "regularity", "--format", "json"])
    out = capsys.readouterr().out
    assert code == 0
    assert json.loads(out)["summary"]["fail"] == 0
    assert main(["qh", "--n", "2", "--check", "bogus"]) == 2


def test_main_byte_identical_json(capsys):
    main(["qh", "--n", "2", "--check", "spectrum,zcount"])
    first = capsys.readouterr().out
    main(["qh", "--n", "2", "--check", "spectrum,zcount"])
    second = capsys.readouterr().out
    assert first == second


def test_dump_writes_presentations(tmp_path, capsys):
    code = main(
        ["qh", "--n", "2", "--check", "dims", "--dump", str(tmp_path), "--format", "md"]
    )
    capsys.readouterr()
    assert code == 0
    gens_file = tmp_path / "ig_n2_quantum_ii.gens.txt"
    gb_file = tmp_path / "ig_n2_quantum_ii.gb.txt"
    assert gens_file.exists() and gb_file.exists()
    text = gens_file.read_text()
    assert text.splitlines()[0] == "# IG(2,4) variant=QUANTUM_II q=1"
    ring = ab_ring(2)
    gens = load_generators(ring, text)
    a1, a2 = ring.var("a1"), ring.var("a2")
    assert gens == [2 * a2 - a1**2, a2**2 + a1]


def test_dcat_cli_gr(capsys):
    code = main(["dcat", "--k", "2", "--space", "gr", "--check", "lefschetz,euler"])
    out = capsys.readouterr().out
    assert code == 0
    parsed = json.loads(out)
    ids = [r["claim_id"] for r in parsed["rows"]]
    assert "lefschetz.G(2,4)" in ids and "lefschetz.G(2,5)" in ids
    assert parsed["summary"]["fail"] == 0
