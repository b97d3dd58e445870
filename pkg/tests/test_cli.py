import json

import pytest

from nutorbits import (CirculantSpec, circulant, complete_graph, read_graph6,
                       is_nut, orbit_census, write_graph6)
from nutorbits.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_reports_nut_and_census(capsys):
    g6 = write_graph6(circulant(CirculantSpec(10, {1, 2})))
    code, out, _ = run_cli(capsys, "check", g6)
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == "nutorbits-report/1"
    assert report["nut"]["is_nut"] is True
    assert report["nut"]["kernel"] == [[1, -1, 1, -1, 1, -1, 1, -1, 1, -1]]
    assert (report["census"]["o_v"], report["census"]["o_e"],
            report["census"]["o_a"]) == (1, 2, 2)
    assert report["census"]["aut_order"] == 20


def test_check_k4_is_not_nut(capsys):
    code, out, _ = run_cli(capsys, "check", write_graph6(complete_graph(4)))
    assert code == 0
    report = json.loads(out)
    assert report["nut"]["is_nut"] is False and report["nut"]["nullity"] == 0


def test_check_malformed_input_exits_2(capsys):
    code, _, err = run_cli(capsys, "check", "A!")
    assert code == 2
    assert "byte offset" in err


def test_check_reads_files_and_multiple_lines(tmp_path, capsys):
    path = tmp_path / "graphs.g6"
    path.write_text(write_graph6(complete_graph(2)) + "\n"
                    + write_graph6(complete_graph(4)) + "\n")
    code, out, _ = run_cli(capsys, "check", "--file", str(path))
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["graph"]["order"] for r in rows] == [2, 4]


def test_report_round_trips_through_graph6(capsys):
    code, out, _ = run_cli(capsys, "construct", "--variant", "prop1",
                           "--k", "2", "--p", "5")
    assert code == 0
    report = json.loads(out)
    g = read_graph6(report["graph"]["graph6"])
    verdict = is_nut(g)
    census = orbit_census(g)
    assert verdict.is_nut == report["nut"]["is_nut"]
    assert verdict.nullity == report["nut"]["nullity"]
    assert [census.o_v, census.o_e, census.o_a] == [
        report["census"]["o_v"], report["census"]["o_e"], report["census"]["o_a"]]
    assert census.aut_order == report["census"]["aut_order"]


def test_construct_dispatch_and_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "construct", "--r", "3", "--k", "5")
    assert code == 0
    report = json.loads(out)
    assert report["census"]["o_v"] == 3 and report["census"]["o_e"] == 5

    code, _, err = run_cli(capsys, "construct", "--r", "3", "--k", "3")
    assert code == 3 and "k >= r + 1" in err

    code, _, err = run_cli(capsys, "construct", "--r", "2", "--k", "5")
    assert code == 3 and "prior construction" in err

    code, _, err = run_cli(capsys, "construct", "--variant", "prop1",
                           "--k", "2", "--p", "4")
    assert code == 3

    code, _, err = run_cli(capsys, "construct")
    assert code == 3


def test_construct_writes_graph_files(tmp_path, capsys):
    base = tmp_path / "out"
    code, out, _ = run_cli(capsys, "construct", "--variant", "fig3",
                           "--out", str(base))
    assert code == 0
    g6 = (tmp_path / "out.g6").read_text().strip()
    assert read_graph6(g6).n == 12
    dot = (tmp_path / "out.dot").read_text()
    assert dot.startswith("graph G {") and dot.count("--") == 48
    # one color per edge orbit
    report = json.loads(out)
    assert report["census"]["o_e"] == 5
    assert len({line.split('color="')[1] for line in dot.splitlines()
                if 'color="' in line}) == 5


def test_construct_subdiv_variant(capsys):
    code, out, _ = run_cli(capsys, "construct", "--variant", "subdiv",
                           "--k", "2", "--t", "1")
    assert code == 0
    report = json.loads(out)
    assert report["census"]["o_v"] == 3
    assert report["provenance"]["variant"] == "subdivided"
    assert report["provenance"]["base"]["variant"] == "prop1"


def test_sweep_prop1_six_rows(capsys):
    code, out, err = run_cli(capsys, "sweep", "--suite", "prop1", "--kmax", "6")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 6
    assert all(row["verified"] for row in rows)
    assert "0 failures" in err


def test_sweep_prop2_single_k(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--suite", "prop2", "--k", "5",
                           "--primes", "1")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 1 and rows[0]["order"] == 44 and rows[0]["verified"]


def test_sweep_cross_agrees_everywhere(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--suite", "circulant-cross",
                           "--nmax", "10")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 57   # sum over even n <= 10 of 2^(n/2) - 1
    assert all(row["symbolic"] == row["nullspace"] for row in rows)


def test_sweep_jobs_output_is_byte_identical(capsys):
    _, seq, _ = run_cli(capsys, "sweep", "--suite", "circulant-cross", "--nmax", "8")
    _, par, _ = run_cli(capsys, "sweep", "--suite", "circulant-cross", "--nmax", "8",
                        "--jobs", "3")
    assert seq == par


def test_sweep_cap_refusal(capsys, monkeypatch):
    monkeypatch.setenv("NUTORBITS_SWEEP_CAP", "6")
    code, _, err = run_cli(capsys, "sweep", "--suite", "circulant-cross",
                           "--nmax", "10")
    assert code == 4 and "capped" in err


def test_check_human_output(capsys):
    g6 = write_graph6(circulant(CirculantSpec(10, {1, 2})))
    code, out, _ = run_cli(capsys, "check", g6, "--human")
    assert code == 0
    assert "is_nut         True" in out
    assert "o_v=1 o_e=2 o_a=2" in out
