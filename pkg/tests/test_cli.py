"""Command line interface: reports, determinism, exit codes."""

import json

import pytest

from cases import BENCH1_CERT, BENCH1_EDGES
from edgeideals.cli import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_PRECONDITION,
    EXIT_VERIFY_FAILED,
    main,
)


@pytest.fixture
def graph_file(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("".join(f"{u} {v}\n" for u, v in BENCH1_EDGES))
    return str(f)


def test_analyze_human(graph_file, capsys):
    assert main(["analyze", graph_file]) == EXIT_OK
    out = capsys.readouterr().out
    assert "big height: 5" in out and "rank 1" in out


def test_analyze_json_deterministic(graph_file, capsys):
    assert main(["analyze", graph_file, "--json"]) == EXIT_OK
    first = capsys.readouterr().out
    assert main(["analyze", graph_file, "--json"]) == EXIT_OK
    second = capsys.readouterr().out
    assert first == second  # byte-identical reports
    d = json.loads(first)
    assert d["covers"]["big_height"] == 5
    assert d["cycles"] == {"count": 1, "pairwise_disjoint": True, "cycle_rank": 1}
    assert "elapsed" not in first


def test_construct_verify_roundtrip(graph_file, tmp_path, capsys):
    cert = tmp_path / "cert.json"
    assert main(["construct", graph_file, "--out", str(cert)]) == EXIT_OK
    capsys.readouterr()
    assert main(["verify", graph_file, str(cert)]) == EXIT_OK
    assert "PASS" in capsys.readouterr().out
    d = json.loads(cert.read_text())
    assert d["bound"] == 6 and len(d["generators"]) <= 6


def test_verify_plain_text_certificate(graph_file, tmp_path, capsys):
    cert = tmp_path / "gens.txt"
    cert.write_text("\n".join(BENCH1_CERT) + "\n")
    assert main(["verify", graph_file, str(cert)]) == EXIT_OK
    bad = tmp_path / "bad.txt"
    bad.write_text("\n".join(BENCH1_CERT[:-1]) + "\n")
    assert main(["verify", graph_file, str(bad)]) == EXIT_VERIFY_FAILED
    out = capsys.readouterr().out
    assert "FAIL" in out


def test_verify_json_report(graph_file, tmp_path, capsys):
    cert = tmp_path / "gens.txt"
    cert.write_text("\n".join(BENCH1_CERT) + "\n")
    assert main(["verify", graph_file, str(cert), "--json"]) == EXIT_OK
    d = json.loads(capsys.readouterr().out)
    assert d["ok"] is True and d["n_generators"] == 6


def test_parse_error_exit_code(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("a b c\n")
    assert main(["analyze", str(f)]) == EXIT_PARSE
    assert "parse error" in capsys.readouterr().err


def test_precondition_exit_code(tmp_path, capsys):
    f = tmp_path / "shared.txt"
    f.write_text("a b\nb c\nc a\na d\nd e\ne a\n")
    assert main(["construct", str(f)]) == EXIT_PRECONDITION
    assert "precondition" in capsys.readouterr().err


def test_budget_exit_code(graph_file, capsys):
    assert main(["construct", graph_file, "--budget", "2"]) == EXIT_BUDGET
    assert "budget" in capsys.readouterr().err


def test_bad_jobs_rejected(graph_file, capsys):
    assert main(["analyze", graph_file, "--jobs", "0"]) == EXIT_PRECONDITION
    capsys.readouterr()


def test_selftest(capsys):
    assert main(["selftest", "--seed", "1"]) == EXIT_OK
    assert "checks passed" in capsys.readouterr().out
