import json
import subprocess
import sys

import pytest

from dezagraphs.cli import (
    EXIT_BAD_GRAPH,
    EXIT_BAD_PARAMETERS,
    EXIT_BOUND,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    run,
)
from dezagraphs.families import petersen
from dezagraphs.graph6 import from_graph6, to_graph6


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def build(tmp_path, capsys, name, *argv):
    code, out, _ = call(capsys, *argv)
    assert code == EXIT_OK
    path = tmp_path / name
    path.write_text(out)
    return path


def test_construct_triangular_5(capsys):
    code, out, _ = call(capsys, "construct", "--family", "triangular", "--n", "5")
    graph6, labels = out.splitlines()
    assert code == EXIT_OK
    assert from_graph6(graph6).n == 10
    assert json.loads(labels)[0] == "{1,2}"


def test_construct_is_byte_identical(capsys):
    first = call(capsys, "construct", "--family", "chang", "--n", "2", "--complement")
    second = call(capsys, "construct", "--family", "chang", "--n", "2", "--complement")
    assert first == second


def test_construct_label_sidecar(tmp_path, capsys):
    side = tmp_path / "labels.json"
    code, _, _ = call(capsys, "construct", "--family", "lattice", "--n", "3", "--labels", str(side))
    assert code == EXIT_OK and json.loads(side.read_text())[4] == "(2,2)"


def test_classify_deza_output(tmp_path, capsys):
    g = build(tmp_path, capsys, "t6.g6", "deza", "--family", "triangular", "--n", "6", "--auto", "pair")
    code, out, _ = call(capsys, "classify", "--input", str(g))
    doc = json.loads(out)
    assert code == EXIT_OK and doc["schema_version"] == 1
    assert doc["deza"] == {"v": 15, "k": 6, "b": 3, "a": 1, "strict": True}
    assert doc["srg"] is None
    assert not doc["edge_regular"] and not doc["co_edge_regular"]


def test_classify_srg_spectrum(tmp_path, capsys):
    g = build(tmp_path, capsys, "s.g6", "construct", "--family", "schlafli-complement")
    doc = json.loads(call(capsys, "classify", "--input", str(g))[1])
    assert doc["srg"] == {"v": 27, "k": 10, "lambda": 1, "mu": 5, "spectrum": {"k": 10, "r": 1, "s": -5}}


def test_census(capsys):
    code, out, _ = call(capsys, "census", "--family", "clebsch")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["count"] == 2 and doc["classes"] == [20, 10]
    assert all(isinstance(c, list) and len(c) == 2 for rep in doc["representatives"] for c in rep)


def test_census_as_is(capsys):
    doc = json.loads(call(capsys, "census", "--family", "lattice", "--n", "3", "--as-is")[1])
    assert doc["count"] == 1 and not doc["complemented"]


@pytest.mark.parametrize(
    "auto,expected",
    [
        ("i=2", (25, 16, 12, 9)),
        ("class=1", (25, 16, 12, 9)),
        ("cycles=(1,1)-(2,1);(1,2)-(2,2);(1,3)-(2,3);(1,4)-(2,4);(1,5)-(2,5)", (25, 16, 12, 9)),
        ("cycles=0-5;1-6;2-7;3-8;4-9", (25, 16, 12, 9)),
    ],
)
def test_deza_specs(tmp_path, capsys, auto, expected):
    g = build(tmp_path, capsys, "d.g6", "deza", "--family", "lattice", "--n", "5", "--auto", auto)
    doc = json.loads(call(capsys, "classify", "--input", str(g))[1])["deza"]
    assert (doc["v"], doc["k"], doc["b"], doc["a"]) == expected and doc["strict"]


def test_kappa_certificate(tmp_path, capsys):
    g = build(tmp_path, capsys, "l.g6", "deza", "--family", "lattice", "--n", "4", "--auto", "i=1")
    cert = tmp_path / "cert.json"
    code, out, _ = call(capsys, "kappa", "--input", str(g), "--certificate", str(cert), "--expect", "8")
    doc = json.loads(cert.read_text())
    assert code == EXIT_OK and json.loads(out) == doc
    assert doc["kappa"] == 8 and len(doc["cut"]) == 8 and len(doc["paths"]) == 8 and len(doc["pair"]) == 2


def test_kappa_expectation_failure(tmp_path, capsys):
    g = build(tmp_path, capsys, "p.g6", "construct", "--family", "petersen")
    assert call(capsys, "kappa", "--input", str(g), "--expect", "4")[0] == EXIT_CHECK_FAILED


def test_kappa_bound(tmp_path, capsys):
    g = build(tmp_path, capsys, "p.g6", "construct", "--family", "lattice", "--n", "5")
    assert call(capsys, "kappa", "--input", str(g), "--max-kappa-vertices", "20")[0] == EXIT_BOUND


def test_verify_proof(tmp_path, capsys):
    report = tmp_path / "r.json"
    code, out, _ = call(capsys, "verify-proof", "--theorem", "T", "--n", "8", "--json", str(report))
    full = json.loads(report.read_text())
    assert code == EXIT_OK and full["passed"]
    assert full["sweeps"][0]["kappa"] == 15 and full["sweeps"][0]["records"]
    assert "records" not in json.loads(out)["sweeps"][0]


def test_verify_proof_all_i(capsys):
    code, out, _ = call(capsys, "verify-proof", "--theorem", "L", "--n", "6")
    doc = json.loads(out)
    assert code == EXIT_OK and [s["i"] for s in doc["sweeps"]] == [1, 2, 3]
    assert all(s["kappa"] == 24 for s in doc["sweeps"])


def test_second_neighbourhood(tmp_path, capsys):
    g = build(tmp_path, capsys, "t7.g6", "deza", "--family", "triangular", "--n", "7", "--auto", "pair")
    doc = json.loads(call(capsys, "second-nbhd", "--input", str(g), "--vertex", "{1,2}")[1])
    row = doc["vertices"][0]
    assert row["vertex"] == "{1,2}" and len(row["components"]) == 2 and row["all_cliques"]
    every = json.loads(call(capsys, "second-nbhd", "--input", str(g))[1])["vertices"]
    assert sum(len(r["components"]) == 1 for r in every) == 20


def test_stdin_input(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("I~qkzXZLw\n"))
    doc = json.loads(call(capsys, "classify", "--input", "-")[1])
    assert doc["srg"]["k"] == 6


class TestExitCodes:
    def test_unknown_flag(self, capsys):
        assert call(capsys, "construct", "--family", "petersen", "--bogus")[0] == EXIT_USAGE

    def test_unknown_family(self, capsys):
        assert call(capsys, "construct", "--family", "heawood")[0] == EXIT_USAGE

    def test_malformed_graph6(self, tmp_path, capsys):
        bad = tmp_path / "bad.g6"
        bad.write_text("not graph6!\n")
        code, _, err = call(capsys, "classify", "--input", str(bad))
        assert code == EXIT_BAD_GRAPH and "error" in err

    def test_label_count_mismatch(self, tmp_path, capsys):
        bad = tmp_path / "bad.g6"
        bad.write_text('I~qkzXZLw\n["a", "b"]\n')
        assert call(capsys, "classify", "--input", str(bad))[0] == EXIT_BAD_GRAPH

    def test_infeasible_parameters(self, capsys):
        assert call(capsys, "construct", "--family", "triangular", "--n", "3")[0] == EXIT_BAD_PARAMETERS
        assert call(capsys, "deza", "--family", "lattice", "--n", "5", "--auto", "i=3")[0] == EXIT_BAD_PARAMETERS
        assert call(capsys, "deza", "--family", "lattice", "--n", "5", "--auto", "pair")[0] == EXIT_BAD_PARAMETERS
        assert call(capsys, "deza", "--family", "lattice", "--n", "5", "--auto", "i=x")[0] == EXIT_BAD_PARAMETERS

    def test_construction_error(self, capsys):
        # an automorphism that is not a delta-automorphism of the complement
        code = call(capsys, "deza", "--family", "lattice", "--n", "3", "--auto", "cycles=0-1")[0]
        assert code == EXIT_BAD_PARAMETERS

    def test_bound_exceeded(self, capsys):
        assert call(capsys, "census", "--family", "lattice", "--n", "6")[0] == EXIT_BOUND

    def test_missing_file(self, capsys):
        assert call(capsys, "classify", "--input", "/nonexistent/g.g6")[0] == EXIT_USAGE


def test_paper_suite_small(capsys):
    code, out, _ = call(capsys, "paper-suite", "--max-n", "6")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["passed"] and doc["schema_version"] == 1
    assert {c["id"] for c in doc["checks"]} >= {"triangular-kappa", "lattice-kappa", "census", "lattice-3x3"}


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-c", "from dezagraphs.cli import main; main()", "construct", "--family", "petersen"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == to_graph6(petersen())
