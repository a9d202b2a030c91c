import json

import pytest

from central_parts import generators
from central_parts.cli import main
from central_parts.generators import GSTAR_EDGES
from central_parts.graph import Graph, parse_edge_list, serialize


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def gstar_file(tmp_path):
    p = tmp_path / "gstar.txt"
    p.write_text("# G*\n" + serialize(generators.fixture_gstar()))
    return p


def test_compute_gstar(capsys, gstar_file):
    code, out, _ = run(capsys, "compute", "--input", str(gstar_file))
    assert code == 0
    rep = json.loads(out)
    assert rep["parts"]["center"] == ["12", "13", "4", "5"]
    assert rep["parts"]["median"] == ["13", "4"]
    assert rep["parts"]["characteristic_center"] == ["11", "12", "5", "6"]
    assert set(rep["parts"]) == {
        "center", "median", "security_center", "characteristic_center", "subgraph_core", "core_vertices"
    }
    assert rep["n"] == 15 and rep["m"] == 17 and rep["fiedler_multiplicity"] == 1
    assert rep["count_mode"] == "induced"
    assert "timings_ms" not in rep


def test_compute_parts_subset(capsys):
    code, out, _ = run(capsys, "compute", "--gen", "path:6", "--parts", "center,median")
    assert code == 0
    assert json.loads(out)["parts"] == {"center": ["3", "4"], "median": ["3", "4"]}


def test_compute_large_graph_skips_counting(capsys, monkeypatch):
    monkeypatch.delenv("CENTRAL_PARTS_CAP", raising=False)
    code, out, _ = run(capsys, "compute", "--gen", "path:30")
    assert code == 0
    parts = json.loads(out)["parts"]
    assert parts["subgraph_core"] == "skipped(cap)"
    assert parts["core_vertices"] == "skipped(cap)"
    assert parts["center"] == ["15", "16"]


def test_compute_edge_mode_and_timings(capsys):
    code, out, _ = run(capsys, "compute", "--gen", "cycle:5", "--mode", "edge", "--timings")
    rep = json.loads(out)
    assert code == 0 and rep["count_mode"] == "edge"
    assert rep["parts"]["core_vertices"] == ["1", "2", "3", "4", "5"]
    assert "pair_counts" in rep["timings_ms"]


def test_compute_is_byte_identical(capsys, gstar_file):
    first = run(capsys, "compute", "--input", str(gstar_file))[1]
    second = run(capsys, "compute", "--input", str(gstar_file))[1]
    assert first == second


def test_compute_table(capsys):
    code, out, _ = run(capsys, "compute", "--gen", "star:5", "--format", "table")
    assert code == 0
    assert any(line.startswith("center") and line.endswith("{v}") for line in out.splitlines())


def test_stdin_input(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("a b\nb c\n"))
    code, out, _ = run(capsys, "compute", "--input", "-", "--parts", "center")
    assert code == 0 and json.loads(out)["parts"]["center"] == ["b"]


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--gen", "path:0"],
        ["compute", "--gen", "nonsense:3"],
        ["compute"],
        ["compute", "--gen", "path:4", "--parts", "middle"],
        ["compute", "--input", "/nonexistent/file.txt"],
        ["verify", "--check", "nope"],
        ["scan"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_parse_error_names_line(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("a b\nc c\n")
    code, _, err = run(capsys, "compute", "--input", str(p))
    assert code == 2 and "line 2" in err


def test_disconnected_exit_3(capsys, tmp_path):
    p = tmp_path / "two.txt"
    p.write_text("a b\nc d\n")
    code, out, err = run(capsys, "compute", "--input", str(p))
    assert code == 3 and out == "" and "not connected" in err


def test_verify_all_pass(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "7/7 checks passed" in out
    assert "FAIL" not in out


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0
    assert out.split() == [
        "gstar.metric", "gstar.spectral", "broom", "closed_forms.path_star",
        "vertex_transitive", "c4.eigenspace", "gch",
    ]


def test_verify_negative_control(capsys, monkeypatch):
    edges = [(12, 8) if e == (12, 13) else e for e in GSTAR_EDGES]
    monkeypatch.setattr(generators, "fixture_gstar", lambda: Graph.from_edges(range(1, 16), edges))
    code, out, _ = run(capsys, "verify", "--check", "gstar.spectral")
    assert code == 1
    assert "FAIL  gstar.spectral" in out
    assert "characteristic_center: expected ['11', '12', '5', '6']" in out


def test_gch_json(capsys):
    code, out, _ = run(capsys, "gch", "--gen", "path:3")
    rep = json.loads(out)
    assert code == 0
    assert rep["characteristic_center"] == ["1", "2", "3"]
    assert rep["characteristic_center_is_input"] is True
    assert rep["fiedler_multiplicity"] == 1
    assert rep["mu_error"] <= 1e-9 and rep["expected_fiedler_residual"] <= 1e-9
    assert (rep["gch_n"], rep["gch_m"]) == (7, 2 + 8)


def test_gch_accepts_disconnected_and_emits_edges(capsys, tmp_path):
    p = tmp_path / "two.txt"
    p.write_text("a b\nc d\n")
    code, out, _ = run(capsys, "gch", "--input", str(p), "--emit", "edges")
    assert code == 0
    h = parse_edge_list(out)
    assert (h.n, h.m) == (8, 2 + 2 * 4 + 2)
    assert h.is_connected()


def test_scan_deterministic(capsys):
    argv = ["scan", "--random", "20", "--n", "10", "--seed", "7"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first[0] == 0 and first[1] == second[1]
    rep = json.loads(first[1])
    assert rep["summary"]["samples"] == 20
    assert rep["summary"]["theorem_violations"] == 0
    assert [s["index"] for s in rep["samples"]] == list(range(20))
    assert rep != json.loads(run(capsys, "scan", "--random", "20", "--n", "10", "--seed", "8")[1])


def test_scan_parallel_matches_serial(capsys):
    serial = run(capsys, "scan", "--random", "6", "--trees", "6", "--n", "8", "--seed", "3")[1]
    par = json.loads(run(capsys, "scan", "--random", "6", "--trees", "6", "--n", "8", "--seed", "3", "--jobs", "2")[1])
    assert json.loads(serial)["samples"] == par["samples"]


def test_scan_trees(capsys):
    code, out, err = run(capsys, "scan", "--trees", "100", "--n", "12", "--seed", "1")
    rep = json.loads(out)
    assert code == 0 and err == ""
    assert sum(rep["summary"]["block_violations"].values()) == 0
    assert rep["counterexamples"] == []


def test_scan_cycles_are_full(capsys):
    code, out, _ = run(capsys, "scan", "--gen", "cycle:5", "--gen", "cycle:8")
    rep = json.loads(out)
    assert code == 0
    for s in rep["samples"]:
        assert len(s["equals_vertex_set"]) == 6
    assert rep["summary"]["equals_vertex_set"]["characteristic_center"] == 2


def test_scan_bad_gen(capsys):
    code, _, err = run(capsys, "scan", "--gen", "cycle:2")
    assert code == 2 and "error" in err
