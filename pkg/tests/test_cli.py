"""End-to-end command-line behavior via main(argv) return codes."""

import json

import pytest

from haddiag.cli import main, zoo8
from haddiag.data import load
from haddiag.graphs import canonical_form
from haddiag.hadamard import sylvester
from haddiag.io_formats import emit_sloane, read_results


def write_matrix(path, mat):
    path.write_text(emit_sloane(mat), encoding="utf-8")
    return str(path)


def test_validate(tmp_path, capsys):
    good = write_matrix(tmp_path / "had.4", sylvester(2))
    assert main(["validate", good]) == 0
    out = capsys.readouterr().out
    assert "had.4: ok order 4 digest" in out

    bad = tmp_path / "bad.txt"
    bad.write_text("++x+\n", encoding="utf-8")
    assert main(["validate", str(bad)]) == 3
    assert "invalid" in capsys.readouterr().out

    assert main(["validate", str(tmp_path / "nope")]) == 3
    assert "unreadable" in capsys.readouterr().out

    # one bad file poisons the batch, but every file is still reported
    assert main(["validate", good, str(bad)]) == 3
    out = capsys.readouterr().out
    assert "ok order 4" in out and "invalid" in out


def test_validate_multi_matrix_file(tmp_path, capsys):
    path = tmp_path / "pair"
    path.write_text(emit_sloane([sylvester(2), sylvester(2)]), encoding="utf-8")
    assert main(["validate", str(path)]) == 0
    out = capsys.readouterr().out
    assert "pair#0: ok order 4" in out and "pair#1: ok order 4" in out


def test_enumerate_writes_results(tmp_path, capsys):
    write_matrix(tmp_path / "had.4", sylvester(2))
    write_matrix(tmp_path / "had.8", sylvester(3))
    out_dir = tmp_path / "res"
    assert main(["enumerate", str(tmp_path / "had.4"), str(tmp_path / "had.8"),
                 "--out", str(out_dir)]) == 0
    printed = capsys.readouterr().out
    assert "had.4: 4 graphs" in printed and "had.8: 10 graphs" in printed
    doc = read_results(out_dir / "had.4.json")
    assert doc["order"] == 4 and len(doc["graphs"]) == 4
    assert doc["counters"] == {"leaves": 8, "pruned": 0, "accepted": 8}
    doc8 = read_results(out_dir / "had.8.json")
    assert doc8["order"] == 8 and len(doc8["graphs"]) == 10


def test_enumerate_directory_input(tmp_path):
    src = tmp_path / "mats"
    src.mkdir()
    write_matrix(src / "had.4", sylvester(2))
    out_dir = tmp_path / "res"
    assert main(["enumerate", str(src), "--out", str(out_dir)]) == 0
    assert (out_dir / "had.4.json").is_file()


def test_enumerate_brute_force_agrees(tmp_path):
    write_matrix(tmp_path / "had.12", load("had.12"))
    a, b = tmp_path / "dfs", tmp_path / "brute"
    assert main(["enumerate", str(tmp_path / "had.12"), "--out", str(a)]) == 0
    assert main(["enumerate", str(tmp_path / "had.12"), "--brute-force", "--out", str(b)]) == 0
    da = read_results(a / "had.12.json")
    db = read_results(b / "had.12.json")
    assert da["graphs"] == db["graphs"]
    assert da["counters"]["accepted"] == db["counters"]["accepted"] == 24
    assert db["counters"]["leaves"] == 2**11


def test_enumerate_jobs_deterministic(tmp_path):
    src = tmp_path / "mats"
    src.mkdir()
    write_matrix(src / "had.4", sylvester(2))
    write_matrix(src / "had.8", sylvester(3))
    one, two = tmp_path / "j1", tmp_path / "j2"
    assert main(["enumerate", str(src), "--out", str(one)]) == 0
    assert main(["enumerate", str(src), "--jobs", "2", "--out", str(two)]) == 0
    for name in ("had.4.json", "had.8.json"):
        assert (one / name).read_bytes() == (two / name).read_bytes()


def test_enumerate_missing_input(tmp_path, capsys):
    assert main(["enumerate", str(tmp_path / "ghost")]) == 3
    assert "error" in capsys.readouterr().err


def test_enumerate_budget_abort(tmp_path, capsys):
    write_matrix(tmp_path / "had.12", load("had.12"))
    assert main(["enumerate", str(tmp_path / "had.12"), "--node-budget", "10",
                 "--out", str(tmp_path / "r")]) == 4
    assert "aborted" in capsys.readouterr().err


def test_flag_validation(tmp_path):
    path = write_matrix(tmp_path / "had.4", sylvester(2))
    with pytest.raises(SystemExit):
        main(["enumerate", path, "--jobs", "0"])
    with pytest.raises(SystemExit):
        main(["enumerate", path, "--node-budget", "0"])


def test_catalog_pipeline(tmp_path, capsys):
    write_matrix(tmp_path / "had.4", sylvester(2))
    res = tmp_path / "res"
    assert main(["enumerate", str(tmp_path / "had.4"), "--out", str(res)]) == 0
    capsys.readouterr()
    assert main(["catalog", str(res)]) == 0
    assert "order 4: 4 graphs, 1 classes" in capsys.readouterr().out
    doc = json.loads((res / "catalog.json").read_text(encoding="utf-8"))
    assert doc["order"] == 4 and doc["union_graphs"] == 4
    assert doc["matrices"] == [{"matrix_id": "had.4", "graphs": 4}]
    assert len(doc["classes"]) == 1
    scatter = (res / "scatter.csv").read_text(encoding="utf-8")
    assert scatter == "graphs_per_class,matrices_per_class\n4,1\n"
    stats = (res / "stats.csv").read_text(encoding="utf-8").splitlines()
    assert stats[0] == "statistic,value,count"
    assert "degree,0,1" in stats
    # separate --out directory leaves the results untouched
    alt = tmp_path / "alt"
    assert main(["catalog", str(res), "--out", str(alt)]) == 0
    assert (alt / "catalog.json").read_bytes() == (res / "catalog.json").read_bytes()


def test_catalog_rejects_mixed_orders(tmp_path, capsys):
    write_matrix(tmp_path / "had.4", sylvester(2))
    write_matrix(tmp_path / "had.8", sylvester(3))
    res = tmp_path / "res"
    assert main(["enumerate", str(tmp_path / "had.4"), str(tmp_path / "had.8"),
                 "--out", str(res)]) == 0
    capsys.readouterr()
    assert main(["catalog", str(res)]) == 3
    assert "error" in capsys.readouterr().err


def test_catalog_empty_dir(tmp_path, capsys):
    empty = tmp_path / "none"
    empty.mkdir()
    assert main(["catalog", str(empty)]) == 3
    assert "no result files" in capsys.readouterr().err


def test_verify_tables_small_orders(capsys):
    assert main(["verify-tables", "--orders", "4", "8", "12"]) == 0
    out = capsys.readouterr().out
    assert "PASS order 4 matrix count: got 1, want 1" in out
    assert "PASS order 4 union graphs: got 4, want 4" in out
    assert "PASS order 8 zoo match: got (10, 0, 0), want (10, 0, 0)" in out
    assert "PASS order 12 union graphs: got 4, want 4" in out
    assert "FAIL" not in out


def test_verify_tables_unknown_order(capsys):
    assert main(["verify-tables", "--orders", "36"]) == 2
    assert "FAIL order 36: no published expectations" in capsys.readouterr().out


def test_verify_tables_wrong_matrix_count(tmp_path, capsys):
    write_matrix(tmp_path / "had.4", sylvester(2))
    write_matrix(tmp_path / "had.4.1", sylvester(2))
    assert main(["verify-tables", "--data-root", str(tmp_path), "--orders", "4"]) == 2
    out = capsys.readouterr().out
    assert "FAIL order 4 matrix count: got 2, want 1" in out
    assert "PASS order 4 union graphs: got 4, want 4" in out


def test_verify_tables_missing_data_root(tmp_path, capsys):
    empty = tmp_path / "empty"
    empty.mkdir()
    assert main(["verify-tables", "--data-root", str(empty), "--orders", "4"]) == 3
    assert "error" in capsys.readouterr().err


def test_probe(tmp_path, capsys):
    path = write_matrix(tmp_path / "had.4", sylvester(2))
    assert main(["probe", path, "--trials", "2", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert "had.4: 2/2 equivalent forms gave the same graph set" in out


def test_zoo8_is_ten_distinct_graphs():
    graphs = zoo8()
    assert len(graphs) == 10
    assert all(g.n == 8 for g in graphs)
    assert len({canonical_form(g) for g in graphs}) == 10
