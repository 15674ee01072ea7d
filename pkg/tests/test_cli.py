import json

import pytest

from geodex.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_path_family(capsys):
    code, out, _ = run(capsys, "solve", "--family", "path", "--n", "5")
    assert code == 0
    rec = json.loads(out)
    assert rec["n"] == 5
    assert rec["grundy"] == 1
    assert rec["outcome"] == "N"
    assert rec["solver_used"] == "closed-form"
    assert rec["elapsed_ms"] >= 0


def test_solve_complete_bipartite(capsys):
    code, out, _ = run(capsys, "solve", "--family", "complete-bipartite",
                       "--m", "2", "--n", "3")
    assert code == 0
    rec = json.loads(out)
    assert rec["grundy"] == 2
    assert rec["outcome"] == "N"


def test_solve_missing_input_exits_2(capsys):
    code, _, err = run(capsys, "solve", "--input", "missing.edges")
    assert code == 2
    assert "missing.edges" in err


def test_solve_from_file(tmp_path, capsys):
    p = tmp_path / "square.edges"
    p.write_text("n 4\n0 1\n1 2\n2 3\n3 0\n")
    code, out, _ = run(capsys, "solve", "--input", str(p))
    assert code == 0
    rec = json.loads(out)
    assert rec["n"] == 4
    assert rec["grundy"] == 0
    assert rec["outcome"] == "P"


def test_solve_grid_reports_outcome_only(capsys):
    code, out, _ = run(capsys, "solve", "--family", "grid",
                       "--dims", "2,5")
    assert code == 0
    rec = json.loads(out)
    assert "grundy" not in rec
    assert rec["outcome"] == "P"


def test_solve_forced_solver_mismatch_exits_2(capsys):
    code, _, err = run(capsys, "solve", "--family", "cycle", "--n", "5",
                       "--solver", "tree")
    assert code == 2
    assert err.startswith("error:")


def test_solve_no_closed_form_exits_2(capsys):
    code, _, err = run(capsys, "solve", "--family", "petersen",
                       "--solver", "closed-form")
    assert code == 2
    assert "closed form" in err


def test_solve_brute_solver(capsys):
    code, out, _ = run(capsys, "solve", "--family", "paw", "--solver",
                       "brute")
    assert code == 0
    rec = json.loads(out)
    assert rec["grundy"] == 0
    assert rec["solver_used"] == "brute"


def test_solve_capacity_exits_3(capsys):
    code, _, err = run(capsys, "solve", "--family", "path", "--n", "200")
    assert code == 3
    assert "error" in err


def test_solve_bad_dims_exits_2(capsys):
    code, _, _ = run(capsys, "solve", "--family", "grid", "--dims", "2,x")
    assert code == 2


def test_solve_requires_one_source(capsys):
    code, _, _ = run(capsys, "solve")
    assert code == 2


def test_table_paths(capsys):
    code, out, _ = run(capsys, "table", "--family", "path", "--max-n", "6")
    assert code == 0
    assert out.splitlines() == ["param,grundy", "1,1", "2,0", "3,1", "4,0",
                                "5,1", "6,0"]


def test_table_cycles(capsys):
    code, out, _ = run(capsys, "table", "--family", "cycle", "--max-n", "6")
    assert code == 0
    assert out.splitlines() == ["param,grundy", "3,1", "4,0", "5,1", "6,0"]


def test_table_stars(capsys):
    code, out, _ = run(capsys, "table", "--family", "star", "--max-n", "4")
    assert code == 0
    assert out.splitlines() == ["param,grundy", "1,0", "2,1", "3,0", "4,1"]


def test_table_out_and_plot(tmp_path, capsys):
    target = tmp_path / "cycles.csv"
    code, _, err = run(capsys, "table", "--family", "cycle", "--max-n", "8",
                       "--out", str(target), "--plot")
    assert code == 0
    assert target.read_text().startswith("param,grundy\n3,1\n")
    figure = tmp_path / "cycles.png"
    assert figure.exists() and figure.stat().st_size > 0
    assert "cycles.png" in err


def test_table_json_rows(capsys):
    code, out, _ = run(capsys, "table", "--family", "complete",
                       "--max-n", "4", "--json")
    assert code == 0
    rows = json.loads(out)
    assert rows == [{"param": 1, "grundy": 1}, {"param": 2, "grundy": 0},
                    {"param": 3, "grundy": 1}, {"param": 4, "grundy": 0}]


def test_verify_block_single_instance(capsys):
    code, out, _ = run(capsys, "verify", "--family", "block", "--count", "1",
                       "--max-n", "4", "--seed", "7")
    assert code == 0
    assert "family=block" in out
    assert "instances=1" in out
    assert "mismatches=0" in out


def test_verify_json_report(capsys):
    code, out, _ = run(capsys, "verify", "--family", "tree", "--count", "5",
                       "--max-n", "8", "--seed", "1", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["family"] == "tree"
    assert report["instances"] == 5
    assert report["mismatches"] == []


def test_family_without_size_exits_2(capsys):
    code, _, err = run(capsys, "solve", "--family", "path")
    assert code == 2
    assert "--n" in err


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
