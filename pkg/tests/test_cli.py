import json

import pytest

from helpers import complete_bipartite, cycle, wheel
from trigraph_mwss.cli import loglog_slope, main
from trigraph_mwss.textio import dumps
from trigraph_mwss.weighting import WeightedTrigraph


@pytest.fixture
def files(tmp_path):
    out = {}
    out["k33"] = tmp_path / "k33.txt"
    out["k33"].write_text(dumps(WeightedTrigraph.unweighted(complete_bipartite(3, 3))))
    out["c5"] = tmp_path / "c5.txt"
    out["c5"].write_text(dumps(WeightedTrigraph.unweighted(cycle(5))))
    out["w5"] = tmp_path / "w5.txt"
    out["w5"].write_text(dumps(WeightedTrigraph.unweighted(wheel(5))))
    out["bad"] = tmp_path / "bad.txt"
    out["bad"].write_text("trigraph 2\ne 0 1\ns 0 1\n")
    out["semi"] = tmp_path / "semi.txt"
    out["semi"].write_text("trigraph 2\ns 0 1\nw 0 1\nw 1 1\n")
    return out


def test_solve(files, capsys):
    assert main(["solve", str(files["k33"])]) == 0
    assert capsys.readouterr().out == "alpha 3\n"


def test_solve_extract(files, capsys):
    assert main(["solve", str(files["c5"]), "--extract"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "alpha 2"
    a, b = map(int, lines[1].split()[1:])
    assert (b - a) % 5 not in (1, 4)


def test_solve_json_and_trace(files, tmp_path, capsys):
    trace = tmp_path / "t.json"
    assert main(["solve", str(files["c5"]), "--json", "--trace", str(trace)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["alpha"] == 2 and doc["schema"].endswith("/1") and doc["stable_set"] is None
    assert json.loads(trace.read_text())["n"] == 5


def test_exit_codes(files, tmp_path, capsys):
    assert main(["solve", str(files["bad"])]) == 2
    assert main(["solve", str(tmp_path / "missing.txt")]) == 5
    assert main(["solve", str(files["semi"]), "--extract"]) == 5
    assert main(["validate", str(files["w5"])]) == 3
    assert "not wheel-free" in capsys.readouterr().out
    assert main(["validate", str(files["c5"])]) == 0
    assert main(["oracle", str(files["c5"]), "--limit", "3"]) == 5
    assert main(["gen", "--out", str(tmp_path / "g"), "--n-min", "9", "--n-max", "3"]) == 5


def test_out_of_class_solve_never_exits_zero_with_a_wrong_answer(tmp_path, capsys):
    edges = [(a, b) for a in range(3) for b in range(3, 6)] + [(0, 1)]
    p = tmp_path / "x.txt"
    p.write_text("trigraph 6\n" + "".join(f"e {a} {b}\n" for a, b in edges))
    assert main(["solve", str(p)]) == 3


def test_oracle_matches_solve(tmp_path, capsys):
    out = tmp_path / "corpus"
    assert main(["gen", "--seed", "7", "--count", "15", "--out", str(out)]) == 0
    capsys.readouterr()
    for f in sorted(out.glob("*.txt")):
        main(["solve", str(f)])
        main(["oracle", str(f)])
        solved, oracle = capsys.readouterr().out.splitlines()
        assert solved == oracle


def test_gen_is_deterministic(tmp_path, capsys):
    for d in ("a", "b"):
        assert main(["gen", "--seed", "7", "--count", "6", "--out", str(tmp_path / d)]) == 0
        assert main(["gen", "--seed", "7", "--count", "2", "--large", "60", "--out", str(tmp_path / d / "big")]) == 0
    for f in (tmp_path / "a").rglob("*"):
        if f.is_file():
            assert f.read_bytes() == (tmp_path / "b" / f.relative_to(tmp_path / "a")).read_bytes()
    manifest = json.loads((tmp_path / "a" / "manifest.json").read_text())
    assert len(manifest["files"]) == 6


def test_decompose(files, tmp_path, capsys):
    assert main(["decompose", str(files["k33"])]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["steps"] == [] and doc["terminal"]["class"] == "complete-bipartite"
    dot = tmp_path / "t.dot"
    assert main(["decompose", str(files["c5"]), "--dot", str(dot)]) == 0
    first = capsys.readouterr().out
    assert dot.read_text().startswith("digraph")
    main(["decompose", str(files["c5"])])
    assert capsys.readouterr().out == first
    assert main(["decompose", str(files["c5"]), "--dot", "-"]) == 0
    assert capsys.readouterr().out.startswith("digraph")


def test_bench(tmp_path, capsys):
    out = tmp_path / "big"
    for n in (40, 80):
        main(["gen", "--seed", "1", "--count", "2", "--large", str(n), "--out", str(out)])
    capsys.readouterr()
    assert main(["bench", str(out), "--json", "--workers", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert [r["n"] for r in doc["rows"]] == [40, 80]
    assert doc["loglog_slope"] is not None
    assert main(["bench", str(tmp_path / "nothing")]) == 5


def test_loglog_slope():
    assert loglog_slope([10, 100], [1.0, 100.0]) == pytest.approx(2.0)
    assert loglog_slope([10], [1.0]) is None
