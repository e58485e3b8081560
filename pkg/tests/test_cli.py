import io
import json
import subprocess
import sys

import pytest

from triex import graph6
from triex.cli import main
from triex.extremal import max_triangles
from triex.graph import complete_graph


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bound_text(capsys):
    code, out, _ = run(capsys, "bound", "--edges", "8")
    assert code == 0
    assert "max_triangles=5" in out


def test_bound_json(capsys):
    code, out, _ = run(capsys, "bound", "--edges", "10", "--output", "json")
    d = json.loads(out)
    assert code == 0
    assert d["max_triangles"] == 10
    assert d["rivin_bound"] == pytest.approx(10, rel=1e-9)
    assert {"n", "r", "t", "max_triangles", "rivin_bound", "gap"} <= d.keys()
    _, out, _ = run(capsys, "bound", "--edges", "8", "--output", "json")
    d = json.loads(out)
    assert d["rivin_bound"] > d["max_triangles"] == 5


def test_bound_zero(capsys):
    code, out, _ = run(capsys, "bound", "--edges", "0", "--output", "json")
    assert code == 0 and json.loads(out)["max_triangles"] == 0


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--edges", "7")
    assert code == 0 and len(out.split()) == 2
    code, out, _ = run(capsys, "construct", "--edges", "6")
    assert out.split() == [graph6.encode(complete_graph(4))]
    code, out, _ = run(capsys, "construct", "--edges", "7", "--variant", "connected")
    assert len(out.split()) == 1


def test_construct_disconnected_only_for_t1(capsys):
    code, out, err = run(capsys, "construct", "--edges", "8", "--variant", "disconnected")
    assert code == 2 and "C(r,2)+1" in err
    code, out, _ = run(capsys, "construct", "--edges", "7", "--variant", "disconnected")
    assert code == 0 and len(out.split()) == 1


def test_construct_triangles_roundtrip(capsys, monkeypatch):
    for n in range(1, 51):
        _, out, _ = run(capsys, "construct", "--edges", str(n))
        code, counted, _ = run(capsys, "triangles", stdin=out, monkeypatch=monkeypatch)
        assert code == 0
        counts = [int(line.split("\t")[1]) for line in counted.splitlines()]
        assert counts and all(c == max_triangles(n) for c in counts)


def test_triangles_k5_and_bad_lines(capsys, monkeypatch):
    code, out, err = run(capsys, "triangles", stdin="D~{\nnot graph6!\nA_\n", monkeypatch=monkeypatch)
    assert code == 2
    assert out.splitlines() == ["D~{\t10", "A_\t0"]
    assert "line 2" in err


def test_triangles_from_file_json(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(">>graph6<<D~{\n")
    code, out, _ = run(capsys, "triangles", "--input", str(f), "--output", "json")
    d = json.loads(out)
    assert code == 0
    assert (d["line"], d["vertices"], d["edges"], d["triangles"]) == (1, 5, 10, 10)


def test_verify_structural(capsys):
    code, out, _ = run(capsys, "verify", "--max-edges", "12", "--jobs", "2", "--output", "json")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert len([r for r in recs if "n" in r]) == 12
    assert all(r["pass"] for r in recs)
    assert recs[-1]["check"] == "rivin_average"


def test_verify_jobs_do_not_change_output(capsys):
    _, one, _ = run(capsys, "verify", "--max-edges", "9", "--jobs", "1", "--rivin-vertices", "0")
    _, three, _ = run(capsys, "verify", "--max-edges", "9", "--jobs", "3", "--rivin-vertices", "0")
    assert one == three


def test_verify_exhaustive_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-edges", "6", "--mode", "exhaustive", "--rivin-vertices", "0")
    assert code == 0 and out.count("PASS") == 6


def test_verify_ceiling(capsys, monkeypatch):
    monkeypatch.setenv("TRIEX_WORK_CEILING", "10")
    code, _, err = run(capsys, "verify", "--max-edges", "5")
    assert code == 2 and "ceiling" in err


def test_schur_table1(capsys):
    code, out, _ = run(capsys, "schur", "table1")
    assert code == 0 and out.count("match") == 4 and "MISMATCH" not in out
    code, out, _ = run(capsys, "schur", "table1", "--output", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["computed_exponent"] for r in rows] == ["6", "8", "12", "14"]


@pytest.mark.parametrize(
    "argv,exponent",
    [
        (["special", "--p", "3", "--d", "4", "--k", "4"], "14/1"),
        (["nil3", "--p", "5", "--d", "2", "--n", "5", "--k", "2", "--e", "1", "--delta", "2"], "3/1"),
        (["simple", "--p", "5", "--d", "2", "--n", "5", "--k", "2"], "1/2"),
        (["sharpened", "--p", "5", "--d", "3", "--n", "7", "--k", "2", "--delta", "3", "--alpha", "2,1,1"], "6/1"),
        (["nonhomocyclic", "--p", "5", "--d", "3", "--n", "7", "--k", "2", "--alpha", "2,1,1"], "6/1"),
        (["vermani", "--p", "5", "--m", "3", "--rsub", "1", "--dquot", "2", "--tensor", "2"], "4/1"),
        (["vermani", "--p", "5", "--m", "3", "--rsub", "1", "--dquot", "2", "--quot-alpha", "1,1", "--sub-alpha", "1"], "4/1"),
        (["coclass", "--p", "5", "--coclass", "2", "--k", "3"], "7/1"),
    ],
)
def test_schur_json(capsys, argv, exponent):
    code, out, _ = run(capsys, "schur", *argv, "--output", "json")
    d = json.loads(out)
    assert code == 0
    assert d["exponent_rational"] == exponent
    assert {"formula_id", "inputs", "exponent_rational", "exponent_floor", "assumptions"} <= d.keys()


def test_schur_errors(capsys):
    code, _, err = run(capsys, "schur", "nil3", "--p", "3", "--d", "2", "--n", "5", "--k", "2", "--e", "1", "--delta", "2")
    assert code == 2 and "p != 2, 3" in err
    code, _, err = run(capsys, "schur", "special", "--p", "3")
    assert code == 2 and "--d" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bound", "--edges", "-1"])
    assert exc.value.code == 2


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "triex", "bound", "--edges", "9", "--output", "json"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(res.stdout)["max_triangles"] == 7
