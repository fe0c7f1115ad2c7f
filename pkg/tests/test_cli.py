import json
import subprocess
import sys
from pathlib import Path

import pytest

from toricgraph.cli import EXIT_CAP, EXIT_INPUT, EXIT_OK, EXIT_VERIFY, RunConfig, run
from toricgraph.errors import InputError
from toricgraph.field import FieldSpec
from toricgraph.ideal import parse_binomials

GRAPHS = Path(__file__).resolve().parent.parent / "graphs"


def call(capsys, *argv):
    status = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return status, out, err


def test_length(capsys):
    status, out, _ = call(capsys, "length", GRAPHS / "triangle_square.txt", "--q", "5")
    rep = json.loads(out)
    assert status == EXIT_OK
    assert rep["formula"] == rep["enumerated"] == 1024 and rep["match"]


def test_length_over_cap_reports_formula_only(capsys):
    status, out, err = call(capsys, "length", GRAPHS / "c6.txt", "--q", "5", "--enum-cap", "10")
    rep = json.loads(out)
    assert status == EXIT_OK and rep["formula"] == 256 and rep["enumerated"] is None


def test_code(capsys):
    status, out, _ = call(capsys, "code", GRAPHS / "c4.txt", "--q", "3", "--d", "1", "--min-distance")
    rep = json.loads(out)
    assert status == EXIT_OK
    assert (rep["length"], rep["dimension"], rep["min_distance"]) == (4, 4, 1)


def test_code_search_cap_exit(capsys):
    status, _, err = call(capsys, "code", GRAPHS / "c6.txt", "--q", "5", "--d", "2", "--min-distance",
                          "--dist-cap", "100")
    assert status == EXIT_CAP and "SearchTooLarge" in err


def test_regularity_csv(capsys):
    status, out, _ = call(capsys, "regularity", GRAPHS / "c4.txt", "--q", "3", "--format", "csv")
    assert status == EXIT_OK
    assert out.splitlines() == ["d,H_X(d)", "0,1", "1,4"]


def test_regularity_with_cycle_bound(capsys):
    status, out, _ = call(capsys, "regularity", GRAPHS / "two_squares.txt", "--q", "5",
                          "--cycles", "1,2,3,4;3,5,1,6")
    rep = json.loads(out)
    assert status == EXIT_OK
    assert rep["computed"] == rep["bound"] == 9 and rep["bound_holds"]
    assert rep["hilbert"] == [1, 8, 30, 80, 128, 176, 216, 240, 252, 256]


def test_generators_verify(capsys):
    status, out, _ = call(capsys, "generators", GRAPHS / "c4.txt", "--q", "3", "--verify")
    rep = json.loads(out)
    assert status == EXIT_OK
    assert rep["count"] == 6 and rep["verification"]["generates"]


def test_generators_naive_candidates_fail_verification(capsys):
    status, out, _ = call(capsys, "generators", GRAPHS / "two_squares.txt", "--q", "3",
                          "--cycles", "1,2,3,4;3,5,1,6", "--verify")
    assert status == EXIT_VERIFY
    assert json.loads(out)["verification"]["first_failure"] == 2


def test_generators_conjecture(capsys):
    status, out, _ = call(capsys, "generators", GRAPHS / "c4.txt", "--q", "4", "--conjecture")
    conj = json.loads(out)["conjecture"]
    assert status == EXIT_OK
    assert conj["generates"] and conj["minimal"] and conj["groebner"]


def test_torus(capsys):
    status, out, _ = call(capsys, "torus", "--s", "3", "--q", "4", "--d", "1")
    rep = json.loads(out)
    assert status == EXIT_OK
    assert rep["min_distance"] == rep["enumerated"]["min_distance"] == 6


@pytest.mark.parametrize("argv", [
    ["length", "/nonexistent/graph.txt"],
    ["length", GRAPHS / "c4.txt", "--q", "6"],
    ["length", GRAPHS / "c4.txt", "--enum-cap", "0"],
    ["generators", GRAPHS / "triangle_square.txt", "--q", "3"],
    ["regularity", GRAPHS / "c4.txt", "--cycles", "1,2,3"],
])
def test_input_errors(capsys, argv):
    status, _, err = call(capsys, *argv)
    assert status == EXIT_INPUT and err.startswith("error:")


def test_run_config_rejects_non_positive_caps():
    with pytest.raises(InputError):
        RunConfig(FieldSpec(3), enum_cap=0)


def test_out_artifacts(capsys, tmp_path):
    status, _, _ = call(capsys, "generators", GRAPHS / "c4.txt", "--q", "3", "--verify", "--out", tmp_path)
    assert status == EXIT_OK
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["generators.provenance.json", "generators.txt", "hilbert.csv", "toric.csv"]
    assert len(parse_binomials((tmp_path / "generators.txt").read_text())) == 6
    assert (tmp_path / "toric.csv").read_text().splitlines()[0] == "t1,t2,t3,t4"
    assert (tmp_path / "hilbert.csv").read_text().splitlines()[0] == "d,H_X(d)"
    prov = json.loads((tmp_path / "generators.provenance.json").read_text())
    assert isinstance(prov, dict)


def test_repeated_runs_are_byte_identical(tmp_path):
    argv = [sys.executable, "-m", "toricgraph.cli", "generators", str(GRAPHS / "c4_pendant.txt"), "--q", "4",
            "--verify"]
    outs = []
    for i in range(2):
        d = tmp_path / str(i)
        res = subprocess.run(argv + ["--out", str(d)], capture_output=True, check=False)
        outs.append((res.returncode, res.stdout, *(p.read_bytes() for p in sorted(d.iterdir()))))
    assert outs[0][0] == EXIT_OK and len(outs[0]) == 6
    assert outs[0] == outs[1]
