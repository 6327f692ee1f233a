import json
import subprocess
import sys
from pathlib import Path

import pytest

from e8grading import verify
from e8grading.cli import main

GOLDEN = Path(__file__).parent / "golden"
DATA = Path(__file__).parent.parent / "data"


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_table_dims_golden(capsys):
    status, out, _ = run(capsys, "table", "dims")
    assert status == 0
    assert out == (GOLDEN / "table_dims.tsv").read_text()
    row6 = [line for line in out.splitlines() if line.startswith("6\t")][0]
    assert row6.split("\t")[1:] == ["6", "3", "2", "3", "6"]


def test_table_orbit_counts_golden(capsys):
    status, out, _ = run(capsys, "table", "orbit-counts")
    assert status == 0 and out == (GOLDEN / "orbit_counts.tsv").read_text()


def test_table_json(capsys):
    _, out, _ = run(capsys, "table", "dims", "--format", "json")
    assert json.loads(out)["5"] == [10, 5, 5, 10]
    _, out, _ = run(capsys, "table", "orbit-counts", "--format", "json")
    rows = json.loads(out)
    assert rows[0] == {"d": 2, "n": 7, "m": 1, "e_i": 7, "h-e_J": 21, "2h-e_J": 21, "omega-e_i": 7, "total": 56}


def test_quiver_dot_golden(capsys):
    status, out, _ = run(capsys, "helix", "quiver", str(DATA / "helix_dp4.json"), "--dot")
    assert status == 0
    assert out == (GOLDEN / "helix_dp4.dot").read_text()
    assert out.count("->") == 8 + 8 + 2 * 4


def test_quiver_json(capsys):
    _, out, _ = run(capsys, "helix", "quiver", str(DATA / "helix_dp4.json"))
    doc = json.loads(out)
    assert doc["columns"] == [[-1, 0], [1, 2, 3, 4], [5, 6], [7, 8]]
    assert len(doc["chi_matrix"]) == 9


@pytest.mark.parametrize("name", ["helix_dp4.json", "helix_p2.json", "helix_p1xp1.json"])
def test_helix_check_valid(capsys, name):
    status, out, _ = run(capsys, "helix", "check", str(DATA / name))
    assert status == 0 and json.loads(out)["valid"]


def test_helix_check_invalid(capsys, tmp_path):
    doc = json.loads((DATA / "helix_dp4.json").read_text())
    doc["period"][1], doc["period"][5] = doc["period"][5], doc["period"][1]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    status, out, _ = run(capsys, "helix", "check", str(path))
    assert status == 1
    pairs = {(p["i"], p["j"]): p for p in json.loads(out)["failing_pairs"]}
    assert pairs[(1, 5)]["diff"] == [0, 0, -1, 0, 0, 0] and pairs[(1, 5)]["m"] == -1


def test_grading_json(capsys):
    status, out, _ = run(capsys, "grading", "3")
    doc = json.loads(out)
    assert status == 0
    assert doc["gu"]["name"] == "E6"
    assert [c["dimension"] for c in doc["components"]] == [86, 81, 81]
    assert len(doc["components"][1]["beta_weights"]) == 27
    assert all(len(b) == 7 for b in doc["components"][1]["beta_weights"])


def test_roots_filter(capsys):
    _, out, _ = run(capsys, "roots", "9", "--m", "3")
    doc = json.loads(out)
    assert len(doc) == 84
    assert {r["kind"] for r in doc} == {"h-e_J"}
    _, out, _ = run(capsys, "roots", "4")
    assert len(json.loads(out)) == 240


def test_orbits(capsys):
    _, out, _ = run(capsys, "orbits", "7", "--m", "1")
    assert sorted(len(o) for o in json.loads(out)["orbits"]) == [1, 2]


def test_curves_and_helical(capsys):
    _, out, _ = run(capsys, "curves", "4", "--m", "2")
    assert len(json.loads(out)) == 10
    _, out, _ = run(capsys, "helical", "4", "1,-1,0,0,0,0")
    doc = json.loads(out)
    assert doc["helical"] and doc["m"] == 2 and doc["chi"] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["grading", "10"],
        ["roots"],
        ["orbits", "4", "--m", "9"],
        ["curves", "4", "--m", "7"],
        ["helical", "4", "1,2"],
        ["helical", "4", "abc"],
        ["helix", "check", "/nonexistent/file.json"],
        ["table", "nope"],
    ],
)
def test_usage_errors(capsys, argv):
    status, _, err = run(capsys, *argv)
    assert status == 2
    assert err.startswith("e8grading: error[usage]: ")
    assert err.count("\n") == 1


def test_output_file(capsys, tmp_path):
    path = tmp_path / "dims.tsv"
    status, out, _ = run(capsys, "-o", str(path), "table", "dims")
    assert status == 0 and out == ""
    assert path.read_text() == (GOLDEN / "table_dims.tsv").read_text()


def test_verify(capsys):
    status, out, _ = run(capsys, "verify")
    assert status == 0
    lines = out.splitlines()
    assert len(lines) == len(verify.CHECKS) + 1
    assert all(line.startswith("PASS ") for line in lines[:-1])


def test_verify_json(capsys):
    status, out, _ = run(capsys, "verify", "--json")
    doc = json.loads(out)
    assert status == 0 and set(doc) == set(verify.CHECKS)
    assert all(v["pass"] for v in doc.values())


def test_verify_failure_exit(capsys, monkeypatch):
    monkeypatch.setitem(verify.CHECKS, "broken", lambda: (False, {("x", 1): 2}))
    status, out, _ = run(capsys, "verify", "--json")
    assert status == 1
    assert json.loads(out)["broken"]["details"] == {"('x', 1)": 2}


def test_deterministic(capsys):
    outs = {run(capsys, "grading", "8b")[1] for _ in range(3)}
    assert len(outs) == 1


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "e8grading", "grading", "10"], capture_output=True, text=True
    )
    assert res.returncode == 2
    assert "error[usage]" in res.stderr
