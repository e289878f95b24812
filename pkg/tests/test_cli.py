import csv
import io
import json
import subprocess
import sys

import pytest

from twoside.cli import main, run
from twoside.io import digest, dump_report, module_record, read_report
from twoside import corpus
from twoside.bimodule import direct_sum, vs_from_embedding

E_FAM = "(x^2+2)*y^2-(x^2+1)"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code, report = run(list(argv), out, err)
    return code, report, out.getvalue(), err.getvalue()


def test_family_info_example():
    code, rep, out, _ = call("family", "--params", "0,1,0,1,1,0,2", "info", "--format", "json")
    assert code == 0
    (inst,) = rep["results"]["instances"]
    assert inst["dims"] == [2, 2] and inst["rank"] == 2
    assert json.loads(out) == rep


def test_family_violation_is_named():
    code, _, _, err = call("family", "--params", "0,1,2,1,1,0,2")
    assert code == 2 and "b² = 4ac" in err


def test_family_bad_params():
    code, _, _, err = call("family", "--params", "0,1,2")
    assert code == 2 and "alpha" in err


def test_family_jobs_preserve_order():
    a = call("family", "--random", "4", "--seed", "3", "--format", "csv")
    b = call("family", "--random", "4", "--seed", "3", "--jobs", "2", "--format", "csv")
    assert a[0] == b[0] == 0 and a[2] == b[2]
    rows = list(csv.reader(io.StringIO(a[2])))
    assert rows[0] == ["params", "relation", "left", "right", "tier"]
    assert all(r[2:4] == ["2", "2"] for r in rows[1:]) and len(rows) == 5


def test_dual_example():
    code, rep, _, _ = call("dual", "--relation", "y - x - 1", "--format", "json")
    assert code == 0 and rep["results"]["relation"] == "x - y - 1"


def test_dual_matrix_route_left():
    code, rep, _, _ = call("dual", "-r", E_FAM, "--side", "left", "--route", "matrix", "--format", "json")
    assert code == 0 and rep["results"]["dims"] == [2, 2]


def test_ncsym_csv_example():
    code, _, out, _ = call("ncsym", "--relation", E_FAM, "--dmax", "4", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["i", "j", "dimB", "dimR", "dimA"]
    assert [int(r["dimA"]) for r in rows] == [1, 2, 3, 4, 5]


def test_ncsym_json_has_q_generators():
    code, rep, _, _ = call("ncsym", "-r", E_FAM, "--dmax", "2", "--format", "json")
    assert code == 0
    assert rep["results"]["q_even"] == ["1/2", "1/2/t", "0", "0"]


def test_ncsym_not_rank_equal():
    code, _, _, err = call("ncsym", "-r", "y - x^2")
    assert code == 2


def test_ncsym_resource_cap():
    code, _, _, err = call("ncsym", "-r", E_FAM, "--dmax", "13")
    assert code == 4 and "exceeds" in err


def test_parse_error_exit():
    code, _, _, err = call("validate", "-r", "y - (x")
    assert code == 2 and err


def test_validation_message_verbatim():
    code, _, _, err = call("validate", "-r", "y^2 - x^2")
    assert code == 2 and "F reducible" in err


def test_validate_assumed_tier_note():
    code, rep, _, _ = call("validate", "-r", "y^3 - x^3 - 1", "--format", "json")
    assert code == 0
    assert rep["results"]["embedding"]["tier"] == "AssumedWithWitnessChecks"
    assert rep["notes"]


def test_iso_commands():
    code, rep, _, _ = call("iso", "-r", "y - x", "-r", "y - x - 1", "--format", "json")
    assert code == 0 and rep["results"]["isomorphic"] is False
    code, rep, _, _ = call("iso", "-r", E_FAM, "--transpose", "--format", "json")
    assert code == 0 and rep["results"]["isomorphic"] is True


def test_iso_needs_two_inputs():
    assert call("iso", "-r", "y - x")[0] == 2


def test_adjoint_check():
    code, rep, _, _ = call("adjoint-check", "-r", E_FAM, "--format", "json")
    res = rep["results"]
    assert code == 0 and res["triangle"] and res["central"] and res["ab_identity"]
    assert res["unit_subspace_dim"] == 1


def test_adjoint_check_not_rank_equal():
    assert call("adjoint-check", "-r", "y - x^2")[0] == 2


def test_info_text_has_timing():
    code, _, out, _ = call("info", "-r", E_FAM)
    assert code == 0 and "elapsed:" in out and "dims: [2, 2]" in out


def test_tier_exit(tmp_path):
    rec = {"kind": "raw", "n": 4, "T": [["t", 0, 0, 0], [0, "t+1", 0, 0], [0, 0, "t^2", 0], [0, 0, 0, "t^3"]]}
    path = tmp_path / "raw.json"
    path.write_text(json.dumps(rec))
    code, rep, _, _ = call("info", "-f", str(path), "--format", "json")
    assert code == 3
    assert rep["results"]["simple"] == "unknown"


def test_file_formats(tmp_path):
    recs = {
        "triples.json": {"F": corpus.embedding("hyperbola").F.to_triples(), "name": "h"},
        "text.json": {"relation": "y^2 - x^2 - 1"},
        "sum.json": module_record(direct_sum(vs_from_embedding(corpus.embedding("square")), vs_from_embedding(corpus.embedding("shift")))),
    }
    for name, rec in recs.items():
        (tmp_path / name).write_text(json.dumps(rec))
    r1 = call("info", "-f", str(tmp_path / "triples.json"), "--format", "json")[1]
    r2 = call("info", "-f", str(tmp_path / "text.json"), "--format", "json")[1]
    assert r1["results"]["dims"] == r2["results"]["dims"] == [2, 2]
    code, r3, _, _ = call("info", "-f", str(tmp_path / "sum.json"), "--format", "json")
    assert code == 0 and r3["results"]["dims"] == [2, 3]


def test_missing_file():
    assert call("info", "-f", "/nonexistent/file.json")[0] == 2


def test_json_and_csv_are_byte_identical():
    args = ("ncsym", "-r", E_FAM, "--dmax", "3", "--seed", "5")
    a = call(*args, "--format", "json")[2]
    b = call(*args, "--format", "json")[2]
    assert a == b
    assert call(*args, "--format", "csv")[2] == call(*args, "--format", "csv")[2]


def test_report_schema_round_trip():
    _, rep, out, _ = call("info", "-r", "y - x", "--format", "json")
    back = read_report(out)
    assert back == rep and back["schema"] == 1
    assert rep["input_digest"] == digest({"input": "y - x"})
    assert dump_report(back) == out
    with pytest.raises(ValueError):
        read_report(json.dumps({"schema": 2}))


def test_csv_not_available():
    assert call("info", "-r", "y - x", "--format", "csv")[0] == 2


def test_output_file(tmp_path):
    path = tmp_path / "out.json"
    code, _, out, _ = call("info", "-r", "y - x", "--format", "json", "-o", str(path))
    assert code == 0 and out == ""
    assert read_report(path.read_text())["command"] == "info"


def test_error_report_in_json():
    code, rep, out, _ = call("validate", "-r", "y^2 - x^2", "--format", "json")
    assert code == 2 and json.loads(out)["results"]["exit_code"] == 2


def test_max_degree_flag_bounds_sweep():
    # left dual via the matrix route needs the sweep; degree 0 is too small
    code, _, _, err = call("dual", "-r", E_FAM, "--side", "left", "--route", "matrix", "--max-degree", "0")
    assert code in (2, 4) and err


def test_selftest_subset():
    code, rep, out, _ = call("selftest", "--only", "2,4", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["criterion", "title", "passed", "detail"]
    assert [r[0] for r in rows[1:]] == ["2", "4"] and all(r[2] == "True" for r in rows[1:])


def test_main_returns_code():
    assert main(["validate", "-r", "y - x", "-o", "/dev/null"]) == 0


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "twoside.cli", "--version"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and "twoside" in proc.stdout


def test_selftest_text_lines():
    code, _, out, _ = call("selftest", "--only", "4")
    assert code == 0
    assert "[PASS] criterion 4: transpose isomorphism" in out
