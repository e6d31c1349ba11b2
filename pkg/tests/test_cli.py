import io
import json
import subprocess
import sys

import pytest

from hopfgrade.algebra import matrix_algebra
from hopfgrade.cli import dumps, run


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def report(*argv):
    code, out, _ = invoke(*argv)
    return code, json.loads(out)


def statuses(rep):
    return {c["name"]: c["status"] for c in rep["checks"]}


@pytest.fixture(scope="module")
def s3_cocycles(tmp_path_factory):
    path = tmp_path_factory.mktemp("ybe") / "s3.json"
    code, _, _ = invoke("ybe", "search", "--group", "S3", "--abelian", "6", "--out", str(path))
    assert code == 0
    return str(path)


def test_grade_check():
    code, rep = report("grade-check", "--group", "Q8", "--degree", "2")
    assert code == 0 and rep["result"]["can_grade"] is True
    assert rep["command"] == "grade-check" and rep["inputs"]["group"] == "Q8"
    # a negative answer is reported as a failing check, grep-style
    code, rep = report("grade-check", "--group", "S4", "--degree", "3")
    assert code == 1 and rep["result"]["can_grade"] is False
    assert "witness" in rep["checks"][0]


def test_min_degree():
    assert report("min-degree", "--group", "Z6")[1]["result"]["min_degree"] == 1
    assert report("min-degree", "--group", "S4")[1]["result"]["min_degree"] == 6


def test_catalog_file(tmp_path):
    cat = tmp_path / "groups.txt"
    cat.write_text("name V; degree 4; gens (0 1)(2 3), (0 2)(1 3)\n")
    code, rep = report("min-degree", "--group", "V", "--catalog", str(cat))
    assert code == 0 and rep["result"] == {"min_degree": 1, "group_order": 4}


def test_embed():
    code, rep = report("embed", "--group", "Q8")
    assert code == 0 and rep["result"]["target_order"] == 32
    code, rep = report("embed", "--group", "S3", "--subgroup", "(0 1 2)")
    assert code == 0 and rep["result"]["target_order"] == 18


def test_ybe_pipeline(s3_cocycles):
    code, rep = report("ybe", "certify", "--cocycle", s3_cocycles, "--phi", "1")
    assert code == 0 and rep["result"]["size"] == 6
    assert set(statuses(rep).values()) == {"pass"}
    code, rep = report("ybe", "hilbert", "--cocycle", s3_cocycles, "--phi", "1", "--maxdeg", "3")
    assert code == 0 and rep["result"]["hilbert"] == [1, 6, 21, 56]
    code, rep = report("ybe", "certify", "--cocycle", s3_cocycles, "--phi", "0")
    assert code == 1 and statuses(rep)["faithful"] == "fail"


def test_ybe_search_size_mismatch():
    code, rep = report("ybe", "search", "--group", "Z2", "--abelian", "3")
    assert code == 1 and rep["result"]["error"] == "SizeMismatch"


def test_twist_commands(s3_cocycles):
    code, rep = report("twist", "build", "--cocycle", s3_cocycles)
    assert code == 0 and len(rep["result"]["terms"]) == 36
    assert report("twist", "verify", "--cocycle", s3_cocycles)[0] == 0
    code, rep = report("twist", "verify", "--cocycle", s3_cocycles, "--control", "perturbed")
    assert code == 1 and statuses(rep)["twist_equation"] == "fail"
    assert "witness" in next(c for c in rep["checks"] if c["name"] == "twist_equation")
    assert report("twist", "verify", "--cocycle", s3_cocycles, "--control", "leg-swap")[0] == 0


def test_pidegree(s3_cocycles):
    code, rep = report("pidegree", "--cocycle", s3_cocycles, "--index", "1")
    assert code == 0 and rep["result"]["bound"] == 36


def test_examples_and_galois():
    code, rep = report("example", "quaternion", "--bound", "2")
    assert code == 0 and rep["result"]["nonsplit"]["status"] == "no_solution"
    code, rep = report("torus", "3")
    assert code == 0 and rep["result"]["center_dim"] == 1
    code, rep = report("galois", "torus", "--n", "2")
    assert code == 0 and rep["result"]["isotypic"]["regular"]
    code, rep = report("galois", "quaternions-2T")
    assert code == 0 and rep["result"]["canonical_map"]["bijective"] is False


def test_dstar_file(tmp_path):
    path = tmp_path / "mat3.json"
    path.write_text(json.dumps(matrix_algebra(3).to_json()))
    code, rep = report("dstar", "--algebra", str(path))
    assert code == 0 and rep["result"]["d_star"] == 3 and rep["result"]["exact"]


def test_input_errors_exit_2(tmp_path):
    assert invoke("no-such-command")[0] == 2
    assert invoke("min-degree", "--group", "NotAGroup")[0] == 2
    assert invoke("dstar", "--algebra", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert invoke("twist", "verify", "--cocycle", str(bad))[0] == 2
    bad.write_text(json.dumps({"products": []}))
    assert invoke("dstar", "--algebra", str(bad))[0] == 2
    code, _, err = invoke("min-degree", "--group", "Z2", "--catalog", str(tmp_path / "nope.txt"))
    assert code == 2 and "error" in err


def test_json_round_trip_is_idempotent():
    _, out, _ = invoke("embed", "--group", "Q8")
    assert dumps(json.loads(out)) + "\n" == out


def test_reports_are_deterministic():
    assert invoke("galois", "torus", "--n", "2", "--seed", "3") == invoke("galois", "torus", "--n", "2", "--seed", "3")


def test_timing_only_on_request():
    _, rep = report("min-degree", "--group", "Z6")
    assert "timing_ms" not in rep
    _, rep = report("min-degree", "--group", "Z6", "--timing")
    assert isinstance(rep["timing_ms"], int)


def test_suite_quick():
    code, out, err = invoke("suite", "--quick", "--jobs", "4")
    rep = json.loads(out)
    assert code == 0, err
    names = [c["name"] for c in rep["checks"]]
    assert names == sorted(names) and len(names) == 8
    assert all(c["status"] == "pass" for c in rep["checks"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hopfgrade", "min-degree", "--group", "Q8"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["result"]["min_degree"] == 2
