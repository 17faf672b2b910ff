import io
import json
import subprocess
import sys

import jsonschema
import pytest

from ahtorus.cli import load_schema, main, run
from ahtorus.errors import NotFound
from ahtorus.examples import builtin_examples, lookup

EX10 = [[1, 0], [-1, 0], [0, 1], [0, -1]]
REPORT_SCHEMA = load_schema("report.schema.json")


def check_report(report):
    jsonschema.validate(json.loads(report.dumps()), REPORT_SCHEMA)
    return report


def test_example_3i():
    r = check_report(run({"kind": "example", "payload": {"name": "example-3i"}}))
    assert r.ok and r.exit_code == 0
    assert r.result["presentation"]["surface"]["description"] == "A^2"
    assert r.result["P_matches_given"] is True


def test_present_weights_example_10():
    r = check_report(run({"kind": "present", "payload": {"weights": EX10}}))
    terms = r.result["presentation"]["terms"]
    assert [t["label"] for t in terms] == ["H1", "H2"]
    assert terms[0]["polyhedron"]["vertices"] == [[["0", "1"], ["0", "1"]], [["1", "1"], ["0", "1"]]]
    assert r.result["P_hnf"] == [["1", "1", "0", "0"], ["0", "0", "1", "1"]]


def test_not_fully_hyperbolic_exit_code():
    r = check_report(run({"kind": "present", "payload": {"weights": [[1], [1]]}}))
    assert not r.ok and r.exit_code == 3
    assert r.error["type"] == "NotFullyHyperbolic"


def test_schema_error_pointer():
    r = check_report(run({"kind": "present", "payload": {"weights": [[1, "x"]]}}))
    assert r.exit_code == 2 and r.error["pointer"] == "/payload/weights/0/1"
    r = check_report(run({"kind": "frobnicate", "payload": {}}))
    assert r.exit_code == 2 and r.error["pointer"] == "/kind"
    r = check_report(run({"kind": "fixed-points", "payload": {"weights": EX10, "height": 0}}))
    assert r.exit_code == 2


def test_evaluate_and_fixed_points():
    r = check_report(run({"kind": "evaluate", "payload": {"weights": EX10, "u": [1, 0]}}))
    assert r.result["coefficients"] == {"H1": ["0", "1"], "H2": ["0", "1"]}
    r = check_report(run({"kind": "fixed-points", "payload": {"weights": EX10, "height": 1}}))
    dirs = [rep["direction"] for rep in r.result["reports"] if rep["fixed_labels"]]
    assert dirs == [["0", "1"], ["1", "0"]]


def test_invariants_and_hypersurface():
    r = check_report(run({"kind": "example", "payload": {"name": "example-15-hypersurface"}}))
    assert r.result["hypersurface"]["weight"] == ["6", "0"]
    assert r.result["P_times_F_is_zero"] is True
    r = check_report(run({"kind": "invariants", "payload": {"weights": EX10, "bound": 2, "hypersurface": "x1 + x2"}}))
    assert r.exit_code == 3 and r.error["type"] == "NotHomogeneous"
    assert len(r.error["offending"]) == 2


def test_classify_exit_codes():
    r = check_report(run({"kind": "classify", "payload": {"weights": EX10}}))
    assert r.result["outcome"] == "ProductOfComplexityOne"
    payload = lookup("example-11-curves").payload
    r = check_report(run({"kind": "classify", "payload": payload}))
    assert r.ok and r.result["outcome"] == "Linear"
    payload = dict(payload, curves=[{"f": "u"}, {"f": "v"}])
    r = check_report(run({"kind": "classify", "payload": payload}))
    assert r.exit_code == 4 and r.result["outcome"] == "Undecided"


def test_example_11_relations():
    r = check_report(run({"kind": "example", "payload": {"name": "example-11-curves"}}))
    assert r.result["algebra"]["after_eliminating_u"] == ["-v**2 - v - x1*x2 + x3*x4"]
    terms = r.result["algebra"]["relations"][0]
    assert {"exponents": ["0", "0", "1", "1", "0", "0"], "coefficient": ["1", "1"]} in terms


def test_lookup():
    assert lookup("example-13").payload["P"] == [[1, 1, 2, 0, 0], [0, 1, 2, 2, 0], [0, 1, 2, 0, 3]]
    assert lookup("example-15-hypersurface").payload["hypersurface"] == "x + x**2*y1*y2**2 + z**2 + t**3"
    assert lookup("example-3iii(7)").name == "example-3iii(7)"
    with pytest.raises(NotFound):
        lookup("example-99")


def test_builtin_examples_deterministic_and_valid():
    names = [j.name for j in builtin_examples()]
    for required in ["example-3i", "example-10", "example-11-linear", "example-11-curves", "example-12",
                     "example-12b", "example-13", "example-15-hypersurface"]:
        assert required in names
    for job in builtin_examples():
        a = check_report(run({"kind": "example", "payload": {"name": job.name}}))
        b = run({"kind": "example", "payload": {"name": job.name}})
        assert a.ok, job.name
        assert a.dumps() == b.dumps()


def test_main_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps({"weights": EX10})))
    assert main(["evaluate", "--u", "0,1", "--quiet"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["result"]["u"] == ["0", "1"]


def test_main_input_file_and_errors(tmp_path, capsys):
    path = tmp_path / "job.json"
    path.write_text(json.dumps({"kind": "present", "payload": {"weights": [[1], [1]]}}))
    assert main(["present", "--input", str(path)]) == 3
    captured = capsys.readouterr()
    assert "NotFullyHyperbolic" in captured.err
    path.write_text("{not json")
    assert main(["present", "--input", str(path), "-q"]) == 2
    assert main(["example", "--name", "nope", "-q"]) == 3


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ahtorus.cli", "example", "--name", "example-12", "--quiet"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stderr == ""
    assert json.loads(proc.stdout)["name"] == "example-12"
