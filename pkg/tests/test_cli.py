import json
import subprocess
import sys

import pytest

from engelgroups.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval(capsys):
    code, out, _ = call(capsys, "eval", "--group", "catalog:D8", "--word", "[x,_3 y]",
                        "--bind", "x=r", "--bind", "y=s")
    assert code == 0 and out.strip() == "1"
    code, out, _ = call(capsys, "eval", "--group", "catalog:D8", "--word", "[r,s]",
                        "--bind", "r=r", "--bind", "s=s", "--format", "json")
    assert json.loads(out)["value"] == "r^2"


def test_sets_json(capsys):
    code, out, _ = call(capsys, "sets", "--group", "catalog:K4xS3", "--element", "(c,(1 3 2))",
                        "--set", "e1star", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["order"] == 12
    assert "(b,(1 2 3))" in data["members"]


def test_verify_exit_codes(capsys):
    code, out, _ = call(capsys, "verify", "--claim", "thm5", "--groups", "catalog:S3,catalog:C2")
    assert code == 0 and "failed=0" in out
    code, out, _ = call(capsys, "verify", "--claim", "prop1.4", "--groups", "catalog:S3")
    assert code == 1 and "FAILED" in out


def test_verify_json_schema(capsys):
    code, out, _ = call(capsys, "verify", "--claim", "conj6.1", "--groups", "catalog:K4,catalog:S3",
                        "--format", "json")
    data = json.loads(out)
    assert code == 1
    assert list(data) == ["claim", "instances", "summary", "tool_version"]
    assert data["summary"]["checked"] == len(data["instances"])


def test_search(capsys):
    code, out, _ = call(capsys, "search", "--claim", "conj6.1", "--catalog",
                        "catalog:C2,catalog:S3", "--format", "json")
    data = json.loads(out)
    assert code == 1
    assert data["minimal_counterexample"]["groups"] == ["C2", "S3"]


def test_quotient_and_chain(capsys):
    code, out, _ = call(capsys, "quotient", "--group", "catalog:K4xS3",
                        "--kernel", "(a,e);(b,e)", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["order"] == 6 and data["abelian"] is False
    code, out, _ = call(capsys, "chain", "--group", "catalog:K4xS3", "--links",
                        "|(a,e)|(a,(1 3 2))|(a,e);(b,e);(e,(1 2 3))|*")
    assert code == 0 and out.strip().endswith("verdict: True")
    code, out, _ = call(capsys, "chain", "--group", "catalog:S3", "--links", "|*")
    assert code == 1


def test_analyze(capsys):
    code, out, _ = call(capsys, "analyze", "--group", "catalog:A4", "--format", "json")
    assert code == 0 and json.loads(out)["derived_series_orders"] == [12, 4, 1]


@pytest.mark.parametrize("argv", [
    ["eval", "--group", "catalog:S3", "--word", "[x y]", "--bind", "x=e"],
    ["eval", "--group", "catalog:S3", "--word", "x*y", "--bind", "x=e"],
    ["eval", "--group", "catalog:S3", "--word", "x", "--bind", "x"],
    ["sets", "--group", "catalog:Z9", "--element", "e"],
    ["sets", "--group", "catalog:S3", "--element", "(1 4)"],
    ["sets", "--group", "catalog:S3", "--element", "e", "--n", "0"],
    ["verify", "--claim", "thm9", "--groups", "catalog:S3"],
    ["quotient", "--group", "catalog:S3", "--kernel", "(1 2)"],
    ["chain", "--group", "catalog:S3", "--links", "(1 2)|*"],
    ["sets", "--group", "/nonexistent/file.json", "--element", "e"],
    ["nonsense"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2
    assert err


def test_group_file(tmp_path, capsys):
    path = tmp_path / "c2.json"
    path.write_text(json.dumps({"kind": "table", "table": [[0, 1], [1, 0]], "labels": ["e", "t"]}))
    code, out, _ = call(capsys, "sets", "--group", str(path), "--element", "t", "--set",
                        "centralizer")
    assert code == 0 and out.split() == ["e", "t"]
    path.write_text(json.dumps({"kind": "table", "table": [[0, 1], [1, 0]], "bogus": 1}))
    code, _, err = call(capsys, "sets", "--group", str(path), "--element", "e")
    assert code == 2 and "$.bogus" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "engelgroups", "eval", "--group", "catalog:S3",
                           "--word", "a*b", "--bind", "a=(1 2)", "--bind", "b=(1 2 3)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "(1 3)"
