import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from sorder.cli import parse_graph_input, run
from sorder.families import complete, kite, path, star, turan
from sorder.graph_core import canonical_form, to_graph6

P4, CLAW = to_graph6(path(4)), to_graph6(star(4))


def call(*argv, cache=None):
    out, err = io.StringIO(), io.StringIO()
    args = list(argv) + ["--cache-dir", str(cache) if cache else ""]
    code = run(args, out, err)
    return code, out.getvalue(), err.getvalue()


def schema(name):
    text = resources.files("sorder").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def check(name, text):
    obj = json.loads(text)
    jsonschema.validate(obj, schema(name))
    return obj


def test_moments_example():
    code, out, _ = call("moments", "--g6", "Bw")
    assert code == 0
    assert check("moments", out) == {"n": 3, "moments": ["3", "0", "6"]}


def test_moments_inputs_and_kmax():
    code, out, _ = call("moments", "--family", "kite:n=8,t=4", "--kmax", "3")
    assert code == 0 and check("moments", out)["moments"] == ["8", "0", "20", "24"]
    code, out, _ = call("moments", "--json", '{"n":3,"edges":[[0,1],[1,2],[0,2]]}')
    assert json.loads(out)["moments"] == ["3", "0", "6"]
    code, out, _ = call("moments", "--g6", "Bw", "--format", "csv")
    assert out.splitlines() == ["k,moment", "0,3", "1,0", "2,6"]
    code, out, _ = call("moments", "--g6", "Bw", "--format", "table")
    assert out.splitlines()[0].split() == ["k", "moment"]


def test_big_moments_are_strings():
    code, out, _ = call("moments", "--family", "complete:n=20", "--kmax", "40")
    assert int(check("moments", out)["moments"][40]) == 19**40 + 19


def test_compare_example():
    code, out, _ = call("compare", "--a", P4, "--b", CLAW)
    assert code == 0 and check("compare", out) == {"outcome": "equal"}
    code, out, _ = call("compare", "--a", "cycle:n=4", "--b", "kite:n=4,t=3")
    assert check("compare", out) == {"outcome": "less", "index": 3}
    code, _, err = call("compare", "--a", P4, "--b", "Bw")
    assert code == 1 and err


def test_family_and_coeffs(tmp_path):
    code, out, _ = call("family", "kite:n=8,t=4")
    obj = check("family", out)
    assert obj["canonical"] == canonical_form(kite(8, 4)) and obj["n"] == 8
    code, out, _ = call("coeffs", "--k", "4", cache=tmp_path)
    obj = check("coeffs", out)
    assert sorted(e["coeff"] for e in obj["entries"]) == [2, 4, 8]
    assert (tmp_path / "expansion-k4.json").exists()


def test_enumerate_and_sort(tmp_path):
    code, out, _ = call("enumerate", "--n", "5", "--clique", "4", "--graphs", cache=tmp_path)
    obj = check("enumerate", out)
    assert obj["count"] == 3 and len(obj["graphs"]) == 3
    assert (tmp_path / "n5-clique4.g6").exists()
    code, out, _ = call("sort", "--n", "5", "--clique", "4", cache=tmp_path)
    obj = check("sort", out)
    assert obj["group_count"] == 3 and obj["groups"][-1] == [canonical_form(turan(5, 4))]
    src = tmp_path / "in.g6"
    src.write_text(f"{P4}\n{CLAW}\n")
    code, out, _ = call("sort", "--input", str(src))
    assert check("sort", out)["groups"] == [sorted([canonical_form(path(4)), canonical_form(star(4))])]
    code, out, _ = call("sort", "--n", "7", "--clique", "3", "--head", "1", "--tail", "1")
    assert len(check("sort", out)["groups"]) == 2


def test_verify_example_passes():
    code, out, _ = call("verify", "theorem3.5", "--n", "8", "--t", "4")
    obj = check("verify", out)
    assert code == 0
    assert obj["summary"] == {"pass": 1, "fail": 0, "not_applicable": 0}
    assert obj["reports"][0]["theorem"] == "first-segment"


def test_verify_failure_exit_code():
    code, out, _ = call("verify", "last-segment", "--n", "6", "--t", "3")
    assert code == 2 and check("verify", out)["summary"]["fail"] == 1


def test_verify_other_checks():
    code, out, _ = call("verify", "path-shift", "--trials", "20", "--seed", "5")
    assert check("verify", out)["reports"][0]["seed"] == 5
    code, out, _ = call("verify", "theorem4.5", "--n", "7", "--t", "4")
    assert json.loads(out)["reports"][0]["theorem"] == "minimal-class-chromatic"
    code, out, _ = call("verify", "identities")
    assert code == 0 and len(check("verify", out)["reports"]) == 5
    code, out, _ = call("verify", "edge-bound", "--n", "6", "--t", "4", "--format", "csv")
    assert out.splitlines() == ["theorem,parameters,status", "edge-bound,n=6;t=4,pass"]
    code, out, _ = call("verify", "first-segment", "--n", "7", "--t", "4", "--format", "table")
    assert code == 0 and "not_applicable" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["moments"],
        ["moments", "--g6", "Bw", "--json", '{"n":1,"edges":[]}'],
        ["moments", "--g6", "B~"],
        ["moments", "--json", "{oops"],
        ["moments", "--family", "kite:n=3,t=5"],
        ["bogus"],
        ["verify", "theorem9.9", "--n", "5", "--t", "3"],
        ["verify", "last-segment", "--n", "5"],
        ["verify", "last-segment", "--n", "12", "--t", "3"],
        ["enumerate", "--n", "5", "--clique", "7"],
        ["coeffs", "--k", "20"],
        ["sort", "--n", "5"],
        ["moments", "--g6", "Bw", "--jobs", "0"],
    ],
)
def test_domain_errors_exit_one(argv):
    code, out, err = call(*argv)
    assert code == 1 and err.startswith("sorder: ") and out == ""


def test_output_is_byte_identical_across_runs():
    for argv in (["sort", "--n", "6", "--chromatic", "3"], ["verify", "coalescence", "--trials", "30"]):
        assert call(*argv) == call(*argv)


def test_parse_graph_input():
    assert parse_graph_input(family="kite:n=8,t=4") == kite(8, 4)
    assert parse_graph_input(json_text='{"n":3,"edges":[[0,1],[1,2],[0,2]]}') == complete(3)
    with pytest.raises(ValueError):
        parse_graph_input(g6="Bw", json_text="{}")
    with pytest.raises(ValueError):
        parse_graph_input()


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "sorder", "compare", "--a", P4, "--b", CLAW, "--cache-dir", ""],
        capture_output=True, text=True, cwd=tmp_path,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"outcome": "equal"}
