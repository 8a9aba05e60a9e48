import json
import subprocess
import sys
from pathlib import Path

import pytest

from nfree.cli import main, to_dot
from nfree.hypergraph import Hypergraph

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return path


# ---------------------------------------------------------------- golden files

GOLDEN_CASES = [
    (("anticliques", DATA / "k3.json", "--count"), "anticliques_k3_count.out", 0),
    (("indep", DATA / "tri3.json", "--n", "2"), "indep_tri3_n2.out", 1),
    (("indep", DATA / "tri3.json", "--n", "3"), "indep_tri3_n3.out", 0),
]


@pytest.mark.parametrize("argv,golden,code", GOLDEN_CASES, ids=[g for _, g, _ in GOLDEN_CASES])
def test_golden_output(capsys, argv, golden, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert out == (GOLDEN / golden).read_text()
    assert err == ""


def test_tri3_witness_content(capsys):
    _, out, _ = run(capsys, "indep", DATA / "tri3.json", "--n", "2", "--verify-witness")
    report = json.loads(out)
    assert report["holds"] is False
    assert report["witness"]["kind"] == "PropAFail"
    assert report["witness"]["R"] == ["a", "b", "c"]
    assert report["witness"]["signs"] == [1, 1, 1]
    assert report["witness_verified"] is True


def test_output_is_deterministic(capsys):
    first = run(capsys, "ba", DATA / "path3.json", "--atoms")
    second = run(capsys, "ba", DATA / "path3.json", "--atoms")
    assert first == second


# ---------------------------------------------------------------- subcommands


def test_anticliques_listing(capsys):
    code, out, _ = run(capsys, "anticliques", DATA / "path3.json")
    assert code == 0
    assert json.loads(out) == [[], ["a"], ["b"], ["c"], ["a", "c"]]


def test_ba_summary_and_size(capsys):
    code, out, _ = run(capsys, "ba", DATA / "path3.json")
    doc = json.loads(out)
    assert code == 0
    assert list(doc) == ["ground", "generators", "atoms", "size"]
    assert doc["generators"]["a"] == ["{a}", "{a,c}"]
    assert run(capsys, "ba", DATA / "k3.json", "--size")[1] == "16\n"


def test_ba_atoms_have_signs(capsys):
    _, out, _ = run(capsys, "ba", DATA / "tri3.json", "--atoms")
    atoms = json.loads(out)
    assert len(atoms) == 7
    assert atoms[0] == {"atom": ["{}"], "signs": {"a": 0, "b": 0, "c": 0}}


def test_bc_on_poset_warns_about_closure(capsys):
    code, out, err = run(capsys, "bc", DATA / "chain3.json", "--size")
    assert code == 0
    assert out == "256\n"
    assert json.loads(err) == {"warning": "transitive closure added pairs", "added": 1}


def test_bc_refuses_hypergraph(capsys):
    code, out, err = run(capsys, "bc", DATA / "tri3.json")
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "NotAGraph"


def test_indep_omega(capsys):
    code, out, _ = run(capsys, "indep", DATA / "k3.json", "--n", "omega")
    assert code == 0
    assert json.loads(out)["n"] == "omega"


def test_perp(capsys):
    code, out, _ = run(capsys, "perp", DATA / "path3.json")
    doc = json.loads(out)
    assert code == 0
    assert doc["perp"] == doc["input"]
    assert doc["reconstruction"] == "verified"


def test_perp_unchecked_on_non_minimal_input(capsys, tmp_path):
    path = write(tmp_path, "g.json", {"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["a", "b", "c"]]})
    code, out, _ = run(capsys, "perp", path, "--unchecked")
    doc = json.loads(out)
    assert code == 0
    assert doc["perp"]["edges"] == [["a", "b"]]
    assert doc["matches_minimalized_input"] is True


def test_spectrum(capsys):
    code, out, _ = run(capsys, "spectrum", "--powerset", "3", "--n", "2")
    doc = json.loads(out)
    assert code == 0
    assert doc["spectrum"] == [1, 2] and doc["i_n"] == 1


def test_spectrum_cap_and_sampling(capsys):
    code, _, err = run(capsys, "spectrum", "--powerset", "6", "--n", "2")
    assert code == 3
    assert json.loads(err)["error"] == "TooLargeForExhaustive"
    code, out, _ = run(capsys, "spectrum", "--powerset", "6", "--n", "2", "--sampled", "--samples", "5")
    assert code == 0
    assert json.loads(out)["exhaustive"] is False


def test_extend_success(capsys):
    code, out, _ = run(capsys, "extend", DATA / "path3.json", DATA / "map_ok.json", DATA / "p2.json")
    doc = json.loads(out)
    assert code == 0 and doc["extends"] is True
    assert doc["generators"] == {"a": ["p"], "b": ["q"], "c": []}


def test_extend_failure_with_replay(capsys):
    code, out, _ = run(
        capsys, "extend", DATA / "k3.json", DATA / "map_bad.json", DATA / "p2.json", "--verify-witness"
    )
    doc = json.loads(out)
    assert code == 1
    assert doc["witness"] == {"signs": {"a": 1, "b": 1, "c": 0}, "image": ["p"]}
    assert doc["witness_verified"] is True


def test_extend_into_anticlique_target(capsys):
    code, out, _ = run(capsys, "extend", DATA / "k3.json", DATA / "map_k3_self.json", DATA / "k3.json")
    assert code == 0
    assert json.loads(out)["generators"]["a"] == ["{a}"]


def test_extend_map_as_pairs(capsys, tmp_path):
    m = write(tmp_path, "m.json", {"map": [["a", ["p"]], ["b", ["q"]], ["c", []]]})
    code, _, _ = run(capsys, "extend", DATA / "path3.json", m, DATA / "p2.json")
    assert code == 0


def test_extend_incomplete_map(capsys, tmp_path):
    m = write(tmp_path, "m.json", {"map": {"a": ["p"]}})
    code, _, err = run(capsys, "extend", DATA / "path3.json", m, DATA / "p2.json")
    assert code == 2
    assert "undefined" in json.loads(err)["message"]


def test_nary(capsys):
    code, out, _ = run(capsys, "nary", DATA / "tri3.json", "--n", "2", "--verify-witness")
    doc = json.loads(out)
    assert code == 1
    assert doc["witness"] == [["a", "+"], ["b", "+"], ["c", "+"]]
    assert doc["witness_verified"] is True
    assert run(capsys, "nary", DATA / "tri3.json", "--n", "3")[0] == 0
    _, out, _ = run(capsys, "nary", DATA / "k3.json")
    assert json.loads(out) == {"least_n": 2, "max_edge_size": 2, "one_ary": False}


def test_op_union_and_join(capsys, tmp_path):
    out_path = tmp_path / "u.json"
    assert run(capsys, "op", "union", DATA / "k3.json", DATA / "k3.json", "-o", out_path)[0] == 0
    union = json.loads(out_path.read_text())
    assert len(union["vertices"]) == 6 and len(union["edges"]) == 6
    code, out, _ = run(capsys, "op", "join", DATA / "path3.json", DATA / "k3.json")
    assert code == 0
    assert len(json.loads(out)["edges"]) == 2 + 3 + 9
    code, _, err = run(capsys, "op", "join", DATA / "tri3.json", DATA / "k3.json")
    assert code == 2
    assert json.loads(err)["error"] == "JoinOnNonGraph"


def test_export_dot(capsys, tmp_path):
    out_path = tmp_path / "g.dot"
    assert run(capsys, "export-dot", DATA / "tri3.json", "-o", out_path)[0] == 0
    text = out_path.read_text()
    assert text.startswith("graph G {")
    assert '"edge:0" [shape=box, label="{a,b,c}"];' in text
    assert '"edge:0" -- "a";' in text


def test_dot_plain_edges():
    g = Hypergraph(("x", "y"), [("x", "y")])
    assert to_dot(g) == 'graph G {\n  "x";\n  "y";\n  "x" -- "y";\n}\n'


# ---------------------------------------------------------------- errors


def test_missing_file(capsys):
    code, out, err = run(capsys, "anticliques", "nope.json")
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "InputError"


def test_bad_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{")
    assert run(capsys, "anticliques", path)[0] == 2


def test_invalid_hypergraph(capsys, tmp_path):
    path = write(tmp_path, "g.json", {"vertices": ["a"], "edges": [["a"]]})
    code, _, err = run(capsys, "anticliques", path)
    assert code == 2
    assert json.loads(err)["error"] == "InvalidHypergraph"


def test_declared_graph_must_be_two_uniform(capsys, tmp_path):
    path = write(tmp_path, "g.json", {"kind": "graph", "vertices": ["a", "b", "c"], "edges": [["a", "b", "c"]]})
    assert run(capsys, "anticliques", path)[0] == 2


def test_usage_error_is_json(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 2
    assert json.loads(err)["error"] == "UsageError"


def test_bad_degree(capsys):
    assert run(capsys, "indep", DATA / "k3.json", "--n", "0")[0] == 2


def test_vertex_cap_flag(capsys):
    code, _, err = run(capsys, "anticliques", DATA / "k3.json", "--max-vertices", "2")
    assert code == 3
    assert json.loads(err)["error"] == "TooManyVertices"


def test_env_cap_applies_in_fresh_process(tmp_path):
    env = {"NFREE_MAX_VERTICES": "2", "PATH": "/usr/bin:/bin"}
    proc = subprocess.run(
        [sys.executable, "-m", "nfree", "anticliques", str(DATA / "k3.json")],
        capture_output=True,
        text=True,
        env={**env, "PYTHONPATH": str(HERE.parent / "src")},
    )
    assert proc.returncode == 3
    assert json.loads(proc.stderr)["error"] == "TooManyVertices"
