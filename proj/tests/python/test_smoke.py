import json
import os
import subprocess

import pytest

import treegraph as tg


def test_builtin_counts():
    assert tg.spanning_tree_count(tg.builtin("cycle:4")) == 16
    assert tg.spanning_tree_count(tg.builtin("complete:4")) == 64
    assert tg.spanning_tree_count(tg.builtin("hypercube:2")) == 16
    assert tg.spanning_tree_count(tg.builtin("dicycle:5")) == 5


def test_strong_connectivity_and_subsets():
    g = tg.builtin("dicycle:3")
    assert tg.is_strongly_connected(g)
    subsets = tg.strongly_connected_subsets(g)
    assert [0] in subsets and [0, 1, 2] in subsets and [0, 1] not in subsets
    assert tg.scc_components(g, [0, 1]) == [[0], [1]]


def test_json_round_trip():
    g = tg.builtin("cycle:3")
    doc = json.loads(g.to_json())
    assert doc["vertices"] == ["1", "2", "3"]
    back = tg.from_json(json.dumps(doc))
    assert back.to_json() == g.to_json()


def test_multiplicity_table_complete_graph():
    table = dict()
    for w, m in tg.multiplicity_table(tg.builtin("complete:4")):
        table[frozenset(w)] = m
    n = 4
    for w, m in table.items():
        k = len(w)
        expected = 1 if k == n else (k - 1) * (n - 1) ** (n - k - 1)
        assert m == expected
    # the signed-sum oracle agrees
    for w, m in table.items():
        assert tg.athanasiadis_multiplicity(tg.builtin("complete:4"), sorted(w)) == m


def test_matrix_tree_count():
    cube = tg.builtin("hypercube:3")
    total = sum(int(tg.matrix_tree_count(cube, [v])) for v in range(cube.vertex_count))
    assert total == 3072


def test_tree_graph_shape():
    doc = tg.tree_graph(tg.builtin("cycle:3"))
    assert len(doc["vertices"]) == 9
    assert len(doc["edges"]) == 18
    assert len(doc["projection"]["roots"]) == 9


def test_verify_reports():
    rep = tg.verify(tg.builtin("cycle:3"), trials=2, seed=7)
    assert rep["ok"]
    names = {c["check"] for c in rep["checks"]}
    assert names == {"main-theorem", "minor-identity", "spanning-ratio", "adjacency-factorization"}
    # determinism: identical call, identical report
    assert tg.verify(tg.builtin("cycle:3"), trials=2, seed=7) == rep


def test_guards_and_errors():
    with pytest.raises(tg.InputError):
        tg.from_json(json.dumps({"vertices": ["a"], "edges": [{"s": 0, "t": 9}]}))
    with pytest.raises(tg.GuardError):
        tg.spanning_tree_count(tg.builtin("complete:20"))


CLI = os.environ.get("TREEGRAPH_CLI")


@pytest.mark.skipif(not CLI, reason="TREEGRAPH_CLI not set")
def test_cli_reports_are_byte_identical():
    cmd = [CLI, "verify", "--builtin", "cycle:3", "--seed", "11", "--trials", "2"]
    a = subprocess.run(cmd, capture_output=True, check=True)
    b = subprocess.run(cmd, capture_output=True, check=True)
    assert a.stdout == b.stdout
    rep = json.loads(a.stdout)
    assert rep["ok"]


@pytest.mark.skipif(not CLI, reason="TREEGRAPH_CLI not set")
def test_cli_exit_codes(tmp_path):
    path = tmp_path / "path.json"
    path.write_text(json.dumps({"vertices": ["a", "b"], "edges": [{"s": 0, "t": 1}]}))
    not_sc = subprocess.run([CLI, "analyze", "--input", str(path)], capture_output=True)
    assert not_sc.returncode == 2
    guard = subprocess.run([CLI, "analyze", "--builtin", "complete:20"], capture_output=True)
    assert guard.returncode == 3
    ok = subprocess.run([CLI, "verify", "--builtin", "complete:3", "--format", "text"],
                        capture_output=True)
    assert ok.returncode == 0


@pytest.mark.skipif(not CLI, reason="TREEGRAPH_CLI not set")
def test_cli_multigraph_input(tmp_path):
    path = tmp_path / "multi.json"
    path.write_text(json.dumps({
        "multi": True,
        "vertices": ["1", "2"],
        "edges": [{"s": 0, "t": 1}, {"s": 1, "t": 0}, {"s": 1, "t": 0}],
    }))
    out = subprocess.run([CLI, "analyze", "--input", str(path)], capture_output=True, check=True)
    rep = json.loads(out.stdout)
    assert rep["graph"]["subdivided_multigraph"] is True
    # per root: originals give 2 + 1, midpoints inherit their arc source: 2 + 1 + 1
    assert rep["tree_count"] == 7
