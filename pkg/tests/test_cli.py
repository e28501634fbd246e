import json

import pytest

from graphconf.cli import main
from graphconf.gio import load_graph, to_json
from graphconf.graphs import family


@pytest.fixture
def g6(tmp_path):
    def write(name, g):
        p = tmp_path / name
        p.write_text(to_json(g) + "\n")
        return str(p)

    return write


def test_graph_family_and_formats(capsys):
    assert main(["graph", "family", "complete", "4"]) == 0
    assert capsys.readouterr().out.strip() == "C~"
    assert main(["graph", "family", "cycle", "4", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert len(obj["vertices"]) == 4 and len(obj["edges"]) == 4


def test_graph_make_complement_union_betti1(tmp_path, capsys, g6):
    spec = tmp_path / "g.json"
    spec.write_text(json.dumps({"vertices": [0, 1, 2], "edges": [[0, 1]]}))
    assert main(["graph", "make", str(spec), "--format", "json"]) == 0
    made = json.loads(capsys.readouterr().out)
    assert made["edges"] == [[0, 1]]

    k3 = g6("k3.json", family("complete", 3))
    assert main(["graph", "complement", k3, "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["edges"] == []

    assert main(["graph", "union", k3, k3, "--format", "json"]) == 0
    assert len(json.loads(capsys.readouterr().out)["vertices"]) == 6

    assert main(["graph", "betti1", k3]) == 0
    assert capsys.readouterr().out.strip() == "1"

    assert main(["graph", "subdivide", k3, "--pieces", "3", "--format", "json"]) == 0
    assert len(json.loads(capsys.readouterr().out)["edges"]) == 9


def test_homology_json_and_table(capsys, g6):
    c3 = g6("c3.json", family("cycle", 3))
    assert main(["homology", "--graph", c3, "-n", "2", "--unordered"]) == 0
    captured = capsys.readouterr()
    obj = json.loads(captured.out)
    assert obj["betti"][:2] == [1, 1]  # unordered 2 points on a circle
    assert "subdivision" in captured.err

    assert main(["homology", "--graph", c3, "-n", "1", "--no-subdivision",
                 "--format", "table"]) == 0
    out = capsys.readouterr().out
    assert "betti" in out and "torsion" in out


def test_minor_search_and_gtm(capsys, g6):
    k3 = g6("k3.json", family("cycle", 3))
    c6 = g6("c6.json", family("cycle", 6))
    assert main(["minor", "--pattern", k3, "--host", c6, "--kind", "tm"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["exists"] and obj["witness"] is not None

    tree = g6("t.json", family("star", 3))
    assert main(["minor", "--gtm-k", "1", "--graph", tree]) == 0
    assert json.loads(capsys.readouterr().out)["member"] is True
    assert main(["minor", "--gtm-k", "1", "--graph", k3]) == 0
    assert json.loads(capsys.readouterr().out)["member"] is False


def test_cograph_commands(tmp_path, capsys, g6):
    p4 = g6("p4.json", family("path", 4))
    k22 = g6("k22.json", family("complete_bipartite", 2, 2))
    assert main(["cograph", "recognize", p4]) == 0
    assert json.loads(capsys.readouterr().out)["is_cograph"] is False
    assert main(["cograph", "recognize", k22]) == 0
    assert json.loads(capsys.readouterr().out)["is_cograph"] is True

    assert main(["cograph", "cotree", k22]) == 0
    tree_json = capsys.readouterr().out
    tp = tmp_path / "cotree.json"
    tp.write_text(tree_json)
    assert main(["cograph", "reconstruct", str(tp), "--format", "json"]) == 0
    back = json.loads(capsys.readouterr().out)
    assert sorted(map(tuple, back["edges"])) == sorted(
        family("complete_bipartite", 2, 2).edges
    )

    assert main(["cograph", "support-report", k22, "-n", "2"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["bound"] == 4
    assert all(r["violations"] == 0 for r in rep["rows"])

    # P_4 is not a cograph, so cotree extraction is an input error
    assert main(["cograph", "cotree", p4]) == 2
    assert "error" in capsys.readouterr().err


def test_generate_gens_and_stage(capsys, g6):
    c3 = g6("c3.json", family("cycle", 3))
    assert main(["generate", "--graph", c3, "-n", "2", "-i", "1",
                 "--unordered", "--gens", c3]) == 0
    captured = capsys.readouterr()
    obj = json.loads(captured.out)
    assert obj["is_generated"] is True

    assert main(["generate", "--graph", c3, "-n", "2", "-i", "1",
                 "--unordered", "--stage", "betti:1"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["full"] is True

    assert main(["generate", "--graph", c3, "-n", "2", "-i", "1"]) == 2
    capsys.readouterr()


def test_bad_input_exit_codes(tmp_path, capsys):
    missing = str(tmp_path / "nope.json")
    assert main(["graph", "betti1", missing]) == 2
    assert main(["graph", "family", "no_such_family"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["graph", "make", str(bad)]) == 2
    capsys.readouterr()
