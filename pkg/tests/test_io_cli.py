import json

import pytest

from toruscolor import io
from toruscolor.alon_tarsi import Orientation, eulerian_census
from toruscolor.cli import main
from toruscolor.dp_coloring import Cover, verify_transversal
from toruscolor.errors import InputError
from toruscolor.families import (
    complete_graph,
    cycle_graph,
    k7_torus,
    petersen_graph,
    square_grid_torus,
    wheel_grid_torus,
)
from toruscolor.graph import Graph, verify_configuration_mapping
from toruscolor.weak_degeneracy import DeleteSave, Delete, verify_trace


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out), out


# -- formats -------------------------------------------------------------

@pytest.mark.parametrize("g", [complete_graph(5), cycle_graph(7), petersen_graph(), Graph(range(3), [])])
def test_edge_list_and_graph6_round_trip(g):
    assert io.parse_edge_list(io.format_edge_list(g)) == g
    s = io.format_graph6(g)
    assert io.parse_graph6(s) == g
    assert io.parse_graph6(io.GRAPH6_HEADER + s + "\n") == g


def test_graph6_known_string():
    # "D~{" is K5 in graph6
    assert io.parse_graph6("D~{") == complete_graph(5)
    assert io.format_graph6(complete_graph(5)) == "D~{"


def test_read_graph_detects_header(tmp_path):
    p = write(tmp_path, "g.g6", ">>graph6<<D~{\n")
    assert io.read_graph(p) == complete_graph(5)
    p = write(tmp_path, "plain.g6", "D~{\n")
    assert io.read_graph(p, graph6=True) == complete_graph(5)


@pytest.mark.parametrize("text", ["", "3 2\n0 1\n", "3 1\n0 5\n", "2 1\n0 x\n", "3 1\n0 1 2\n"])
def test_bad_edge_lists(text):
    with pytest.raises(InputError):
        io.parse_edge_list(text)


def test_edge_list_comments():
    g = io.parse_edge_list("# triangle\n3 3\n0 1\n1 2  # spoke\n2 0\n")
    assert g == cycle_graph(3)


def test_bad_graph6():
    with pytest.raises(InputError):
        io.parse_graph6("\x01\x02")
    with pytest.raises(InputError):
        io.parse_graph6(">>graph6<<")


@pytest.mark.parametrize("e", [k7_torus(), square_grid_torus(3, 4), wheel_grid_torus(4, 4)])
def test_rotation_round_trip(e):
    back = io.parse_rotation(json.loads(json.dumps(io.embedding_to_json(e))))
    assert back.graph == e.graph and back.genus == e.genus
    assert [f.degree for f in back.faces] == [f.degree for f in e.faces]


def test_rotation_errors():
    with pytest.raises(InputError):
        io.parse_rotation({"n": 2, "rotations": [[1]]})
    with pytest.raises(InputError):
        io.parse_rotation({"n": 2, "rotations": [[1], []]})
    with pytest.raises(InputError):
        io.parse_rotation({"rotations": []})
    with pytest.raises(InputError):
        io.parse_rotation({"n": 3, "rotations": [[1, 2], [0, 2], [0, 1]]}, graph=cycle_graph(4))


def test_trace_round_trip():
    trace = [DeleteSave(0, 1), Delete(1), Delete(2)]
    assert io.parse_trace(io.trace_to_json(trace)) == trace
    with pytest.raises(InputError):
        io.parse_trace({"op": "delete"})
    with pytest.raises(InputError):
        io.parse_trace([{"op": "explode", "u": 0}])
    with pytest.raises(InputError):
        io.parse_trace([{"op": "deletesave", "u": 0}])


def test_cover_round_trip():
    g = cycle_graph(4)
    c = Cover.build(g, 2, {(0, 1): [(1, 2), (2, 1)], (2, 3): [(1, 1)]})
    back = io.parse_cover(json.loads(json.dumps(io.cover_to_json(c))), g)
    assert back == c
    with pytest.raises(InputError):
        io.parse_cover({"lists": [2, 2, 2, 2], "matchings": [{"edge": [0, 2], "pairs": []}]}, g)
    with pytest.raises(InputError):
        io.parse_cover({"lists": [2, 2]}, g)
    with pytest.raises(InputError):
        io.parse_cover({"lists": [2, 2, 2, 2], "matchings": [{"edge": [0, 1]}]}, g)


def test_orientation_round_trip():
    d = Orientation.from_arcs([(0, 1), (1, 2), (2, 0), (0, 3)])
    assert io.parse_orientation(io.format_orientation(d)) == d
    with pytest.raises(InputError):
        io.parse_orientation("0 - 1\n")
    with pytest.raises(InputError):
        io.parse_orientation("0 > 1 > 2\n")
    with pytest.raises(InputError):
        io.parse_orientation("0 > 1\n", cycle_graph(3))


def test_bad_json_and_missing_file(tmp_path):
    with pytest.raises(InputError):
        io.load_json("{nope", text=True)
    with pytest.raises(InputError):
        io.read_graph(str(tmp_path / "missing.txt"))


# -- command line ----------------------------------------------------------

@pytest.fixture
def files(tmp_path):
    k5 = write(tmp_path, "k5.txt", io.format_edge_list(complete_graph(5)))
    c5 = write(tmp_path, "c5.txt", io.format_edge_list(cycle_graph(5)))
    c4 = write(tmp_path, "c4.txt", io.format_edge_list(cycle_graph(4)))
    e = wheel_grid_torus(4, 4)
    wg = write(tmp_path, "wg.txt", io.format_edge_list(e.graph))
    wg_rot = write(tmp_path, "wg.json", json.dumps(io.embedding_to_json(e)))
    k7 = write(tmp_path, "k7.json", json.dumps(io.embedding_to_json(k7_torus())))
    return dict(k5=k5, c5=c5, c4=c4, wg=wg, wg_rot=wg_rot, k7=k7, dir=tmp_path)


def test_wd_and_verify_trace(capsys, files):
    code, rep, _ = run(capsys, "wd", "--graph", files["k5"])
    assert code == 0 and rep["wd"] == 4
    t = write(files["dir"], "t.json", json.dumps(rep["trace"]))
    code, rep2, _ = run(capsys, "verify-trace", "--graph", files["k5"], "--trace", t, "--k", "4")
    assert code == 0 and rep2 == {"valid": True}
    code, rep3, _ = run(capsys, "verify-trace", "--graph", files["k5"], "--trace", t, "--k", "3")
    assert code == 1 and rep3 == {"valid": False}
    assert verify_trace(complete_graph(5), {v: 4 for v in range(5)}, io.parse_trace(rep["trace"]))


def test_degeneracy(capsys, files):
    code, rep, _ = run(capsys, "degeneracy", "--graph", files["c5"])
    assert code == 0 and rep["degeneracy"] == 2 and sorted(rep["ordering"]) == list(range(5))


def test_at_and_diff(capsys, files):
    code, rep, _ = run(capsys, "at", "--graph", files["c5"])
    assert code == 0 and rep["at"] == 3
    o = write(files["dir"], "o.txt", "\n".join(rep["orientation"]) + "\n")
    code, rep2, _ = run(capsys, "diff", "--orientation", o, "--graph", files["c5"])
    assert code == 0 and rep2["diff"] != 0 and rep2["at_orientation"]
    assert rep2["max_out_degree"] == 2
    d = io.read_orientation(o)
    assert eulerian_census(d).diff == rep2["diff"]


def test_diff_on_directed_cycle(capsys, files):
    o = write(files["dir"], "cyc.txt", "0 > 1\n1 > 2\n2 > 3\n3 > 0\n")
    code, rep, _ = run(capsys, "diff", "--orientation", o)
    assert (rep["ee"], rep["oe"], rep["diff"]) == (2, 0, 2)


def test_dp_color_round_trip(capsys, files):
    twisted = {"lists": [2, 2, 2, 2], "matchings": [
        {"edge": [0, 1], "pairs": [[1, 1], [2, 2]]},
        {"edge": [1, 2], "pairs": [[1, 1], [2, 2]]},
        {"edge": [2, 3], "pairs": [[1, 1], [2, 2]]},
        {"edge": [0, 3], "pairs": [[1, 2], [2, 1]]},
    ]}
    p = write(files["dir"], "tw.json", json.dumps(twisted))
    code, rep, _ = run(capsys, "dp-color", "--graph", files["c4"], "--cover", p)
    assert code == 0 and rep["transversal"] is None
    twisted["lists"] = [3, 2, 2, 2]
    p = write(files["dir"], "tw3.json", json.dumps(twisted))
    code, rep, _ = run(capsys, "dp-color", "--graph", files["c4"], "--cover", p)
    t = {int(v): i for v, i in rep["transversal"].items()}
    assert verify_transversal(io.read_cover(p, cycle_graph(4)), t)


def test_transversal_command(capsys, files):
    cov = {"lists": [1, 1, 1, 1], "matchings": [{"edge": [0, 1], "pairs": [[1, 1]]}]}
    p = write(files["dir"], "c.json", json.dumps(cov))
    code, rep, _ = run(capsys, "transversal", "--graph", files["c4"], "--cover", p, "--k", "1")
    assert code == 0 and rep["transversal"] is None
    code, rep, _ = run(capsys, "transversal", "--graph", files["c4"], "--cover", p, "--k", "2")
    assert rep["transversal"] == {"0": 1, "1": 1, "2": 1, "3": 1}
    assert rep["threshold_4"] is False
    cov["f"] = [[2], [1], [1], [1]]
    p = write(files["dir"], "cf.json", json.dumps(cov))
    code, rep, _ = run(capsys, "transversal", "--graph", files["c4"], "--cover", p)
    assert rep["transversal"] is not None


def test_find_config(capsys, files):
    code, rep, _ = run(capsys, "find-config", "--graph", files["wg"], "--config", "fig2")
    assert code == 0 and rep["config"] == "fig2"
    assert verify_configuration_mapping(wheel_grid_torus(4, 4).graph, "fig2", rep["mapping"])
    code, rep, _ = run(capsys, "find-config", "--graph", files["wg"], "--config", "fig1")
    assert rep["mapping"] is None


def test_k5mm_and_cycles(capsys, files):
    code, rep, _ = run(capsys, "k5mm", "--graph", files["k5"])
    assert rep["k5_minus"] and len(rep["witness"]) == 5
    code, rep, _ = run(capsys, "k5mm", "--graph", files["c5"])
    assert rep == {"k5_minus": False, "witness": None}
    code, rep, _ = run(capsys, "cycles", "--graph", files["c5"], "--k", "5")
    assert code == 0 and sorted(rep["cycle"]) == list(range(5))
    code, rep, _ = run(capsys, "cycles", "--graph", files["c5"], "--k", "4")
    assert rep["cycle"] is None
    code, rep, _ = run(capsys, "cycles", "--graph", files["c5"], "--k", "9")
    assert code == 2 and rep["error"] == "input"


def test_embed_check(capsys, files):
    code, rep, _ = run(capsys, "embed-check", "--embedding", files["k7"])
    assert code == 0 and rep["genus"] == 1 and rep["faces"] == 14 and rep["face_sizes"] == {"3": 14}
    code, rep, _ = run(capsys, "embed-check", "--embedding", files["wg_rot"], "--graph", files["k5"])
    assert code == 2


def test_discharge(capsys, files):
    code, rep, _ = run(capsys, "discharge", "--embedding", files["k7"])
    assert code == 0 and rep["total"] == "0" and rep["ledger"] == []
    code, rep, _ = run(capsys, "discharge", "--embedding", files["wg_rot"], "--epsilon", "1/100", "--eta", "1/50")
    assert rep["conserved"]
    code, rep, _ = run(capsys, "discharge", "--embedding", files["wg_rot"], "--rho", "1/2")
    assert code == 2


def test_theorem_and_lemma_scan(capsys, files):
    code, rep, _ = run(capsys, "theorem-check", "--embedding", files["wg_rot"])
    assert code == 0 and rep["outcome"] == "config-fig2"
    code, rep, _ = run(capsys, "theorem-check", "--embedding", files["k7"])
    assert code == 1 and rep["name"] == "k5_minus"
    code, rep, _ = run(capsys, "lemma-scan", "--embedding", files["wg_rot"])
    assert code == 0 and rep == {"violations": []}
    code, rep, _ = run(capsys, "lemma-scan", "--embedding", files["k7"], "--no-hypotheses")
    assert code == 1 and {v["item"] for v in rep["violations"]} >= {"i"}


def test_missing_argument(capsys, files):
    code, rep, _ = run(capsys, "wd")
    assert code == 2 and "--graph" in rep["message"]


def test_bound_exceeded(capsys, files, monkeypatch):
    code, rep, _ = run(capsys, "wd", "--graph", files["k5"], "--bound", "3")
    assert code == 3 and rep["error"] == "bound"
    monkeypatch.setenv("TORUSCOLOR_BOUND", "3")
    code, rep, _ = run(capsys, "wd", "--graph", files["k5"])
    assert code == 3
    code, rep, _ = run(capsys, "wd", "--graph", files["k5"], "--bound", "10")
    assert code == 0
    monkeypatch.setenv("TORUSCOLOR_BOUND", "lots")
    code, rep, _ = run(capsys, "wd", "--graph", files["k5"])
    assert code == 2


def test_output_is_deterministic(capsys, files):
    outs = set()
    for _ in range(3):
        outs.add(run(capsys, "discharge", "--embedding", files["wg_rot"])[2])
    assert len(outs) == 1
    _, _, pretty = run(capsys, "discharge", "--embedding", files["k7"], "--json")
    assert pretty.startswith("{\n")
