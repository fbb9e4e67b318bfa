import random

import networkx as nx
import pytest

from corpus import delaunay_bank, planar_embedding, valid_corpus
from toruscolor.embedding import EmbeddedGraph
from toruscolor.errors import HypothesisViolation, InputError
from toruscolor.families import (
    complete_graph,
    cube_embedding,
    k7_torus,
    planar_k4,
    wheel_grid_torus,
)
from toruscolor.graph import Graph
from toruscolor.structure import (
    ITEMS,
    LemmaViolation,
    Outcome,
    check_hypotheses,
    check_theorem,
    find_houses,
    lemma_scan,
    recheck_violation,
    run_detectors,
    verify_outcome,
)


@pytest.fixture(scope="module")
def bank():
    return delaunay_bank(120, seed=1)


def _random_rotation(g: Graph, seed: int) -> EmbeddedGraph:
    rng = random.Random(seed)
    rot = {}
    for v in g.vertices:
        nb = sorted(g.neighbors(v))
        rng.shuffle(nb)
        rot[v] = nb
    return EmbeddedGraph(g, rot)


def test_hypothesis_order():
    with pytest.raises(HypothesisViolation) as exc:
        check_theorem(k7_torus())
    assert exc.value.name == "k5_minus"
    with pytest.raises(HypothesisViolation) as exc:
        check_theorem(cube_embedding())
    assert exc.value.name == "six_cycle"
    two = Graph(range(6), [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    # a rotation system on a disconnected graph is refused up front
    with pytest.raises(InputError):
        check_hypotheses(EmbeddedGraph(two, {v: sorted(two.neighbors(v)) for v in two.vertices}))


def test_genus_hypothesis():
    g = complete_graph(7)
    e = next(e for s in range(50) if (e := _random_rotation(g, s)).genus > 1)
    with pytest.raises(HypothesisViolation) as exc:
        check_hypotheses(e)
    assert exc.value.name == "genus"


def test_min_degree_outcome():
    res = check_theorem(planar_k4())
    assert res.outcome is Outcome.MIN_DEGREE_LE_3 and res.vertex == 0
    assert verify_outcome(planar_k4(), res)


def test_wheel_grid_gives_kite():
    e = wheel_grid_torus(4, 4)
    res = check_theorem(e)
    assert res.outcome is Outcome.CONFIG_FIG2
    assert verify_outcome(e, res)
    broken = {k: v for k, v in res.mapping.items()}
    broken["N"], broken["W"] = broken["W"], broken["N"]
    assert not verify_outcome(e, type(res)(res.outcome, mapping=broken))


def test_corpus_has_no_counterexample():
    corpus = valid_corpus(80)
    assert len(corpus) >= 50
    for name, e in corpus:
        res = check_theorem(e)
        assert res.outcome is not Outcome.COUNTEREXAMPLE, name
        assert verify_outcome(e, res), name


def test_k7_item_i_everywhere():
    e = k7_torus()
    viol = lemma_scan(e, check_hypotheses_first=False)
    hits = [v for v in viol if v.item == "i"]
    assert sorted(v.vertices[0] for v in hits) == list(range(7))
    assert all(recheck_violation(e, v) for v in viol)


def test_octahedron_bad_edges():
    e = planar_embedding(nx.octahedral_graph())
    viol = lemma_scan(e, check_hypotheses_first=False)
    xiv = [v for v in viol if v.item == "xiv"]
    assert len(xiv) == 12
    assert all(recheck_violation(e, v) for v in viol)


def test_low_degree_rejected():
    with pytest.raises(InputError):
        lemma_scan(planar_k4())


def test_valid_wheel_grids_scan_clean():
    for a, b in [(4, 4), (4, 5), (5, 5)]:
        assert lemma_scan(wheel_grid_torus(a, b)) == []


def test_every_item_fires_in_bank(bank):
    seen = set()
    for e in bank:
        viol = run_detectors(e)
        assert viol == sorted(set(viol), key=LemmaViolation.sort_key)
        for v in viol:
            assert recheck_violation(e, v), v
            seen.add(v.item)
    assert set(ITEMS) - {"L3.1"} <= seen


def test_recheck_rejects_moved_witness(bank):
    checked = 0
    for e in bank[:30]:
        viol = set(run_detectors(e))
        for v in viol:
            if v.vertices and len(v.vertices) == 1:
                for u in e.graph.vertices:
                    moved = LemmaViolation(v.item, (u,), (), v.part)
                    assert recheck_violation(e, moved) == (moved in viol)
                    checked += 1
    assert checked > 100


def test_house_witness():
    e = planar_embedding(nx.octahedral_graph())
    houses = find_houses(e)
    assert houses
    for xs in houses:
        assert recheck_violation(e, LemmaViolation("L3.1", xs))
    x = houses[0]
    assert not recheck_violation(e, LemmaViolation("L3.1", x[:4] + (x[0],)))
    # configurations present, so the house check stays quiet
    assert not any(v.item == "L3.1" for v in run_detectors(e))


def test_violation_dict():
    v = LemmaViolation("v", (), (3, 7), "b")
    assert v.to_dict() == {"item": "v", "witness_vertices": [], "witness_faces": [3, 7], "part": "b"}
    with pytest.raises(InputError):
        recheck_violation(wheel_grid_torus(4, 4), LemmaViolation("xx", (0,)))
