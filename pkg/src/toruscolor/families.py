"""Named graphs and embeddings used as fixtures and CLI examples."""
from __future__ import annotations

from .configurations import ConfigurationId
from .embedding import EmbeddedGraph
from .graph import Graph, configuration_graph


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def k5_minus() -> Graph:
    return Graph.from_edges(5, [(i, j) for i in range(5) for j in range(i + 1, 5) if (i, j) != (3, 4)])


def wheel_graph(spokes: int) -> Graph:
    """Hub 0 joined to the cycle ``1..spokes``."""
    rim = [(1 + i, 1 + (i + 1) % spokes) for i in range(spokes)]
    return Graph.from_edges(spokes + 1, rim + [(0, i) for i in range(1, spokes + 1)])


def with_pendant_paths(g: Graph, targets: dict[int, int], length: int = 1) -> Graph:
    """Hang ``targets[v]`` fresh paths of ``length`` edges off each vertex ``v``."""
    edges = list(g.edges())
    nxt = max(g.vertices, default=-1) + 1
    for v, count in sorted(targets.items()):
        for _ in range(count):
            prev = v
            for _ in range(length):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
    return Graph(range(nxt), edges)


def configuration_host(cid: ConfigurationId | str, length: int = 1) -> tuple[Graph, dict[str, int]]:
    """The configuration with pendant paths raising each of its vertices to degree 4."""
    g, ids = configuration_graph(cid)
    host = with_pendant_paths(g, {v: 4 - g.degree(v) for v in g.vertices}, length)
    return host, ids


# -- embeddings ---------------------------------------------------------

def k7_torus() -> EmbeddedGraph:
    """The triangulation of the torus by K7: rotation ``(+1, +3, +2, -1, -3, -2)``."""
    rot = {i: tuple((i + s) % 7 for s in (1, 3, 2, -1, -3, -2)) for i in range(7)}
    return EmbeddedGraph(complete_graph(7), rot)


def planar_k4() -> EmbeddedGraph:
    rot = {0: (1, 2, 3), 1: (0, 3, 2), 2: (0, 1, 3), 3: (0, 2, 1)}
    return EmbeddedGraph(complete_graph(4), rot)


def cycle_embedding(n: int) -> EmbeddedGraph:
    return EmbeddedGraph(cycle_graph(n), {i: ((i - 1) % n, (i + 1) % n) for i in range(n)})


def cube_embedding() -> EmbeddedGraph:
    """Planar cube: bottom square 0-1-2-3, top square 4-5-6-7 above it."""
    edges = [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7), (0, 4), (1, 5), (2, 6), (3, 7)]
    # bottom face seen from outside, vertices placed ccw as 0,1,2,3 outer and 4..7 inner
    rot = {
        0: (1, 4, 3), 1: (2, 5, 0), 2: (3, 6, 1), 3: (0, 7, 2),
        4: (0, 5, 7), 5: (1, 6, 4), 6: (2, 7, 5), 7: (3, 4, 6),
    }
    return EmbeddedGraph(Graph.from_edges(8, edges), rot)


def wheel_embedding(spokes: int) -> EmbeddedGraph:
    g = wheel_graph(spokes)
    rot = {0: tuple(range(1, spokes + 1))}
    for i in range(spokes):
        v = 1 + i
        prev = 1 + (i - 1) % spokes
        nxt = 1 + (i + 1) % spokes
        rot[v] = (nxt, 0, prev)
    return EmbeddedGraph(g, rot)


# Counterclockwise rotations inside one wheel cluster of the torus grid.
# Local ids: hub 0, rim E=1, N=2, W=3, S=4; "out" marks the external edge.
_WHEEL_ROT = {
    0: (1, 2, 3, 4),
    1: ("out", 2, 0, 4),
    2: ("out", 3, 0, 1),
    3: (0, 2, "out", 4),
    4: (1, 0, 3, "out"),
}


def wheel_grid_torus(a: int, b: int, singles: frozenset[tuple[int, int]] = frozenset()) -> EmbeddedGraph:
    """Toroidal grid ``C_a x C_b`` with each node blown up into a 4-spoke wheel.

    The rim vertex facing a grid neighbour carries the single edge to that
    neighbour's facing rim vertex.  Nodes listed in ``singles`` stay plain
    4-vertices.  With ``a, b >= 4`` and no two singles on a common grid
    square the result has minimum degree 4, no 6-cycle and no K5-minus;
    every hub sits in an induced kite of 4-vertices.
    """
    ids: dict[tuple[int, int, int], int] = {}
    nxt = 0
    for i in range(a):
        for j in range(b):
            for loc in ((0,) if (i, j) in singles else range(5)):
                ids[(i, j, loc)] = nxt
                nxt += 1

    def port(i: int, j: int, side: int) -> int:
        i, j = i % a, j % b
        if (i, j) in singles:
            return ids[(i, j, 0)]
        return ids[(i, j, side)]

    # side 1=E, 2=N, 3=W, 4=S; neighbour across each side and the side it faces
    across = {1: (1, 0, 3), 2: (0, 1, 4), 3: (-1, 0, 1), 4: (0, -1, 2)}
    rot: dict[int, tuple[int, ...]] = {}
    for i in range(a):
        for j in range(b):
            def out(side):
                di, dj, back = across[side]
                return port(i + di, j + dj, back)

            if (i, j) in singles:
                rot[ids[(i, j, 0)]] = tuple(out(s) for s in (1, 2, 3, 4))
                continue
            for loc, order in _WHEEL_ROT.items():
                rot[ids[(i, j, loc)]] = tuple(out(loc) if x == "out" else ids[(i, j, x)] for x in order)
    edges = {(min(u, v), max(u, v)) for u, ns in rot.items() for v in ns}
    return EmbeddedGraph(Graph(range(nxt), sorted(edges)), rot)


def square_grid_torus(a: int, b: int) -> EmbeddedGraph:
    """Plain toroidal grid ``C_a x C_b`` (4-regular quadrangulation)."""
    def vid(i, j):
        return (i % a) * b + (j % b)

    rot = {vid(i, j): (vid(i + 1, j), vid(i, j + 1), vid(i - 1, j), vid(i, j - 1)) for i in range(a) for j in range(b)}
    edges = {(min(u, v), max(u, v)) for u, ns in rot.items() for v in ns}
    return EmbeddedGraph(Graph(range(a * b), sorted(edges)), rot)
