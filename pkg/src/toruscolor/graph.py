"""Simple undirected graphs and the structural searches built on them."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

import networkx as nx

from .configurations import Configuration, ConfigurationId, get_configuration
from .errors import InputError


class Graph:
    """Immutable simple graph on integer vertex ids.

    Ids need not be contiguous: deleting a vertex keeps the others' ids.
    """

    __slots__ = ("vertices", "_adj", "_hash")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        self.vertices: tuple[int, ...] = tuple(sorted(set(vertices)))
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in edges:
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if u not in adj or v not in adj:
                raise InputError(f"edge {u}-{v} has an endpoint outside the vertex set")
            if v in adj[u]:
                raise InputError(f"parallel edge {u}-{v}")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls(range(n), edges)

    @classmethod
    def from_adjacency(cls, adj: Mapping[int, Iterable[int]]) -> Graph:
        edges = {(min(u, v), max(u, v)) for u, ns in adj.items() for v in ns}
        return cls(adj.keys(), sorted(edges))

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise InputError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return sorted((u, v) for u in self.vertices for v in self._adj[u] if u < v)

    def degrees(self) -> dict[int, int]:
        return {v: len(self._adj[v]) for v in self.vertices}

    # -- derived graphs ------------------------------------------------

    def remove_vertex(self, u: int) -> Graph:
        if u not in self._adj:
            raise InputError(f"unknown vertex {u}")
        return self.subgraph(v for v in self.vertices if v != u)

    def subgraph(self, vs: Iterable[int]) -> Graph:
        keep = set(vs)
        for v in keep:
            if v not in self._adj:
                raise InputError(f"unknown vertex {v}")
        return Graph(keep, [(u, v) for u, v in self.edges() if u in keep and v in keep])

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise InputError(f"{u}-{v} is not an edge")
        e = (min(u, v), max(u, v))
        return Graph(self.vertices, [x for x in self.edges() if x != e])

    def relabeled(self) -> tuple[Graph, dict[int, int]]:
        """Copy with ids ``0..n-1`` (in id order) and the old -> new map."""
        new = {v: i for i, v in enumerate(self.vertices)}
        return Graph(range(self.n), [(new[u], new[v]) for u, v in self.edges()]), new

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges())
        return g

    # -- connectivity --------------------------------------------------

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vertices, tuple(self.edges())))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise InputError("minimum degree of the empty graph is undefined")
    return min(g.degree(v) for v in g.vertices)


def find_k5_minus(g: Graph) -> list[int] | None:
    """Five vertices spanning at least 9 edges, or None.

    Such a set always contains a triangle whose three vertices have two
    further common neighbours, which is what we search for.
    """
    for a in g.vertices:
        na = g.neighbors(a)
        for b in sorted(na):
            if b <= a:
                continue
            for c in sorted(na & g.neighbors(b)):
                if c <= b:
                    continue
                common = sorted(na & g.neighbors(b) & g.neighbors(c))
                if len(common) >= 2:
                    return sorted([a, b, c] + common[:2])
    return None


def contains_k5_minus(g: Graph) -> bool:
    return find_k5_minus(g) is not None


def has_cycle_of_length(g: Graph, k: int) -> bool:
    """True iff ``g`` has a (not necessarily induced) cycle on exactly ``k`` vertices."""
    if not 3 <= k <= 8:
        raise InputError(f"cycle length must lie in 3..8, got {k}")
    return find_cycle_of_length(g, k) is not None


def find_cycle_of_length(g: Graph, k: int) -> list[int] | None:
    """A ``k``-cycle as a vertex list starting at its smallest vertex, or None."""
    for s in g.vertices:
        if g.degree(s) < 2:
            continue
        path = [s]
        on_path = {s}

        def extend(x: int) -> bool:
            if len(path) == k:
                return s in g.neighbors(x)
            for y in sorted(g.neighbors(x)):
                if y > s and y not in on_path:
                    path.append(y)
                    on_path.add(y)
                    if extend(y):
                        return True
                    path.pop()
                    on_path.discard(y)
            return False

        if extend(s):
            return path
    return None


# -- induced configurations ---------------------------------------------

def find_induced_configuration(g: Graph, cid: ConfigurationId | str) -> dict[str, int] | None:
    """First induced copy of a configuration whose vertices all have host degree 4.

    Pattern labels are matched in their fixed order against host vertices in
    increasing id, so the answer is deterministic.
    """
    conf = get_configuration(cid)
    candidates = [v for v in g.vertices if g.degree(v) == conf.host_degree]
    labels = conf.labels
    mapping: dict[str, int] = {}
    used: set[int] = set()

    def place(i: int) -> bool:
        if i == len(labels):
            return True
        lab = labels[i]
        for v in candidates:
            if v in used:
                continue
            if all(conf.adjacent(lab, labels[j]) == g.has_edge(v, mapping[labels[j]]) for j in range(i)):
                mapping[lab] = v
                used.add(v)
                if place(i + 1):
                    return True
                del mapping[lab]
                used.discard(v)
        return False

    return dict(mapping) if place(0) else None


def verify_configuration_mapping(g: Graph, cid: ConfigurationId | str, mapping: Mapping[str, int]) -> bool:
    """Independent recheck of a mapping returned by :func:`find_induced_configuration`."""
    conf = get_configuration(cid)
    if set(mapping) != set(conf.labels):
        return False
    image = list(mapping.values())
    if len(set(image)) != len(image) or any(v not in g for v in image):
        return False
    if any(g.degree(v) != conf.host_degree for v in image):
        return False
    return all(
        conf.adjacent(a, b) == g.has_edge(mapping[a], mapping[b])
        for a, b in combinations(conf.labels, 2)
    )


def configuration_graph(cid: ConfigurationId | str) -> tuple[Graph, dict[str, int]]:
    """The bare pattern as a graph on ``0..k-1`` plus its label -> id map."""
    conf = get_configuration(cid)
    ids = {lab: i for i, lab in enumerate(conf.labels)}
    return Graph.from_edges(len(ids), [(ids[a], ids[b]) for a, b in conf.edges]), ids


# -- blocks -------------------------------------------------------------

@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components (bridges count as K2 blocks), sorted by vertex ids."""
    h = g.to_networkx()
    blocks = sorted((frozenset(b) for b in nx.biconnected_components(h)), key=lambda b: sorted(b))
    return BlockDecomposition(tuple(blocks), frozenset(nx.articulation_points(h)))


def is_gdp_tree(g: Graph) -> bool:
    """Connected graph whose every block is a cycle or a complete graph."""
    if g.n == 0 or not g.is_connected():
        raise InputError("is_gdp_tree needs a nonempty connected graph")
    for block in block_decomposition(g).blocks:
        k = len(block)
        e = g.subgraph(block).m
        if not (e == k * (k - 1) // 2 or (k >= 3 and e == k)):
            return False
    return True
