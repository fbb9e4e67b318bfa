"""Rotation systems, face tracing and the face-incidence vocabulary.

A rotation system lists, for every vertex, its neighbours in cyclic order.
Faces are traced with the usual rule: the arc after ``u -> v`` is
``v -> w`` where ``w`` follows ``u`` in the rotation at ``v``.  The corner of
``v`` between ``rot[v][i]`` and ``rot[v][i+1]`` therefore belongs to the face
containing the arc ``rot[v][i] -> v``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Mapping, Sequence

from .errors import InputError
from .graph import Graph

Arc = tuple[int, int]


@dataclass(frozen=True)
class Face:
    arcs: tuple[Arc, ...]

    @property
    def degree(self) -> int:
        return len(self.arcs)

    @property
    def walk(self) -> tuple[int, ...]:
        """Boundary vertices in walk order, with repetition."""
        return tuple(u for u, _ in self.arcs)

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.walk)

    @cached_property
    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(a) for a in self.arcs)

    def is_cycle(self) -> bool:
        """Boundary walk visits no vertex twice."""
        return len(self.vertex_set) == len(self.arcs)

    def multiplicity(self, v: int) -> int:
        return self.walk.count(v)


class VertexClass(str, Enum):
    BAD = "bad"
    SPECIAL = "special"
    GOOD = "good"
    NOT_A_4_VERTEX = "not-4"


class FaceAdjacency(str, Enum):
    NOT_ADJACENT = "not-adjacent"
    ADJACENT = "adjacent"
    NORMALLY_ADJACENT = "normally-adjacent"


RotationSystem = Mapping[int, Sequence[int]]


class EmbeddedGraph:
    """A connected graph together with a rotation system and its traced faces."""

    def __init__(self, graph: Graph, rotation: RotationSystem):
        _check_rotation(graph, rotation)
        if graph.n == 0 or not graph.is_connected():
            raise InputError("embeddings are only defined for nonempty connected graphs")
        self.graph = graph
        self.rotation: dict[int, tuple[int, ...]] = {v: tuple(rotation[v]) for v in graph.vertices}
        self._succ = {
            v: {r[i]: r[(i + 1) % len(r)] for i in range(len(r))} for v, r in self.rotation.items()
        }
        self.faces: tuple[Face, ...] = tuple(self._trace())
        self.arc_face: dict[Arc, int] = {a: i for i, f in enumerate(self.faces) for a in f.arcs}
        chi = graph.n - graph.m + len(self.faces)
        if (2 - chi) % 2 or chi > 2:
            raise AssertionError(f"Euler characteristic {chi} is impossible for a connected graph")
        self.genus = (2 - chi) // 2

    def _trace(self) -> list[Face]:
        g = self.graph
        if g.m == 0:
            return [Face(())]
        unused = {(u, v) for u in g.vertices for v in g.neighbors(u)}
        faces = []
        for start in sorted(unused):
            if start not in unused:
                continue
            arcs = []
            a = start
            while True:
                unused.discard(a)
                arcs.append(a)
                u, v = a
                a = (v, self._succ[v][u])
                if a == start:
                    break
            i = arcs.index(min(arcs))
            faces.append(Face(tuple(arcs[i:] + arcs[:i])))
        return sorted(faces, key=lambda f: f.arcs)

    @property
    def euler_characteristic(self) -> int:
        return self.graph.n - self.graph.m + len(self.faces)

    def face_index(self, face: Face) -> int:
        return self.arc_face[face.arcs[0]]

    def corner_faces(self, v: int) -> tuple[int, ...]:
        """Face indices at ``v``'s corners, aligned with its rotation."""
        return tuple(self.arc_face[(u, v)] for u in self.rotation[v])

    def face_across(self, arc: Arc) -> int:
        """Face on the other side of the edge traversed by ``arc``."""
        u, v = arc
        return self.arc_face[(v, u)]

    def degree(self, v: int) -> int:
        return self.graph.degree(v)

    def reversed(self) -> EmbeddedGraph:
        """Mirror image: every rotation read backwards."""
        return EmbeddedGraph(self.graph, {v: tuple(reversed(r)) for v, r in self.rotation.items()})

    @cached_property
    def vertex_classes(self) -> dict[int, VertexClass]:
        return {v: classify_4_vertex(self, v) for v in self.graph.vertices}

    def __repr__(self) -> str:
        return f"EmbeddedGraph(n={self.graph.n}, m={self.graph.m}, faces={len(self.faces)}, genus={self.genus})"


def _check_rotation(g: Graph, rot: RotationSystem) -> None:
    if set(rot) != set(g.vertices):
        raise InputError("rotation system must list exactly the graph's vertices")
    for v in g.vertices:
        r = list(rot[v])
        if len(r) != len(set(r)) or set(r) != g.neighbors(v):
            raise InputError(f"rotation at vertex {v} is not a cyclic order of its neighbours")


def trace_faces(g: Graph, rot: RotationSystem) -> EmbeddedGraph:
    return EmbeddedGraph(g, rot)


def embedding_from_rotation(rot: Mapping[int, Sequence[int]]) -> EmbeddedGraph:
    """Build graph and embedding from the rotation lists alone."""
    for v, ns in rot.items():
        for u in ns:
            if v not in rot.get(u, ()):
                raise InputError(f"rotation lists {u} at {v} but not {v} at {u}")
    return EmbeddedGraph(Graph.from_adjacency(rot), rot)


# -- face patterns ----------------------------------------------------

def vertex_face_pattern(e: EmbeddedGraph, v: int) -> tuple[int, ...]:
    return tuple(e.faces[i].degree for i in e.corner_faces(v))


def parse_size(token: str | int):
    """``"3"`` exact, ``"6+"`` at least, ``"5-"`` at most, ``"k"`` anything."""
    if isinstance(token, int):
        return lambda d: d == token
    t = str(token)
    if t == "k":
        return lambda d: True
    if t.endswith("+"):
        lo = int(t[:-1])
        return lambda d: d >= lo
    if t.endswith("-"):
        hi = int(t[:-1])
        return lambda d: d <= hi
    x = int(t)
    return lambda d: d == x


def pattern_windows(e: EmbeddedGraph, v: int, pattern: Sequence[str | int], exact: bool = False) -> list[tuple[int, ...]]:
    """Corner positions at ``v`` where ``pattern`` is read off consecutively.

    Each hit is a tuple of corner indices (into ``e.rotation[v]``) in the
    order matching ``pattern``; both directions around ``v`` are tried.
    With ``exact`` the vertex degree must equal the pattern length,
    otherwise it must be at least that long (the ``(d1, ..., dl, ...)``
    reading).
    """
    sizes = vertex_face_pattern(e, v)
    d, l = len(sizes), len(pattern)
    if d < l or (exact and d != l) or l == 0:
        return []
    preds = [parse_size(t) for t in pattern]
    hits = []
    seen = set()
    for start in range(d):
        for step in (1, -1):
            idx = tuple((start + step * i) % d for i in range(l))
            if idx in seen:
                continue
            seen.add(idx)
            if all(p(sizes[j]) for p, j in zip(preds, idx)):
                hits.append(idx)
    return hits


def has_face_pattern(e: EmbeddedGraph, v: int, pattern: Sequence[str | int], exact: bool = False) -> bool:
    return bool(pattern_windows(e, v, pattern, exact))


def classify_4_vertex(e: EmbeddedGraph, v: int) -> VertexClass:
    if e.degree(v) != 4:
        return VertexClass.NOT_A_4_VERTEX
    if has_face_pattern(e, v, ("3", "3", "3", "3+"), exact=True):
        return VertexClass.BAD
    if has_face_pattern(e, v, ("3", "3", "4", "6+"), exact=True):
        return VertexClass.SPECIAL
    return VertexClass.GOOD


def classify_pattern(pattern: Sequence[int]) -> VertexClass:
    """Classification of a bare cyclic face-size sequence (no embedding needed)."""
    p = tuple(pattern)
    if len(p) != 4:
        return VertexClass.NOT_A_4_VERTEX
    rots = [p[i:] + p[:i] for i in range(4)]
    rots += [tuple(reversed(r)) for r in rots]

    def match(spec):
        preds = [parse_size(t) for t in spec]
        return any(all(f(x) for f, x in zip(preds, r)) for r in rots)

    if match(("3", "3", "3", "3+")):
        return VertexClass.BAD
    if match(("3", "3", "4", "6+")):
        return VertexClass.SPECIAL
    return VertexClass.GOOD


def faces_adjacency(e: EmbeddedGraph, f1: Face | int, f2: Face | int) -> FaceAdjacency:
    a = e.faces[f1] if isinstance(f1, int) else f1
    b = e.faces[f2] if isinstance(f2, int) else f2
    if a == b:
        raise InputError("faces_adjacency needs two distinct faces")
    shared = a.edge_set & b.edge_set
    if not shared:
        return FaceAdjacency.NOT_ADJACENT
    if len(shared) == 1 and a.vertex_set & b.vertex_set == next(iter(shared)):
        return FaceAdjacency.NORMALLY_ADJACENT
    return FaceAdjacency.ADJACENT


# -- counters ---------------------------------------------------------

@dataclass
class EmbeddingStats:
    m: dict[int, Counter] = field(default_factory=dict)
    n: dict[int, Counter] = field(default_factory=dict)
    s: dict[int, int] = field(default_factory=dict)
    n4b: dict[int, int] = field(default_factory=dict)

    def m_at_least(self, v: int, size: int) -> int:
        return sum(c for d, c in self.m[v].items() if d >= size)

    def n4(self, f: int) -> int:
        return self.n[f][4]

    def n5plus(self, f: int) -> int:
        return sum(c for d, c in self.n[f].items() if d >= 5)


def embedding_stats(e: EmbeddedGraph) -> EmbeddingStats:
    """``m_i(v)``, ``n_j(f)``, ``s(f)`` and ``n_4b(v)``, counting corners with multiplicity."""
    g = e.graph
    classes = e.vertex_classes
    st = EmbeddingStats()
    for v in g.vertices:
        st.m[v] = Counter(e.faces[i].degree for i in e.corner_faces(v))
        st.n4b[v] = sum(classes[u] is VertexClass.BAD for u in g.neighbors(v))
    for i, f in enumerate(e.faces):
        st.n[i] = Counter(g.degree(u) for u in f.walk)
        st.s[i] = sum(classes[u] is VertexClass.SPECIAL for u in f.walk)
    return st


def remove_edge(e: EmbeddedGraph, u: int, v: int) -> EmbeddedGraph:
    """Embedding of ``G - uv`` induced by deleting the edge from both rotations."""
    rot = dict(e.rotation)
    rot[u] = tuple(x for x in rot[u] if x != v)
    rot[v] = tuple(x for x in rot[v] if x != u)
    return EmbeddedGraph(e.graph.remove_edge(u, v), rot)


def relabel(e: EmbeddedGraph, mapping: Mapping[int, int]) -> EmbeddedGraph:
    rot = {mapping[v]: tuple(mapping[u] for u in r) for v, r in e.rotation.items()}
    g = Graph(rot.keys(), [(mapping[a], mapping[b]) for a, b in e.graph.edges()])
    return EmbeddedGraph(g, rot)
