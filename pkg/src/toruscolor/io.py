"""Readers and writers for the plain-text and JSON file formats."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable

import networkx as nx

from .alon_tarsi import Orientation
from .dp_coloring import Cover
from .embedding import EmbeddedGraph
from .errors import InputError
from .graph import Graph
from .weak_degeneracy import Operation

GRAPH6_HEADER = ">>graph6<<"


def _read(path_or_text: str | Path, text: bool) -> str:
    if text:
        return str(path_or_text)
    try:
        return Path(path_or_text).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path_or_text}: {exc}") from None


def parse_edge_list(text: str) -> Graph:
    """``n m`` on the first line, then ``m`` lines ``u v`` with 0-based ids."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InputError("empty edge list")
    try:
        n, m = (int(x) for x in lines[0].split())
        edges = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
    except ValueError:
        raise InputError("edge list must contain integers: 'n m' then 'u v' lines") from None
    if any(len(e) != 2 for e in edges):
        raise InputError("each edge line needs exactly two vertex ids")
    if len(edges) != m:
        raise InputError(f"header promises {m} edges, found {len(edges)}")
    if any(not (0 <= x < n) for e in edges for x in e):
        raise InputError("edge endpoint outside 0..n-1")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    g, _ = g.relabeled()
    return "\n".join([f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    s = s.strip().splitlines()[0] if s.strip() else ""
    if not s:
        raise InputError("empty graph6 string")
    try:
        h = nx.from_graph6_bytes(s.encode("ascii"))
    except Exception as exc:  # networkx raises a mix of error types here
        raise InputError(f"bad graph6 string: {exc}") from None
    return Graph(h.nodes, h.edges)


def format_graph6(g: Graph) -> str:
    h, _ = g.relabeled()
    return nx.to_graph6_bytes(h.to_networkx(), header=False).decode("ascii").strip()


def read_graph(path: str | Path, graph6: bool = False, text: bool = False) -> Graph:
    """Edge list, or graph6 when flagged or when the header is present."""
    data = _read(path, text)
    if graph6 or data.lstrip().startswith(GRAPH6_HEADER):
        return parse_graph6(data)
    return parse_edge_list(data)


def load_json(path, text: bool = False):
    data = _read(path, text)
    try:
        return json.loads(data)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


def parse_rotation(obj, graph: Graph | None = None) -> EmbeddedGraph:
    if not isinstance(obj, dict) or "rotations" not in obj or "n" not in obj:
        raise InputError('rotation file needs {"n": ..., "rotations": [...]}')
    n, rots = obj["n"], obj["rotations"]
    if not isinstance(rots, list) or len(rots) != n:
        raise InputError(f"expected {n} rotation lists")
    rot = {v: [int(u) for u in r] for v, r in enumerate(rots)}
    for v, r in rot.items():
        if any(not 0 <= u < n for u in r):
            raise InputError(f"rotation at {v} names a vertex outside 0..{n - 1}")
        for u in r:
            if v not in rot[u]:
                raise InputError(f"rotation lists {u} at {v} but not {v} at {u}")
    g = Graph.from_adjacency(rot)
    if graph is not None and graph != g:
        raise InputError("rotation system does not match the edge list")
    return EmbeddedGraph(g, rot)


def read_embedding(path, graph: Graph | None = None, text: bool = False) -> EmbeddedGraph:
    return parse_rotation(load_json(path, text), graph)


def embedding_to_json(e: EmbeddedGraph) -> dict:
    vs = e.graph.vertices
    if vs != tuple(range(len(vs))):
        raise InputError("rotation files need vertex ids 0..n-1")
    return {"n": len(vs), "rotations": [list(e.rotation[v]) for v in vs]}


def parse_trace(obj) -> list[Operation]:
    if not isinstance(obj, list):
        raise InputError("trace must be a JSON list")
    try:
        return [Operation.from_dict(d) for d in obj]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad trace entry: {exc}") from None


def read_trace(path, text: bool = False) -> list[Operation]:
    return parse_trace(load_json(path, text))


def trace_to_json(trace: Iterable[Operation]) -> list[dict]:
    return [op.to_dict() for op in trace]


def parse_cover(obj, graph: Graph) -> Cover:
    if not isinstance(obj, dict) or "lists" not in obj:
        raise InputError('cover file needs {"lists": [...], "matchings": [...]}')
    sizes = obj["lists"]
    if len(sizes) != graph.n:
        raise InputError("one list size per vertex is required")
    matchings = {}
    try:
        for entry in obj.get("matchings", []):
            u, v = (int(x) for x in entry["edge"])
            if not graph.has_edge(u, v):
                raise InputError(f"matching given on non-edge {u}-{v}")
            matchings[(u, v)] = [(int(i), int(j)) for i, j in entry["pairs"]]
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad matching entry: {exc}") from None
    return Cover.build(graph, dict(zip(graph.vertices, (int(s) for s in sizes))), matchings)


def read_cover(path, graph: Graph, text: bool = False) -> Cover:
    return parse_cover(load_json(path, text), graph)


def cover_to_json(c: Cover) -> dict:
    return {
        "lists": [c.sizes[v] for v in c.graph.vertices],
        "matchings": [
            {"edge": [u, v], "pairs": sorted([i, j] for i, j in pairs)}
            for (u, v), pairs in sorted(c.matchings.items()) if pairs
        ],
    }


def parse_orientation(text: str, graph: Graph | None = None) -> Orientation:
    """One ``u > v`` per line; the underlying graph is taken from ``graph`` if given."""
    arcs = []
    for ln in text.splitlines():
        ln = ln.split("#", 1)[0].strip()
        if not ln:
            continue
        parts = ln.split(">")
        try:
            u, v = int(parts[0]), int(parts[1])
            if len(parts) != 2:
                raise ValueError
        except (ValueError, IndexError):
            raise InputError(f"bad orientation line {ln!r}, expected 'u > v'") from None
        arcs.append((u, v))
    if graph is None:
        return Orientation.from_arcs(arcs)
    return Orientation(graph, arcs)


def read_orientation(path, graph: Graph | None = None, text: bool = False) -> Orientation:
    return parse_orientation(_read(path, text), graph)


def format_orientation(d: Orientation) -> str:
    return "".join(f"{u} > {v}\n" for u, v in d.arcs)


def dumps(report) -> str:
    """Deterministic JSON: sorted keys, fixed separators."""
    return json.dumps(report, sort_keys=True, indent=2)
