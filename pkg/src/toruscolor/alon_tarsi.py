"""Orientations, Eulerian sub-digraph census and Alon-Tarsi numbers."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping

from .configurations import FIG7_ARCS, FIG7_STUBS, ConfigurationId, get_configuration
from .errors import InputError, SearchBoundExceeded
from .graph import Graph
from .weak_degeneracy import degeneracy, degeneracy_ordering

DEFAULT_ARC_BOUND = 24
DEFAULT_EDGE_BOUND = 16


class Orientation:
    """One direction per edge of an underlying simple graph."""

    __slots__ = ("graph", "arcs", "_out")

    def __init__(self, graph: Graph, arcs: Iterable[tuple[int, int]]):
        arcs = tuple(sorted(arcs))
        seen = set()
        for u, v in arcs:
            if not graph.has_edge(u, v):
                raise InputError(f"arc {u}->{v} is not an edge of the graph")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise InputError(f"edge {e} oriented twice")
            seen.add(e)
        if len(seen) != graph.m:
            raise InputError("orientation leaves some edges undirected")
        self.graph = graph
        self.arcs = arcs
        out = {v: 0 for v in graph.vertices}
        for u, _ in arcs:
            out[u] += 1
        self._out = out

    @classmethod
    def from_arcs(cls, arcs: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> Orientation:
        arcs = list(arcs)
        vs = set(vertices) | {x for a in arcs for x in a}
        return cls(Graph(vs, arcs), arcs)

    def out_degree(self, v: int) -> int:
        return self._out[v]

    def max_out_degree(self) -> int:
        return max(self._out.values(), default=0)

    def restricted(self, vs: Iterable[int]) -> Orientation:
        keep = set(vs)
        return Orientation(self.graph.subgraph(keep), [a for a in self.arcs if a[0] in keep and a[1] in keep])

    def reversed(self) -> Orientation:
        return Orientation(self.graph, [(v, u) for u, v in self.arcs])

    def __eq__(self, other) -> bool:
        return isinstance(other, Orientation) and self.graph == other.graph and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.graph, self.arcs))

    def __repr__(self) -> str:
        return f"Orientation({list(self.arcs)})"


def disjoint_union(a: Orientation, b: Orientation) -> Orientation:
    """Union of two orientations, shifting ``b``'s ids past ``a``'s."""
    shift = max(a.graph.vertices, default=-1) + 1 - min(b.graph.vertices, default=0)
    vs = list(a.graph.vertices) + [v + shift for v in b.graph.vertices]
    arcs = list(a.arcs) + [(u + shift, v + shift) for u, v in b.arcs]
    return Orientation(Graph(vs, arcs), arcs)


@dataclass(frozen=True)
class DiffResult:
    ee: int
    oe: int

    @property
    def diff(self) -> int:
        return self.ee - self.oe


def eulerian_census(d: Orientation, bound: int = DEFAULT_ARC_BOUND) -> DiffResult:
    """Count spanning Eulerian sub-digraphs of ``d`` by parity of arc count.

    Arcs are processed in a breadth-first order; the running in-minus-out
    balance of every vertex is the DP state, and a vertex whose last arc has
    been decided must be balanced.
    """
    arcs = list(d.arcs)
    if len(arcs) > bound:
        raise SearchBoundExceeded("Eulerian census", len(arcs), bound)
    if not arcs:
        return DiffResult(1, 0)
    order = _bfs_order(d.graph)
    pos = {v: i for i, v in enumerate(order)}
    arcs.sort(key=lambda a: (min(pos[a[0]], pos[a[1]]), max(pos[a[0]], pos[a[1]])))
    ends = [(pos[u], pos[v]) for u, v in arcs]
    last = {}
    for i, (a, b) in enumerate(ends):
        last[a] = i
        last[b] = i
    closing = [tuple(x for x in (a, b) if last[x] == i) for i, (a, b) in enumerate(ends)]
    m = len(arcs)

    @lru_cache(maxsize=None)
    def count(i: int, bal: tuple[int, ...]) -> tuple[int, int]:
        if i == m:
            return (1, 0)
        a, b = ends[i]
        even, odd = 0, 0
        # skip arc i
        if all(bal[x] == 0 for x in closing[i]):
            e0, o0 = count(i + 1, bal)
            even += e0
            odd += o0
        # take arc i: tail loses one, head gains one
        nb = list(bal)
        nb[a] -= 1
        nb[b] += 1
        if all(nb[x] == 0 for x in closing[i]):
            e1, o1 = count(i + 1, tuple(nb))
            even += o1
            odd += e1
        return even, odd

    ee, oe = count(0, tuple([0] * len(order)))
    return DiffResult(ee, oe)


def _bfs_order(g: Graph) -> list[int]:
    order, seen = [], set()
    for s in g.vertices:
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        for x in queue:
            order.append(x)
            for y in sorted(g.neighbors(x)):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return order


def is_at_orientation(d: Orientation, bound: int = DEFAULT_ARC_BOUND) -> bool:
    return eulerian_census(d, bound).diff != 0


def acyclic_orientation(g: Graph, order: Iterable[int] | None = None) -> Orientation:
    """Orient every edge from the later vertex of ``order`` to the earlier one."""
    # reversed peeling order: each vertex then points at most degeneracy(g) times
    order = list(order) if order is not None else degeneracy_ordering(g)[::-1]
    rank = {v: i for i, v in enumerate(order)}
    return Orientation(g, [(u, v) if rank[u] > rank[v] else (v, u) for u, v in g.edges()])


def orientations_with_max_out(g: Graph, max_out: int):
    """All orientations of ``g`` with every out-degree at most ``max_out``."""
    edges = g.edges()
    out = {v: 0 for v in g.vertices}
    chosen: list[tuple[int, int]] = []

    def rec(i: int):
        if i == len(edges):
            yield list(chosen)
            return
        u, v = edges[i]
        for a, b in ((u, v), (v, u)):
            if out[a] < max_out:
                out[a] += 1
                chosen.append((a, b))
                yield from rec(i + 1)
                chosen.pop()
                out[a] -= 1

    yield from rec(0)


def alon_tarsi_witness(g: Graph, bound: int = DEFAULT_EDGE_BOUND) -> tuple[int, Orientation]:
    """``AT(g)`` together with an AT-orientation of maximum out-degree ``AT(g) - 1``."""
    if g.m > bound:
        raise SearchBoundExceeded("Alon-Tarsi search", g.m, bound)
    top = degeneracy(g)
    if g.m == 0:
        return 1, Orientation(g, [])
    lower = max(1, -(-g.m // g.n))  # some vertex has out-degree >= m/n
    for k in range(lower, top):
        for arcs in orientations_with_max_out(g, k):
            d = Orientation(g, arcs)
            if is_at_orientation(d):
                return k + 1, d
    return top + 1, acyclic_orientation(g)


def alon_tarsi_number(g: Graph, bound: int = DEFAULT_EDGE_BOUND) -> int:
    return alon_tarsi_witness(g, bound)[0]


def lemma_L_check(d: Orientation, x1: Iterable[int], x2: Iterable[int]) -> bool:
    """With all cross arcs running ``x1 -> x2``: AT(d) iff AT(d[x1]) and AT(d[x2])."""
    x1, x2 = set(x1), set(x2)
    if x1 & x2 or x1 | x2 != set(d.graph.vertices):
        raise InputError("x1 and x2 must partition the vertex set")
    for u, v in d.arcs:
        if u in x2 and v in x1:
            raise InputError(f"cross arc {u}->{v} points from x2 to x1")
    whole = is_at_orientation(d)
    return whole == (is_at_orientation(d.restricted(x1)) and is_at_orientation(d.restricted(x2)))


# -- reducible orientations ---------------------------------------------

@dataclass(frozen=True)
class ReducibleOrientation:
    config: ConfigurationId
    arcs: tuple[tuple[str, str], ...]
    stubs: Mapping[str, int]

    def internal_out_degree(self, label: str) -> int:
        return sum(a == label for a, _ in self.arcs)

    def total_out_degree(self, label: str) -> int:
        return self.internal_out_degree(label) + self.stubs[label]

    def as_orientation(self) -> tuple[Orientation, dict[str, int]]:
        conf = get_configuration(self.config)
        ids = {lab: i for i, lab in enumerate(conf.labels)}
        return Orientation.from_arcs([(ids[a], ids[b]) for a, b in self.arcs], ids.values()), ids

    def flipped(self, arc: tuple[str, str]) -> ReducibleOrientation:
        if arc not in self.arcs:
            raise InputError(f"{arc} is not an arc of this orientation")
        arcs = tuple((b, a) if (a, b) == arc else (a, b) for a, b in self.arcs)
        return ReducibleOrientation(self.config, arcs, self.stubs)


def reducible_orientation(cid: ConfigurationId | str) -> ReducibleOrientation:
    cid = ConfigurationId(cid)
    return ReducibleOrientation(cid, FIG7_ARCS[cid], dict(FIG7_STUBS[cid]))


REDUCIBLE_ORIENTATIONS = {cid: reducible_orientation(cid) for cid in ConfigurationId}


def verify_reducible_orientation(r: ReducibleOrientation) -> bool:
    conf = get_configuration(r.config)
    drawn = {frozenset(a) for a in r.arcs}
    if len(drawn) != len(r.arcs) or drawn != {frozenset(e) for e in conf.edges}:
        return False
    if set(r.stubs) != set(conf.labels):
        return False
    if any(r.total_out_degree(lab) > 3 for lab in conf.labels):
        return False
    d, _ = r.as_orientation()
    return is_at_orientation(d)


def _induced_isomorphism(g: Graph, gamma: list[int], cid: ConfigurationId) -> dict[str, int] | None:
    conf = get_configuration(cid)
    if len(gamma) != len(conf.labels):
        return None
    labels = conf.labels
    for perm in _perms(gamma):
        m = dict(zip(labels, perm))
        if all(conf.adjacent(a, b) == g.has_edge(m[a], m[b]) for i, a in enumerate(labels) for b in labels[i + 1:]):
            return m
    return None


def _perms(items: list[int]):
    from itertools import permutations

    return permutations(sorted(items))


def extend_at_orientation(g: Graph, gamma: Iterable[int], d_rest: Orientation, r: ReducibleOrientation) -> Orientation:
    """Orient ``g`` from an orientation of ``g - gamma`` and a reducible orientation of ``g[gamma]``.

    Internal edges follow ``r``, every edge leaving ``gamma`` points out of
    it, and the remaining edges keep their direction in ``d_rest``.
    """
    gamma = sorted(set(gamma))
    mapping = _induced_isomorphism(g, gamma, r.config)
    if mapping is None:
        raise InputError("gamma does not induce the configuration of r")
    rest = [v for v in g.vertices if v not in set(gamma)]
    if d_rest.graph != g.subgraph(rest):
        raise InputError("d_rest is not an orientation of g - gamma")
    inside = set(gamma)
    arcs = [(mapping[a], mapping[b]) for a, b in r.arcs]
    arcs += [(u, v) if u in inside else (v, u) for u, v in g.edges() if (u in inside) != (v in inside)]
    arcs += list(d_rest.arcs)
    d = Orientation(g, arcs)
    if verify_reducible_orientation(r) and all(g.degree(v) <= 4 for v in gamma):
        worst = max(d.out_degree(v) for v in gamma)
        if worst > 3:
            raise AssertionError(f"extended orientation has out-degree {worst} inside gamma")
    return d


def all_orientations(g: Graph):
    edges = g.edges()
    for bits in product((0, 1), repeat=len(edges)):
        yield Orientation(g, [(u, v) if b == 0 else (v, u) for (u, v), b in zip(edges, bits)])
