"""Covers, DP-colorings, list colorings and strictly f-degenerate transversals.

Cover vertices are pairs ``(v, i)`` with ``i`` running over ``1..s_v``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import comb, prod
from typing import Iterable, Mapping

from .errors import InputError, SearchBoundExceeded
from .graph import Graph
from .weak_degeneracy import degeneracy

CoverVertex = tuple[int, int]
Transversal = dict[int, int]

DEFAULT_PRODUCT_BOUND = 10**9
DEFAULT_ORACLE_BOUND = 10**6


@dataclass(frozen=True)
class Cover:
    """A cover of ``graph``: list sizes and one (possibly partial) matching per edge.

    ``matchings[(u, v)]`` with ``u < v`` holds pairs ``(i, j)`` meaning that
    ``(u, i)`` and ``(v, j)`` are adjacent in the cover graph.
    """

    graph: Graph
    sizes: Mapping[int, int]
    matchings: Mapping[tuple[int, int], frozenset[tuple[int, int]]]

    def __post_init__(self):
        g = self.graph
        if set(self.sizes) != set(g.vertices):
            raise InputError("cover must give a list size for every vertex")
        if any(s < 0 for s in self.sizes.values()):
            raise InputError("list sizes must be nonnegative")
        for (u, v), pairs in self.matchings.items():
            if u > v or not g.has_edge(u, v):
                raise InputError(f"matching on {u}-{v} does not sit on an edge (u < v)")
            left = [i for i, _ in pairs]
            right = [j for _, j in pairs]
            if len(set(left)) != len(left) or len(set(right)) != len(right):
                raise InputError(f"pairs on edge {u}-{v} do not form a matching")
            if not all(1 <= i <= self.sizes[u] for i in left) or not all(1 <= j <= self.sizes[v] for j in right):
                raise InputError(f"matching on {u}-{v} uses an index outside the lists")

    @classmethod
    def build(cls, g: Graph, sizes: Mapping[int, int] | int, matchings: Mapping = ()) -> Cover:
        """Normalise input; ``sizes`` may be a constant and edges may be given in either order."""
        if isinstance(sizes, int):
            sizes = {v: sizes for v in g.vertices}
        norm: dict[tuple[int, int], frozenset] = {e: frozenset() for e in g.edges()}
        for (u, v), pairs in dict(matchings).items():
            if u < v:
                norm[(u, v)] = frozenset((int(i), int(j)) for i, j in pairs)
            else:
                norm[(v, u)] = frozenset((int(j), int(i)) for i, j in pairs)
        return cls(g, dict(sizes), norm)

    @classmethod
    def straight(cls, g: Graph, sizes: Mapping[int, int] | int) -> Cover:
        """Matchings ``i <-> i``: DP-coloring reduces to list coloring with lists ``1..s_v``."""
        c = cls.build(g, sizes)
        m = {(u, v): frozenset((i, i) for i in range(1, min(c.sizes[u], c.sizes[v]) + 1)) for u, v in g.edges()}
        return cls(g, c.sizes, m)

    def with_matching(self, u: int, v: int, pairs: Iterable[tuple[int, int]]) -> Cover:
        m = dict(self.matchings)
        if u < v:
            m[(u, v)] = frozenset(pairs)
        else:
            m[(v, u)] = frozenset((j, i) for i, j in pairs)
        return Cover(self.graph, self.sizes, m)

    def cover_vertices(self) -> list[CoverVertex]:
        return [(v, i) for v in self.graph.vertices for i in range(1, self.sizes[v] + 1)]

    def adjacent(self, a: CoverVertex, b: CoverVertex) -> bool:
        (u, i), (v, j) = a, b
        if u == v:
            return False
        if u > v:
            (u, i), (v, j) = (v, j), (u, i)
        return (i, j) in self.matchings.get((u, v), ())


def _check_product(c: Cover, bound: int, what: str) -> None:
    size = prod(max(1, s) for s in c.sizes.values())
    if size > bound:
        raise SearchBoundExceeded(what, size, bound)


def _search(c: Cover, accept, bound: int, what: str) -> Transversal | None:
    """First transversal (vertex order, smallest index first) whose every prefix passes ``accept``."""
    _check_product(c, bound, what)
    if any(c.sizes[v] == 0 for v in c.graph.vertices):
        return None
    order = list(c.graph.vertices)
    chosen: dict[int, int] = {}

    def rec(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for i in range(1, c.sizes[v] + 1):
            chosen[v] = i
            if accept(chosen, v) and rec(k + 1):
                return True
            del chosen[v]
        return False

    return dict(chosen) if rec(0) else None


def dp_color(c: Cover, bound: int = DEFAULT_PRODUCT_BOUND) -> Transversal | None:
    """An independent transversal of the cover, or None."""
    def ok(chosen, v):
        i = chosen[v]
        return not any(u in chosen and c.adjacent((v, i), (u, chosen[u])) for u in c.graph.neighbors(v))

    return _search(c, ok, bound, "DP-coloring search")


def verify_transversal(c: Cover, t: Mapping[int, int]) -> bool:
    """One cover vertex per base vertex, and no two chosen vertices matched."""
    if set(t) != set(c.graph.vertices):
        return False
    if any(not 1 <= t[v] <= c.sizes[v] for v in t):
        return False
    return not any(c.adjacent((u, t[u]), (v, t[v])) for u, v in c.graph.edges())


# -- strict f-degeneracy ------------------------------------------------

def is_strictly_f_degenerate(adj: Mapping, f: Mapping) -> bool:
    """Every nonempty subgraph has a vertex ``x`` of degree below ``f(x)``.

    Checked by peeling: deleting vertices never raises degrees, so the
    property holds iff repeatedly deleting such vertices empties the graph.
    """
    alive = set(adj)
    deg = {x: sum(y in alive for y in adj[x]) for x in alive}
    stack = [x for x in alive if deg[x] < f[x]]
    removed = set()
    while stack:
        x = stack.pop()
        if x in removed:
            continue
        removed.add(x)
        for y in adj[x]:
            if y in alive and y not in removed:
                deg[y] -= 1
                if deg[y] < f[y]:
                    stack.append(y)
    return len(removed) == len(alive)


def chosen_subgraph(c: Cover, t: Mapping[int, int]) -> dict[CoverVertex, set[CoverVertex]]:
    """Adjacency of the cover graph induced on the chosen cover vertices."""
    adj: dict[CoverVertex, set[CoverVertex]] = {(v, i): set() for v, i in t.items()}
    for u, v in c.graph.edges():
        if u in t and v in t and c.adjacent((u, t[u]), (v, t[v])):
            adj[(u, t[u])].add((v, t[v]))
            adj[(v, t[v])].add((u, t[u]))
    return adj


def _check_cover_f(c: Cover, f: Mapping[CoverVertex, int]) -> None:
    for x in c.cover_vertices():
        if x not in f:
            raise InputError(f"f is undefined at cover vertex {x}")
        if f[x] not in (0, 1, 2):
            raise InputError(f"f{x} = {f[x]} is outside {{0, 1, 2}}")


def f_threshold_holds(c: Cover, f: Mapping[CoverVertex, int], threshold: int = 4) -> bool:
    """``f(v, 1) + ... + f(v, s_v) >= threshold`` at every base vertex."""
    return all(sum(f[(v, i)] for i in range(1, c.sizes[v] + 1)) >= threshold for v in c.graph.vertices)


def strictly_f_degenerate_transversal(
    c: Cover, f: Mapping[CoverVertex, int], bound: int = DEFAULT_PRODUCT_BOUND
) -> Transversal | None:
    """A transversal whose chosen cover subgraph is strictly ``f``-degenerate, or None.

    The property is hereditary, so partial choices that already fail are pruned.
    """
    _check_cover_f(c, f)

    def ok(chosen, v):
        return is_strictly_f_degenerate(chosen_subgraph(c, chosen), f)

    return _search(c, ok, bound, "strictly f-degenerate transversal search")


def verify_strictly_f_degenerate_transversal(c: Cover, f: Mapping[CoverVertex, int], t: Mapping[int, int]) -> bool:
    if set(t) != set(c.graph.vertices) or any(not 1 <= t[v] <= c.sizes[v] for v in t):
        return False
    return is_strictly_f_degenerate(chosen_subgraph(c, t), f)


# -- list coloring and arboricity ---------------------------------------

def is_L_colorable(g: Graph, lists: Mapping[int, Iterable], bound: int = DEFAULT_PRODUCT_BOUND) -> dict | None:
    """A proper coloring with ``phi(v)`` in ``lists[v]``, or None."""
    lists = {v: sorted(set(lists[v])) for v in g.vertices}
    size = prod(max(1, len(l)) for l in lists.values())
    if size > bound:
        raise SearchBoundExceeded("list coloring search", size, bound)
    order = list(g.vertices)
    phi: dict = {}

    def rec(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for col in lists[v]:
            if all(phi.get(u) != col for u in g.neighbors(v)):
                phi[v] = col
                if rec(k + 1):
                    return True
                del phi[v]
        return False

    return dict(phi) if rec(0) else None


def verify_L_coloring(g: Graph, lists: Mapping[int, Iterable], phi: Mapping) -> bool:
    if set(phi) != set(g.vertices):
        return False
    if any(phi[v] not in set(lists[v]) for v in g.vertices):
        return False
    return all(phi[u] != phi[v] for u, v in g.edges())


def _is_forest(g: Graph, part: Iterable[int]) -> bool:
    sub = g.subgraph(part)
    return sub.m == sub.n - len(sub.components())


def vertex_arboricity_at_most(g: Graph, k: int, bound: int = DEFAULT_PRODUCT_BOUND) -> list[frozenset[int]] | None:
    """Split the vertices into at most ``k`` parts each inducing a forest, or None."""
    if k < 0:
        raise InputError("k must be nonnegative")
    if g.n == 0:
        return []
    if k == 0:
        return None
    size = k ** g.n
    if size > bound:
        raise SearchBoundExceeded("vertex arboricity search", size, bound)
    order = list(g.vertices)
    parts: list[set[int]] = []

    def rec(idx: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        # a fresh part only once, to skip relabelled duplicates
        for p in range(min(len(parts) + 1, k)):
            if p == len(parts):
                parts.append(set())
            parts[p].add(v)
            if _is_forest(g, parts[p]) and rec(idx + 1):
                return True
            parts[p].discard(v)
            if not parts[p]:
                parts.pop()
        return False

    if not rec(0):
        return None
    return [frozenset(p) for p in parts]


def verify_forest_partition(g: Graph, parts: Iterable[Iterable[int]], k: int | None = None) -> bool:
    parts = [set(p) for p in parts]
    if k is not None and len(parts) > k:
        return False
    flat = [v for p in parts for v in p]
    if len(flat) != len(set(flat)) or set(flat) != set(g.vertices):
        return False
    return all(_is_forest(g, p) for p in parts)


# -- exact oracles ------------------------------------------------------

def chromatic_number(g: Graph, bound: int = DEFAULT_PRODUCT_BOUND) -> int:
    """Least ``k`` with a proper ``k``-coloring, by exhaustive backtracking."""
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if is_L_colorable(g, {v: range(k) for v in g.vertices}, bound) is not None:
            return k
    return g.n


def _spanning_forest_edges(g: Graph) -> set[tuple[int, int]]:
    seen: set[int] = set()
    tree = set()
    for s in g.vertices:
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        for x in queue:
            for y in sorted(g.neighbors(x)):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
                    tree.add((min(x, y), max(x, y)))
    return tree


def full_covers(g: Graph, k: int, bound: int = DEFAULT_ORACLE_BOUND):
    """All ``k``-fold covers with perfect matchings, up to renaming inside lists.

    Renaming the colours at each vertex lets every spanning-forest edge
    carry the identity matching, so only the remaining edges vary.  Partial
    matchings are never needed: removing pairs only helps a transversal.
    """
    tree = _spanning_forest_edges(g)
    free = [e for e in g.edges() if e not in tree]
    perms = list(permutations(range(1, k + 1)))
    total = len(perms) ** len(free)
    if total > bound:
        raise SearchBoundExceeded("cover enumeration", total, bound)
    ident = frozenset((i, i) for i in range(1, k + 1))
    base = {e: ident for e in tree}
    for choice in product(perms, repeat=len(free)):
        m = dict(base)
        for e, p in zip(free, choice):
            m[e] = frozenset((i, p[i - 1]) for i in range(1, k + 1))
        yield Cover(g, {v: k for v in g.vertices}, m)


def first_uncolorable_cover(g: Graph, k: int, bound: int = DEFAULT_ORACLE_BOUND) -> Cover | None:
    for c in full_covers(g, k, bound):
        if dp_color(c) is None:
            return c
    return None


def dp_chromatic_number(g: Graph, bound: int = DEFAULT_ORACLE_BOUND) -> int:
    """Least ``k`` such that every ``k``-fold cover has an independent transversal."""
    if g.n == 0:
        return 0
    for k in range(chromatic_number(g), degeneracy(g) + 1):
        if first_uncolorable_cover(g, k, bound) is None:
            return k
    return degeneracy(g) + 1


def choice_number(g: Graph, bound: int = DEFAULT_ORACLE_BOUND) -> int:
    """Least ``k`` such that ``g`` is ``k``-choosable; exhaustive, tiny graphs only.

    Lists are drawn from ``k * n`` colours, which suffices up to renaming.
    """
    if g.n == 0:
        return 0
    for k in range(chromatic_number(g), degeneracy(g) + 1):
        universe = range(k * g.n)
        total = comb(len(universe), k) ** g.n
        if total > bound:
            raise SearchBoundExceeded("choosability enumeration", total, bound)
        options = list(combinations(universe, k))
        if all(
            is_L_colorable(g, dict(zip(g.vertices, lists))) is not None
            for lists in product(options, repeat=g.n)
        ):
            return k
    return degeneracy(g) + 1
