"""Delete / DeleteSave semantics, weak f-degeneracy search and certificates."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InputError, SearchBoundExceeded
from .graph import Graph, is_gdp_tree

DEFAULT_VERTEX_BOUND = 14

DegFunction = Mapping[int, int]


@dataclass(frozen=True)
class Operation:
    """``Delete(u)`` when ``w`` is None, otherwise ``DeleteSave(u, w)``."""

    u: int
    w: int | None = None

    @property
    def op(self) -> str:
        return "delete" if self.w is None else "deletesave"

    def to_dict(self) -> dict:
        d = {"op": self.op, "u": self.u}
        if self.w is not None:
            d["w"] = self.w
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> Operation:
        op = d.get("op")
        if op == "delete":
            return cls(int(d["u"]))
        if op == "deletesave":
            return cls(int(d["u"]), int(d["w"]))
        raise InputError(f"unknown operation {op!r}")

    def __str__(self) -> str:
        return f"Delete({self.u})" if self.w is None else f"DeleteSave({self.u}, {self.w})"


def Delete(u: int) -> Operation:
    return Operation(u)


def DeleteSave(u: int, w: int) -> Operation:
    return Operation(u, w)


def _check_f(g: Graph, f: DegFunction) -> None:
    if set(f) != set(g.vertices):
        raise InputError("f must be defined on exactly the vertices of g")
    if any(x < 0 for x in f.values()):
        raise InputError("f must be nonnegative")


def apply_delete(g: Graph, f: DegFunction, u: int):
    """``(G - u, f')`` or None when the application is illegal."""
    if u not in g:
        raise InputError(f"unknown vertex {u}")
    nbrs = g.neighbors(u)
    f2 = {v: f[v] - (v in nbrs) for v in g.vertices if v != u}
    if any(x < 0 for x in f2.values()):
        return None
    return g.remove_vertex(u), f2


def apply_delete_save(g: Graph, f: DegFunction, u: int, w: int):
    """``(G - u, f')`` sparing ``w``, or None when illegal (needs ``f(u) > f(w)``)."""
    if not g.has_edge(u, w):
        raise InputError(f"DeleteSave needs an edge, {u}-{w} is not one")
    if f[u] <= f[w]:
        return None
    nbrs = g.neighbors(u)
    f2 = {v: f[v] - (v in nbrs and v != w) for v in g.vertices if v != u}
    if any(x < 0 for x in f2.values()):
        return None
    return g.remove_vertex(u), f2


def apply_operation(g: Graph, f: DegFunction, op: Operation):
    if op.w is None:
        return apply_delete(g, f, op.u)
    return apply_delete_save(g, f, op.u, op.w)


def verify_trace(g: Graph, f: DegFunction, trace: Sequence[Operation]) -> bool:
    """Replay ``trace`` from ``(g, f)``: every step legal and the graph ends empty."""
    try:
        _check_f(g, f)
        state = (g, dict(f))
        for op in trace:
            state = apply_operation(*state, op)
            if state is None:
                return False
    except (InputError, KeyError):
        return False
    return state[0].n == 0


def is_weakly_f_degenerate(g: Graph, f: DegFunction, bound: int = DEFAULT_VERTEX_BOUND) -> list[Operation] | None:
    """A legal Delete/DeleteSave trace emptying ``g``, or None if there is none.

    Exhaustive backtracking with failed states memoised on (remaining
    vertices, budgets).  A vertex whose budget is at least its current
    degree can always be deleted last, so such vertices are peeled off
    before branching and their deletions appended to the trace.
    """
    _check_f(g, f)
    if g.n > bound:
        raise SearchBoundExceeded("weak degeneracy search", g.n, bound)
    ids = list(g.vertices)
    pos = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    adj = [0] * n
    for v in ids:
        for u in g.neighbors(v):
            adj[pos[v]] |= 1 << pos[u]
    failed: set = set()

    def solve(mask: int, fv: list[int]) -> list[Operation] | None:
        peeled = []
        changed = True
        while changed:
            changed = False
            for i in range(n):
                if mask >> i & 1 and fv[i] >= (adj[i] & mask).bit_count():
                    mask &= ~(1 << i)
                    peeled.append(i)
                    changed = True
        tail = [Operation(ids[i]) for i in reversed(peeled)]
        if not mask:
            return tail
        key = (mask, tuple(fv[i] if mask >> i & 1 else 0 for i in range(n)))
        if key in failed:
            return None
        for i in range(n):
            if not mask >> i & 1:
                continue
            rest = mask & ~(1 << i)
            nb = adj[i] & rest
            # Delete(i), then DeleteSave(i, w) for each neighbour w
            for w in [None] + [j for j in range(n) if nb >> j & 1]:
                if w is not None and fv[i] <= fv[w]:
                    continue
                hit = nb if w is None else nb & ~(1 << w)
                f2 = fv[:]
                ok = True
                j = 0
                while hit:
                    if hit & 1:
                        f2[j] -= 1
                        if f2[j] < 0:
                            ok = False
                            break
                    hit >>= 1
                    j += 1
                if not ok:
                    continue
                sub = solve(rest, f2)
                if sub is not None:
                    op = Operation(ids[i], None if w is None else ids[w])
                    return [op] + sub + tail
        failed.add(key)
        return None

    return solve((1 << n) - 1, [f[v] for v in ids])


def is_weakly_d_degenerate(g: Graph, d: int, bound: int = DEFAULT_VERTEX_BOUND) -> list[Operation] | None:
    return is_weakly_f_degenerate(g, {v: d for v in g.vertices}, bound)


def degeneracy_ordering(g: Graph) -> list[int]:
    """Repeatedly remove a minimum-degree vertex, smallest id first."""
    deg = g.degrees()
    alive = set(g.vertices)
    order = []
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        order.append(v)
        alive.discard(v)
        for u in g.neighbors(v):
            if u in alive:
                deg[u] -= 1
    return order


def degeneracy(g: Graph) -> int:
    deg = g.degrees()
    alive = set(g.vertices)
    best = 0
    for v in degeneracy_ordering(g):
        best = max(best, deg[v])
        alive.discard(v)
        for u in g.neighbors(v):
            if u in alive:
                deg[u] -= 1
    return best


def weak_degeneracy(g: Graph, bound: int = DEFAULT_VERTEX_BOUND) -> int:
    """Least ``d`` such that ``g`` is weakly ``d``-degenerate."""
    if g.n > bound:
        raise SearchBoundExceeded("weak degeneracy search", g.n, bound)
    top = degeneracy(g)
    for d in range(top):
        if is_weakly_d_degenerate(g, d, bound) is not None:
            return d
    return top


def weak_degeneracy_certificate(g: Graph, bound: int = DEFAULT_VERTEX_BOUND) -> tuple[int, list[Operation]]:
    d = weak_degeneracy(g, bound)
    trace = is_weakly_d_degenerate(g, d, bound)
    assert trace is not None
    return d, trace


def gallai_weak_check(g: Graph, h: DegFunction, u_set) -> bool:
    """Every component of ``g[u_set]`` is a GDP-tree.

    Requires ``deg(v) == h(v)`` on ``u_set``.
    """
    u_set = set(u_set)
    bad = sorted(v for v in u_set if v not in g or g.degree(v) != h.get(v))
    if bad:
        raise InputError(f"vertices {bad} do not satisfy deg(v) = h(v)")
    sub = g.subgraph(u_set)
    return all(is_gdp_tree(sub.subgraph(comp)) for comp in sub.components())
