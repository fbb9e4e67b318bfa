"""Executable structure theorem and the local-structure detector suite.

``check_theorem`` verifies the hypotheses (connected, genus at most one,
no K5-minus, no 6-cycle) and reports the first outcome that holds.
``lemma_scan`` runs every local detector; each violation carries a
witness that :func:`recheck_violation` replays against the item's
standalone predicate.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

from .configurations import ConfigurationId
from .embedding import (
    EmbeddedGraph,
    FaceAdjacency,
    VertexClass,
    faces_adjacency,
    pattern_windows,
)
from .errors import HypothesisViolation, InputError
from .graph import (
    contains_k5_minus,
    find_induced_configuration,
    has_cycle_of_length,
    min_degree,
    verify_configuration_mapping,
)


class Outcome(str, Enum):
    MIN_DEGREE_LE_3 = "min-degree-le-3"
    CONFIG_FIG1 = "config-fig1"
    CONFIG_FIG2 = "config-fig2"
    CONFIG_FIG3 = "config-fig3"
    COUNTEREXAMPLE = "counterexample"


_CONFIG_OUTCOMES = (
    (ConfigurationId.FIG1_K5MM, Outcome.CONFIG_FIG1),
    (ConfigurationId.FIG2_KITE, Outcome.CONFIG_FIG2),
    (ConfigurationId.FIG3_HOUSE, Outcome.CONFIG_FIG3),
)


@dataclass(frozen=True)
class TheoremOutcome:
    outcome: Outcome
    vertex: Optional[int] = None
    mapping: Optional[dict] = None

    def to_dict(self) -> dict:
        d = {"outcome": self.outcome.value}
        if self.vertex is not None:
            d["vertex"] = self.vertex
        if self.mapping is not None:
            d["mapping"] = dict(sorted(self.mapping.items()))
        return d


def check_hypotheses(e: EmbeddedGraph) -> None:
    """Raise :class:`HypothesisViolation` naming the first failed hypothesis."""
    g = e.graph
    if not g.is_connected():
        raise HypothesisViolation("disconnected")
    if e.genus > 1:
        raise HypothesisViolation("genus", f"embedding has genus {e.genus}")
    if contains_k5_minus(g):
        raise HypothesisViolation("k5_minus")
    if has_cycle_of_length(g, 6):
        raise HypothesisViolation("six_cycle")


def check_theorem(e: EmbeddedGraph) -> TheoremOutcome:
    check_hypotheses(e)
    g = e.graph
    if min_degree(g) <= 3:
        v = min(g.vertices, key=lambda x: (g.degree(x), x))
        return TheoremOutcome(Outcome.MIN_DEGREE_LE_3, vertex=v)
    for cid, outcome in _CONFIG_OUTCOMES:
        m = find_induced_configuration(g, cid)
        if m is not None:
            return TheoremOutcome(outcome, mapping=m)
    return TheoremOutcome(Outcome.COUNTEREXAMPLE)


def verify_outcome(e: EmbeddedGraph, res: TheoremOutcome) -> bool:
    """Recheck the witness carried by ``res``."""
    g = e.graph
    if res.outcome is Outcome.MIN_DEGREE_LE_3:
        return res.vertex in g and g.degree(res.vertex) <= 3
    for cid, outcome in _CONFIG_OUTCOMES:
        if res.outcome is outcome:
            return res.mapping is not None and verify_configuration_mapping(g, cid, res.mapping)
    return False


# -- violations ---------------------------------------------------------

ITEMS = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii",
         "xiii", "xiv", "xv", "xvi", "xvii", "xviii", "xix", "L3.1")
_RANK = {name: i for i, name in enumerate(ITEMS)}


@dataclass(frozen=True)
class LemmaViolation:
    item: str
    vertices: tuple[int, ...] = ()
    faces: tuple[int, ...] = ()
    part: str = ""

    def sort_key(self):
        return (_RANK[self.item], self.part, self.vertices, self.faces)

    def to_dict(self) -> dict:
        d = {"item": self.item, "witness_vertices": list(self.vertices), "witness_faces": list(self.faces)}
        if self.part:
            d["part"] = self.part
        return d


@dataclass
class _Ctx:
    e: EmbeddedGraph
    _fig1: Optional[bool] = field(default=None)

    def has_fig1(self) -> bool:
        if self._fig1 is None:
            self._fig1 = find_induced_configuration(self.e.graph, ConfigurationId.FIG1_K5MM) is not None
        return self._fig1


def _sizes(e: EmbeddedGraph, v: int, corners) -> list[int]:
    cf = e.corner_faces(v)
    return [e.faces[cf[c]].degree for c in corners]


def _face_at(e: EmbeddedGraph, v: int, corner: int) -> int:
    return e.corner_faces(v)[corner]


def _between(e: EmbeddedGraph, v: int, a: int, b: int) -> int:
    """Neighbour of ``v`` separating the adjacent corners ``a`` and ``b``."""
    rot = e.rotation[v]
    d = len(rot)
    if b == (a + 1) % d:
        return rot[b]
    if a == (b + 1) % d:
        return rot[a]
    raise ValueError("corners are not adjacent")


def _outer_face(e: EmbeddedGraph, v: int, face: int) -> Optional[int]:
    """For a triangle ``face`` at ``v``, the face across its edge missing ``v``."""
    f = e.faces[face]
    for a in f.arcs:
        if v not in a:
            return e.face_across(a)
    return None


def _specials(e: EmbeddedGraph, face: int) -> list[int]:
    cls = e.vertex_classes
    return sorted({u for u in e.faces[face].walk if cls[u] is VertexClass.SPECIAL})


# vertex predicates: return the failing parts ("" for a single-part item)

def _forbidden(pattern, exact=False):
    def pred(ctx: _Ctx, v: int) -> list[str]:
        return [""] if pattern_windows(ctx.e, v, pattern, exact) else []
    return pred


def _item_xi(ctx: _Ctx, v: int) -> list[str]:
    e = ctx.e
    for w in pattern_windows(e, v, ("3", "4", "5+", "4"), exact=True):
        if _specials(e, _face_at(e, v, w[1])) or _specials(e, _face_at(e, v, w[3])):
            return [""]
    return []


def _item_xii(ctx: _Ctx, v: int) -> list[str]:
    e = ctx.e
    if not pattern_windows(e, v, (3, 3, 3, 3), exact=True):
        return []
    for face in e.corner_faces(v):
        out = _outer_face(e, v, face)
        if out is None or e.faces[out].degree < 7:
            return [""]
    return []


def _item_xiii(ctx: _Ctx, v: int) -> list[str]:
    e = ctx.e
    bad = set()
    for w in pattern_windows(e, v, ("3", "3", "3", "4+"), exact=True):
        k = _sizes(e, v, w)[3]
        if k < 6:
            bad.add("a")
        need = 7 if k == 6 else 6
        for c in w[:3]:
            out = _outer_face(e, v, _face_at(e, v, c))
            if out is None or e.faces[out].degree < need:
                bad.add("b" if k != 6 else "c")
    return sorted(bad)


def _item_xvi(ctx: _Ctx, v: int) -> list[str]:
    e = ctx.e
    bad = set()
    for w in pattern_windows(e, v, ("3", "4+", "4", "4+"), exact=True):
        k, l = _sizes(e, v, w)[1], _sizes(e, v, w)[3]
        if k == 5 or l == 5 or max(k, l) < 6:
            bad.add("a")
        if k == 4 and (_specials(e, _face_at(e, v, w[1])) or _specials(e, _face_at(e, v, w[2]))):
            bad.add("b")
    return sorted(bad)


def _item_xvii(ctx: _Ctx, v: int) -> list[str]:
    e = ctx.e
    g = e.graph
    bad = set()
    for w in pattern_windows(e, v, ("3", "3", "5", "5+"), exact=True):
        if _sizes(e, v, w)[3] < 7:
            bad.add("a")
        if not ctx.has_fig1():
            five = e.faces[_face_at(e, v, w[2])]
            if all(g.degree(u) < 5 for u in five.walk):
                bad.add("b")
    return sorted(bad)


def _item_xviii(ctx: _Ctx, v: int) -> list[str]:
    e = ctx.e
    g = e.graph
    for w in pattern_windows(e, v, (3, 4, 5, 4), exact=True):
        # w covers both readings, so each neighbour flanking the 5-face is tested
        v3 = _between(e, v, w[1], w[2])
        if g.degree(v3) == 4 and not pattern_windows(e, v3, ("4+", "4+", "4+", "4+"), exact=True):
            return [""]
    return []


def _item_xix(ctx: _Ctx, v: int) -> list[str]:
    e = ctx.e
    cls = e.vertex_classes
    m6 = sum(e.faces[i].degree >= 6 for i in e.corner_faces(v))
    n4b = sum(cls[u] is VertexClass.BAD for u in e.graph.neighbors(v))
    return [""] if m6 < n4b else []


VERTEX_ITEMS: dict[str, Callable[[_Ctx, int], list[str]]] = {
    "i": _forbidden(("3", "3", "3", "3", "k")),
    "vi": _forbidden(("3", "4", "3")),
    "vii": _forbidden(("3", "5", "3")),
    "viii": _forbidden(("3", "3", "4", "5-")),
    "ix": _forbidden((4, 4, 3, 4, "k"), exact=True),
    "xi": _item_xi,
    "xii": _item_xii,
    "xiii": _item_xiii,
    "xv": _forbidden(("4", "4", "4")),
    "xvi": _item_xvi,
    "xvii": _item_xvii,
    "xviii": _item_xviii,
    "xix": _item_xix,
}


# face predicates

def _item_iv(ctx: _Ctx, i: int) -> list[str]:
    e = ctx.e
    f = e.faces[i]
    if f.degree != 6:
        return []
    bad = set()
    mult = [u for u in f.vertex_set if f.multiplicity(u) == 2]
    two_triangles = (
        len(f.vertex_set) == 5 and len(f.edge_set) == 6 and len(mult) == 1
        and _splits_into_triangles(f.walk, mult[0])
    )
    if not two_triangles:
        bad.add("a")
    w = f.walk
    for j in range(6):
        x, y, z = w[j - 1], w[j], w[(j + 1) % 6]
        if f.multiplicity(y) == 1 and x != z and not e.graph.has_edge(x, z):
            bad.add("b")
    return sorted(bad)


def _splits_into_triangles(walk, y) -> bool:
    j = walk.index(y)
    w = walk[j:] + walk[:j]
    k = w.index(y, 1)
    return k == 3


def _item_x(ctx: _Ctx, i: int) -> list[str]:
    e = ctx.e
    if e.faces[i].degree != 4:
        return []
    return [""] if len(_specials(e, i)) > 1 else []


FACE_ITEMS = {"iv": _item_iv, "x": _item_x}


# face-pair predicates: (i, j) share an edge

def _item_ii(ctx: _Ctx, i: int, j: int) -> list[str]:
    e = ctx.e
    f, t = e.faces[i], e.faces[j]
    if f.degree != 5 or t.degree != 3 or not f.is_cycle() or not t.is_cycle():
        return []
    w = f.walk
    for k in range(5):
        a, b = w[k], w[(k + 1) % 5]
        if frozenset((a, b)) in t.edge_set:
            (x,) = t.vertex_set - {a, b}
            if x != w[(k + 3) % 5]:
                return [""]
    return []


def _item_iii(ctx: _Ctx, i: int, j: int) -> list[str]:
    e = ctx.e
    t, q = e.faces[i], e.faces[j]
    if t.degree != 3 or q.degree != 4 or not t.is_cycle() or not q.is_cycle():
        return []
    return [] if faces_adjacency(e, t, q) is FaceAdjacency.NORMALLY_ADJACENT else [""]


def _labelled_from(walk, a, b):
    """The cycle ``walk`` read as ``a, b, c, d`` (either direction)."""
    n = len(walk)
    k = walk.index(a)
    if walk[(k + 1) % n] == b:
        return [walk[(k + s) % n] for s in range(n)]
    return [walk[(k - s) % n] for s in range(n)]


def _item_v(ctx: _Ctx, i: int, j: int) -> list[str]:
    e = ctx.e
    fa, fb = e.faces[i], e.faces[j]
    if fa.degree != 4 or fb.degree != 4 or not fa.is_cycle() or not fb.is_cycle():
        return []
    bad = set()
    for edge in sorted(fa.edge_set & fb.edge_set, key=sorted):
        p, q = sorted(edge)
        for x1, x2 in ((p, q), (q, p)):
            _, _, x3, x4 = _labelled_from(fa.walk, x1, x2)
            _, _, y3, y4 = _labelled_from(fb.walk, x1, x2)
            if len({x3, x4} & {y3, y4}) != 1:
                bad.add("a")
            if y4 not in {x1, x2, x3, x4} and y3 != x4:
                bad.add("b")
    if faces_adjacency(e, fa, fb) is FaceAdjacency.NORMALLY_ADJACENT:
        bad.add("c")
    return sorted(bad)


PAIR_ITEMS = {"ii": _item_ii, "iii": _item_iii, "v": _item_v}


def _item_xiv(ctx: _Ctx, u: int, v: int) -> list[str]:
    cls = ctx.e.vertex_classes
    ok = ctx.e.graph.has_edge(u, v) and cls[u] is VertexClass.BAD and cls[v] is VertexClass.BAD
    return [""] if ok else []


def find_houses(e: EmbeddedGraph) -> list[tuple[int, ...]]:
    """4-cycles ``x1 x2 x3 x4`` plus ``x5`` on ``x1 x4``, all of degree 4 (not necessarily induced)."""
    g = e.graph
    four = {v for v in g.vertices if g.degree(v) == 4}
    found = {}
    for x1 in sorted(four):
        for x4 in sorted(g.neighbors(x1) & four):
            for x5 in sorted(g.neighbors(x1) & g.neighbors(x4) & four):
                for x2 in sorted(g.neighbors(x1) & four - {x4, x5}):
                    for x3 in sorted(g.neighbors(x2) & g.neighbors(x4) & four - {x1, x5}):
                        key = frozenset((x1, x2, x3, x4, x5))
                        found.setdefault(key, (x1, x2, x3, x4, x5))
    return sorted(found.values())


def _is_house(e: EmbeddedGraph, xs) -> bool:
    g = e.graph
    if len(xs) != 5 or len(set(xs)) != 5 or any(x not in g or g.degree(x) != 4 for x in xs):
        return False
    x1, x2, x3, x4, x5 = xs
    pairs = [(x1, x2), (x2, x3), (x3, x4), (x4, x1), (x1, x5), (x4, x5)]
    return all(g.has_edge(a, b) for a, b in pairs)


def _no_induced_configurations(g) -> bool:
    return all(find_induced_configuration(g, cid) is None for cid in ConfigurationId)


def lemma_scan(e: EmbeddedGraph, check_hypotheses_first: bool = True) -> list[LemmaViolation]:
    """All detector hits, sorted by item then witness.

    The house-subgraph check only applies once no induced configuration is
    present, since it relies on their absence.
    """
    if check_hypotheses_first:
        check_hypotheses(e)
    if min_degree(e.graph) < 4:
        raise InputError("the detector suite needs minimum degree at least 4")
    return run_detectors(e)


def run_detectors(e: EmbeddedGraph) -> list[LemmaViolation]:
    """Every detector on any embedding, without precondition checks."""
    ctx = _Ctx(e)
    g = e.graph
    out: list[LemmaViolation] = []
    for item, pred in VERTEX_ITEMS.items():
        for v in g.vertices:
            for part in pred(ctx, v):
                out.append(LemmaViolation(item, (v,), (), part))
    for item, pred in FACE_ITEMS.items():
        for i in range(len(e.faces)):
            for part in pred(ctx, i):
                out.append(LemmaViolation(item, (), (i,), part))
    pairs = set()
    for i, f in enumerate(e.faces):
        for a in f.arcs:
            j = e.face_across(a)
            if j != i:
                pairs.add((i, j))
    for item, pred in PAIR_ITEMS.items():
        for i, j in sorted(pairs):
            for part in pred(ctx, i, j):
                out.append(LemmaViolation(item, (), (i, j), part))
    for u, v in g.edges():
        for part in _item_xiv(ctx, u, v):
            out.append(LemmaViolation("xiv", (u, v), (), part))
    if _no_induced_configurations(g):
        for xs in find_houses(e):
            out.append(LemmaViolation("L3.1", xs))
    return sorted(set(out), key=LemmaViolation.sort_key)


def recheck_violation(e: EmbeddedGraph, viol: LemmaViolation) -> bool:
    """Replay a witness against the item's standalone predicate."""
    ctx = _Ctx(e)
    item = viol.item
    if item in VERTEX_ITEMS:
        return viol.part in VERTEX_ITEMS[item](ctx, viol.vertices[0])
    if item in FACE_ITEMS:
        return viol.part in FACE_ITEMS[item](ctx, viol.faces[0])
    if item in PAIR_ITEMS:
        i, j = viol.faces
        shared = any(e.face_across(a) == j for a in e.faces[i].arcs)
        return shared and viol.part in PAIR_ITEMS[item](ctx, i, j)
    if item == "xiv":
        return viol.part in _item_xiv(ctx, *viol.vertices)
    if item == "L3.1":
        return _is_house(e, viol.vertices)
    raise InputError(f"unknown item {item!r}")
