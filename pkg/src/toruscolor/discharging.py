"""Exact-rational discharging on embedded graphs.

Initial charges are ``d(v) - 6`` on vertices and ``2 d(f) - 6`` on faces.
Face-to-vertex rules act per corner, so a vertex met twice by a face
walk receives twice.  Nothing here uses floating point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .embedding import EmbeddedGraph, VertexClass, embedding_stats, has_face_pattern
from .errors import InputError

Key = tuple[str, int]  # ("v", vertex) or ("f", face index)


def fmt(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class RuleParams:
    epsilon: Fraction = Fraction(1, 1000)
    eta: Fraction = Fraction(1, 1000)
    rho: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        object.__setattr__(self, "eta", Fraction(self.eta))
        if self.rho is None:
            object.__setattr__(self, "rho", self.lam)
        else:
            object.__setattr__(self, "rho", Fraction(self.rho))
        if self.epsilon <= 0 or self.eta <= 0:
            raise InputError("epsilon and eta must be positive")
        if not (0 < self.lam <= self.rho < 1):
            raise InputError(f"need 0 < lambda <= rho < 1, got lambda={self.lam}, rho={self.rho}")

    @property
    def lam(self) -> Fraction:
        return Fraction(5, 7) + self.epsilon / 2

    @property
    def mu(self) -> Fraction:
        return Fraction(4, 7) - self.epsilon

    def strict_inequalities(self) -> dict[str, Fraction]:
        """Quantities the nonnegativity argument needs strictly positive."""
        e, h = self.epsilon, self.eta
        return {
            "epsilon/2": e / 2,
            "2*epsilon": 2 * e,
            "1/2-2*epsilon": Fraction(1, 2) - 2 * e,
            "2/7-2*epsilon": Fraction(2, 7) - 2 * e,
            "2/7-epsilon": Fraction(2, 7) - e,
            "(2-10*eta)/15": (2 - 10 * h) / 15,
            "(1-2*eta)/6": (1 - 2 * h) / 6,
            "(1-5*eta)/10": (1 - 5 * h) / 10,
            "(1-20*eta)/60": (1 - 20 * h) / 60,
            "1-rho": 1 - self.rho,
            "mu": self.mu,
        }

    def violated_inequalities(self) -> list[str]:
        return [name for name, val in self.strict_inequalities().items() if val <= 0]


@dataclass(frozen=True)
class Transfer:
    source: Key
    sink: Key
    amount: Fraction
    rule: str

    def to_dict(self) -> dict:
        return {"source": _key_str(self.source), "sink": _key_str(self.sink), "amount": fmt(self.amount), "rule": self.rule}


def _key_str(k: Key) -> str:
    return f"{k[0]}{k[1]}"


@dataclass
class ChargeState:
    initial: dict[Key, Fraction]
    charge: dict[Key, Fraction]
    ledger: list[Transfer] = field(default_factory=list)
    events: list[dict] = field(default_factory=list)
    omega_star: dict[int, Fraction] = field(default_factory=dict)
    genus: int = 0

    def send(self, source: Key, sink: Key, amount: Fraction, rule: str) -> None:
        if amount == 0:
            return
        self.charge[source] -= amount
        self.charge[sink] += amount
        self.ledger.append(Transfer(source, sink, Fraction(amount), rule))

    def total(self) -> Fraction:
        return sum(self.charge.values(), Fraction(0))

    def initial_total(self) -> Fraction:
        return sum(self.initial.values(), Fraction(0))

    def vertex_charge(self, v: int) -> Fraction:
        return self.charge[("v", v)]

    def face_charge(self, i: int) -> Fraction:
        return self.charge[("f", i)]

    def fired_rules(self) -> set[str]:
        return {t.rule for t in self.ledger}


def initial_charges(e: EmbeddedGraph) -> ChargeState:
    init: dict[Key, Fraction] = {}
    for v in e.graph.vertices:
        init[("v", v)] = Fraction(e.degree(v) - 6)
    for i, f in enumerate(e.faces):
        init[("f", i)] = Fraction(2 * f.degree - 6)
    return ChargeState(initial=dict(init), charge=dict(init), genus=e.genus)


def _pattern_class(e: EmbeddedGraph, v: int, pattern) -> bool:
    return has_face_pattern(e, v, pattern, exact=True)


def apply_rules(e: EmbeddedGraph, p: RuleParams | None = None) -> ChargeState:
    p = p or RuleParams()
    st = initial_charges(e)
    for name in p.violated_inequalities():
        st.events.append({"rule": "params", "target": name, "reason": "strict inequality fails"})
    g = e.graph
    stats = embedding_stats(e)
    classes = e.vertex_classes

    # R1 and R2: 4- and 5-faces, corner by corner
    for i, f in enumerate(e.faces):
        fk = ("f", i)
        if f.degree == 4:
            s, n4, n5 = stats.s[i], stats.n4(i), stats.n5plus(i)
            for v in f.walk:
                d = g.degree(v)
                if d >= 5:
                    st.send(fk, ("v", v), p.eta, "R1.1")
                elif d == 4 and classes[v] is VertexClass.SPECIAL:
                    st.send(fk, ("v", v), Fraction(1), "R1.2(i)")
                elif d == 4:
                    if n4 == s:
                        st.events.append({"rule": "R1.2(ii)", "target": _key_str(fk), "reason": "n4(f) = s(f)"})
                        continue
                    st.send(fk, ("v", v), (2 - s - p.eta * n5) / Fraction(n4 - s), "R1.2(ii)")
                else:
                    st.events.append({"rule": "R1", "target": f"v{v}", "reason": f"degree {d} < 4"})
        elif f.degree == 5:
            n4, n5 = stats.n4(i), stats.n5plus(i)
            for v in f.walk:
                d = g.degree(v)
                if d >= 5:
                    st.send(fk, ("v", v), Fraction(1, 2), "R2.1")
                elif d == 4:
                    st.send(fk, ("v", v), (4 - Fraction(n5, 2)) / n4, "R2.2")
                else:
                    st.events.append({"rule": "R2", "target": f"v{v}", "reason": f"degree {d} < 4"})
        elif f.degree >= 6:
            amount = Fraction(2 * f.degree - 6, f.degree)
            for v in f.walk:
                st.send(fk, ("v", v), amount, "R3")

    # R7
    for v in g.vertices:
        if g.degree(v) == 4 and _pattern_class(e, v, ("4+", "4+", "4+", "4+")):
            for u in sorted(g.neighbors(v)):
                st.send(("v", v), ("v", u), Fraction(1, 20), "R7")

    st.omega_star = {v: st.vertex_charge(v) for v in g.vertices}

    # R4: the remaining charge is taken as max(0, omega*)
    for v in g.vertices:
        if classes[v] is not VertexClass.GOOD:
            continue
        bad = sorted(u for u in g.neighbors(v) if classes[u] is VertexClass.BAD)
        if not bad:
            continue
        share = max(Fraction(0), st.omega_star[v]) / len(bad)
        for u in bad:
            st.send(("v", v), ("v", u), share, "R4")

    # R5 and R6
    for v in g.vertices:
        d = g.degree(v)
        if d == 5:
            for u in sorted(g.neighbors(v)):
                if g.degree(u) != 4:
                    continue
                if _pattern_class(e, u, (3, 3, 3, 3)):
                    st.send(("v", v), ("v", u), p.lam, "R5")
                elif _pattern_class(e, u, (3, 3, 3, "4+")):
                    st.send(("v", v), ("v", u), p.mu, "R5")
        elif d >= 6:
            for u in sorted(g.neighbors(v)):
                if classes[u] is VertexClass.BAD:
                    st.send(("v", v), ("v", u), p.rho, "R6")

    if st.total() != st.initial_total():
        raise AssertionError("discharging did not conserve total charge")
    return st


def charge_report(st: ChargeState) -> dict:
    """Machine-readable summary; all rationals as ``"p/q"`` strings."""
    def entry(k: Key) -> dict:
        kind = "vertex" if k[0] == "v" else "face"
        return {"kind": kind, "id": k[1], "charge": fmt(st.charge[k])}

    keys = sorted(st.charge, key=lambda k: (k[0] != "v", k[1]))
    return {
        "total": fmt(st.total()),
        "initial_total": fmt(st.initial_total()),
        "conserved": st.total() == st.initial_total(),
        "negative": [entry(k) for k in keys if st.charge[k] < 0],
        "positive": [entry(k) for k in keys if k[0] == "v" and st.charge[k] > 0],
        "ledger": [t.to_dict() for t in st.ledger],
        "net_flow": fmt(sum((st.charge[k] - st.initial[k] for k in keys), Fraction(0))),
        "events": st.events,
    }

