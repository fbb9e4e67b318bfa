"""The three reducible configurations and their reducing orientations.

Vertex labels follow the drawings: ``v1..v5`` for the K5-minus-two-edges
configuration, compass points ``N W S E`` for the kite and ``A B C D H``
(H the roof) for the house.  Every configuration vertex is required to have
degree exactly 4 in the host graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class ConfigurationId(str, Enum):
    FIG1_K5MM = "fig1"
    FIG2_KITE = "fig2"
    FIG3_HOUSE = "fig3"


@dataclass(frozen=True)
class Configuration:
    id: ConfigurationId
    labels: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    host_degree: int = 4

    def internal_degree(self, label: str) -> int:
        return sum(label in e for e in self.edges)

    def adjacent(self, a: str, b: str) -> bool:
        return (a, b) in self.edges or (b, a) in self.edges


FIG1 = Configuration(
    ConfigurationId.FIG1_K5MM,
    ("v1", "v2", "v3", "v4", "v5"),
    (
        ("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5"), ("v5", "v1"),
        ("v5", "v3"), ("v3", "v1"), ("v1", "v4"),
    ),
)

FIG2 = Configuration(
    ConfigurationId.FIG2_KITE,
    ("N", "W", "S", "E"),
    (("N", "W"), ("W", "S"), ("S", "E"), ("E", "N"), ("N", "S")),
)

FIG3 = Configuration(
    ConfigurationId.FIG3_HOUSE,
    ("A", "B", "C", "D", "H"),
    (("A", "H"), ("H", "B"), ("B", "C"), ("C", "D"), ("D", "A"), ("A", "B")),
)

CONFIGURATIONS = {c.id: c for c in (FIG1, FIG2, FIG3)}


def get_configuration(cid: ConfigurationId | str) -> Configuration:
    return CONFIGURATIONS[ConfigurationId(cid)]


# Arc lists of the drawn orientations, plus the number of arcs each vertex
# sends out of the configuration (the unlabeled stubs in the drawing).
FIG7_ARCS = {
    ConfigurationId.FIG1_K5MM: (
        ("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1"),
        ("v3", "v1"), ("v1", "v5"), ("v3", "v5"), ("v4", "v5"),
    ),
    ConfigurationId.FIG2_KITE: (
        ("N", "W"), ("W", "S"), ("S", "E"), ("E", "N"), ("N", "S"),
    ),
    ConfigurationId.FIG3_HOUSE: (
        ("A", "H"), ("H", "B"), ("B", "C"), ("C", "D"), ("D", "A"), ("B", "A"),
    ),
}

FIG7_STUBS = {
    ConfigurationId.FIG1_K5MM: {"v1": 0, "v2": 2, "v3": 0, "v4": 1, "v5": 1},
    ConfigurationId.FIG2_KITE: {"N": 1, "W": 2, "S": 1, "E": 2},
    ConfigurationId.FIG3_HOUSE: {"A": 1, "B": 1, "C": 2, "D": 2, "H": 2},
}
