"""Coloring toolkit for toroidal graphs without K5-minus and 6-cycles.

Exact, desk-scale implementations of weak degeneracy, Alon-Tarsi census,
DP-coloring, discharging and the structural detectors.
"""
from .errors import HypothesisViolation, InputError, SearchBoundExceeded, ToruscolorError
from .graph import Graph
from .embedding import EmbeddedGraph

__all__ = [
    "EmbeddedGraph",
    "Graph",
    "HypothesisViolation",
    "InputError",
    "SearchBoundExceeded",
    "ToruscolorError",
]
__version__ = "0.1.0"
