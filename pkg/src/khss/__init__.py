"""Khovanov homology over Euclidean rings and Lee-class divisibility invariants."""

from .diagram import Diagram, knot, mirror, parse_pd, resolve_target
from .invariants import InvariantReport, epsilon_c, mirror_check, reduced_s, refined_class, unreduced_s
from .rings import RingSpec, ring_from_cli
from .simplify import simplify_diagram

__all__ = [
    "Diagram", "knot", "mirror", "parse_pd", "resolve_target",
    "InvariantReport", "epsilon_c", "mirror_check", "reduced_s", "refined_class", "unreduced_s",
    "RingSpec", "ring_from_cli", "simplify_diagram",
]
