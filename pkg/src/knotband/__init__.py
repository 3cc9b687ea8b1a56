"""Band-move calculus on knot diagrams: torus-knot pinch sequences and
invariant-level certification of single-band surgeries."""

from .braid import BraidError, BraidWord, Permutation, braid_permutation, closure, torus_braid
from .diagram import DiagramError, OrientedDiagram, PlanarDiagram, orient, parse_pd
from .laurent import LaurentPoly
from .bracket import ResourceError, jones, kauffman_bracket
from .profile import ConsistencyError, InvariantProfile, invariant_profile

__version__ = "0.1.0"

__all__ = [
    "BraidError", "BraidWord", "Permutation", "braid_permutation", "closure", "torus_braid",
    "DiagramError", "OrientedDiagram", "PlanarDiagram", "orient", "parse_pd",
    "LaurentPoly", "ResourceError", "jones", "kauffman_bracket",
    "ConsistencyError", "InvariantProfile", "invariant_profile",
]
