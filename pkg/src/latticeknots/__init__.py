"""Cubic-lattice stick conformations of knots and links."""

from .lattice import (AxisStickCounts, Conformation, LatticeError, LatticePoint, LSite,
                      StickRef, Transform, ValidationReport, detect_clean_Ls,
                      detect_exterior_Ls, expand_halfspace, properly_level, stick_count,
                      torsion_sticks, transform, validate)
from .laurent import LaurentPoly
from .diagram import PDCode, PlanarDiagram, crossing_count, linking_number, pd_code, project, writhe
from .invariants import jones, jones_of, kauffman_bracket, torus_jones_oracle

__version__ = "0.1.0"

__all__ = [
    "AxisStickCounts", "Conformation", "LatticeError", "LatticePoint", "LSite", "StickRef",
    "Transform", "ValidationReport", "detect_clean_Ls", "detect_exterior_Ls", "expand_halfspace",
    "properly_level", "stick_count", "torsion_sticks", "transform", "validate",
    "LaurentPoly", "PDCode", "PlanarDiagram", "crossing_count", "linking_number", "pd_code",
    "project", "writhe", "jones", "jones_of", "kauffman_bracket", "torus_jones_oracle",
]
