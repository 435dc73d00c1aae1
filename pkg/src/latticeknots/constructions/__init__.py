"""Explicit lattice constructions."""

from .arc import MIN_PAGES, ArcPresentation, from_arc_presentation, normalize_rotation
from .catalog import CatalogEntry, catalog, catalog_entry, catalog_names, catalog_version
from .compose import compose, compose_chain
from .links import two_braid_link
from .satellite import PermutationWord, satellite, satellite_base, satellite_sites
from .torus import torus_knot, torus_levels

__all__ = [
    "MIN_PAGES", "ArcPresentation", "from_arc_presentation", "normalize_rotation",
    "CatalogEntry", "catalog", "catalog_entry", "catalog_names", "catalog_version",
    "compose", "compose_chain", "two_braid_link",
    "PermutationWord", "satellite", "satellite_base", "satellite_sites",
    "torus_knot", "torus_levels",
]
