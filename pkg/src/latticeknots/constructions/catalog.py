"""Hard-coded minimal conformations shipped with the package.

Each entry of ``data/catalog.json`` holds the corner lists, a description of
an independent reference diagram and that diagram's Jones polynomial.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from ..invariants import KnotRecord, jones_from_json, knot_record
from ..laurent import LaurentPoly
from ..lattice import Conformation, LatticeError


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    conformation: Conformation
    reference: dict
    jones: LaurentPoly


@lru_cache(maxsize=1)
def _document() -> dict:
    return json.loads(resources.files("latticeknots.data").joinpath("catalog.json").read_text())


def catalog_version() -> int:
    return _document()["version"]


def catalog_names() -> list[str]:
    return [e["name"] for e in _document()["entries"]]


def catalog_entry(name: str) -> CatalogEntry:
    for e in _document()["entries"]:
        if e["name"] == name:
            return CatalogEntry(name, Conformation(e["components"]), dict(e["reference"]),
                                jones_from_json(e["jones"]))
    raise LatticeError(f"unknown catalog entry {name!r}; known: {', '.join(catalog_names())}")


def catalog(name: str) -> tuple[Conformation, KnotRecord]:
    """Conformation and table record for a catalog entry."""
    entry = catalog_entry(name)
    return entry.conformation, knot_record(name)
