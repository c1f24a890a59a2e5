from .registry import (
    alternating,
    braid,
    cyclic,
    dihedral,
    free,
    get,
    gl2,
    names,
    presentation_of,
    presented_pairs,
    sl2,
    surface,
    symmetric,
)
from .types import CatalogEntry, CatalogError, Fact, Provenance, UnknownEntryError

__all__ = [
    "alternating",
    "braid",
    "cyclic",
    "dihedral",
    "free",
    "get",
    "gl2",
    "names",
    "presentation_of",
    "presented_pairs",
    "sl2",
    "surface",
    "symmetric",
    "CatalogEntry",
    "CatalogError",
    "Fact",
    "Provenance",
    "UnknownEntryError",
]
