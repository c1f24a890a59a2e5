from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Any

from adorn.errors import AdornError
from adorn.finite import DEFAULT_MAX_ORDER, Element, FiniteGroup, enumerate_group
from adorn.fpcore import Presentation, format_presentation


class CatalogError(AdornError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class UnknownEntryError(CatalogError):
    def __init__(self, name: str, reason: str = ""):
        detail = f": {reason}" if reason else ""
        super().__init__(f"Unknown catalog entry '{name}'{detail}")
        self.name = name


class Provenance(Enum):
    LITERATURE = "literature"
    DERIVED = "derived"
    TRIVIAL = "trivial"


@dataclass(frozen=True)
class Fact:
    value: Any
    provenance: Provenance

    def to_dict(self) -> dict[str, Any]:
        value = self.value
        if hasattr(value, "to_dict"):
            value = {"text": str(value), **value.to_dict()}
        return {"value": value, "provenance": self.provenance.value}


@lru_cache(maxsize=64)
def _enumerate(generators: tuple[Element, ...], max_order: int) -> FiniteGroup:
    return enumerate_group(generators, max_order)


@dataclass(frozen=True)
class CatalogEntry:
    """A named group with a concrete model, a presentation, or both.

    ``facts`` keys: ``order``, ``doa``, ``abelianization`` (AbelianGroupData),
    ``verdict`` (a verdict label), ``alexander`` (polynomial text).
    """

    name: str
    description: str
    generators: tuple[Element, ...] = ()
    presentation: Presentation | None = None
    facts: dict[str, Fact] = field(default_factory=dict)
    pair: str | None = None

    @property
    def has_model(self) -> bool:
        return bool(self.generators)

    def model(self, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup | None:
        if not self.generators:
            return None
        return _enumerate(self.generators, max_order)

    def fact(self, key: str) -> Any:
        f = self.facts.get(key)
        return None if f is None else f.value

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "model": [str(g) for g in self.generators] if self.generators else None,
            "presentation": (
                format_presentation(self.presentation) if self.presentation is not None else None
            ),
            "pair": self.pair,
            "facts": {k: f.to_dict() for k, f in sorted(self.facts.items())},
        }
