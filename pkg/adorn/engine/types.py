from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Union

from adorn.errors import AdornError
from adorn.finite import FiniteGroup
from adorn.fpcore import Presentation, format_presentation
from adorn.intlin import AbelianGroupData


class EngineError(AdornError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class SizeBudgetError(EngineError):
    def __init__(self, needed: int, limit: int):
        super().__init__(f"Next derived step needs {needed} cosets, budget is {limit}")
        self.needed = needed
        self.limit = limit


class ProbeParamsError(EngineError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class NotAdorableReason(Enum):
    NONTRIVIAL_ALEXANDER_POLYNOMIAL = "nontrivial_alexander_polynomial"
    NONABELIAN_FREE = "nonabelian_free"


class Stall(Enum):
    INFINITE_ABELIANIZATION = "infinite_abelianization"
    DEPTH_BUDGET = "depth_budget"
    SIZE_BUDGET = "size_budget"


@dataclass(frozen=True)
class DerivedStep:
    """One stage G^i of the derived series and its abelianization G^i/G^(i+1).

    ``index`` is the number of cosets of G^(i+1) in G^i, None when infinite;
    ``quotient_order`` is |G/G^(i+1)|, None once any layer is infinite.
    """

    depth: int
    presentation: Presentation
    abelianization: AbelianGroupData
    index: int | None
    quotient_order: int | None

    def to_dict(self) -> dict[str, Any]:
        return {
            "depth": self.depth,
            "presentation": format_presentation(self.presentation),
            "generators": self.presentation.ngens,
            "relators": self.presentation.nrels,
            "abelianization": str(self.abelianization),
            "invariants": self.abelianization.to_dict(),
            "index": self.index,
            "quotient_order": self.quotient_order,
        }


@dataclass(frozen=True)
class Adorable:
    doa: int
    trace: tuple[DerivedStep, ...] = ()
    certificate: str = ""

    label = "adorable"

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.label,
            "doa": self.doa,
            "certificate": self.certificate,
            "trace": [s.to_dict() for s in self.trace],
        }


@dataclass(frozen=True)
class NotAdorable:
    reason: NotAdorableReason
    evidence: dict[str, Any] = field(default_factory=dict)
    trace: tuple[DerivedStep, ...] = ()

    label = "not_adorable"

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.label,
            "reason": self.reason.value,
            "evidence": self.evidence,
            "trace": [s.to_dict() for s in self.trace],
        }


@dataclass(frozen=True)
class Unknown:
    depth: int
    stall: Stall
    trace: tuple[DerivedStep, ...] = ()

    label = "unknown"

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.label,
            "depth": self.depth,
            "stall": self.stall.value,
            "trace": [s.to_dict() for s in self.trace],
        }


Verdict = Union[Adorable, NotAdorable, Unknown]


@dataclass(frozen=True)
class FiltrationCertificate:
    """A chain G = G_0 > G_1 > ... > G_n of subgroups of a finite group."""

    chain: tuple[FiniteGroup, ...]

    @property
    def length(self) -> int:
        return len(self.chain) - 1

    def orders(self) -> list[int]:
        return [H.order for H in self.chain]


@dataclass(frozen=True)
class ProbeReport:
    samples: int
    verdicts: dict[str, int]
    stalls: dict[str, int]
    depth_histogram: tuple[int, ...]
    max_quotient_order: int
    seed: int | None

    def to_dict(self) -> dict[str, Any]:
        return {
            "samples": self.samples,
            "verdicts": dict(self.verdicts),
            "stalls": dict(self.stalls),
            "depth_histogram": list(self.depth_histogram),
            "max_quotient_order": self.max_quotient_order,
            "seed": self.seed,
        }
