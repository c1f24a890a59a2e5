from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from adorn.errors import AdornError
from adorn.fpcore import Presentation, Word, format_word
from adorn.intlin import AbelianGroupData

COMMUTATOR = "commutator"


class CosetError(AdornError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class CosetBudgetError(CosetError):
    def __init__(self, limit: int, what: str = "coset enumeration"):
        super().__init__(f"{what} needs more than {limit} cosets")
        self.limit = limit


class IncompleteTableError(CosetError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class InfiniteAbelianizationError(CosetError):
    def __init__(self, group: AbelianGroupData):
        super().__init__(f"Abelianization {group} is infinite")
        self.group = group


def column(gen: int, exp: int) -> int:
    """Table column of the signed generator: 2g for g, 2g+1 for g^-1."""
    return 2 * gen + (0 if exp > 0 else 1)


@dataclass(frozen=True)
class CosetTable:
    """Right action of signed generators on the cosets of a subgroup.

    ``action[c][column(g, e)]`` is the coset ``c * g^e``; coset 0 is the
    subgroup itself.
    """

    presentation: Presentation
    action: tuple[tuple[int, ...], ...]
    subgroup: tuple[Word, ...] | str = COMMUTATOR

    @property
    def index(self) -> int:
        return len(self.action)

    def image(self, coset: int, gen: int, exp: int = 1) -> int:
        return self.action[coset][column(gen, exp)]

    def trace(self, coset: int, w: Word) -> int:
        for gen, step in w.signed_letters():
            coset = self.action[coset][column(gen, step)]
        return coset

    def audit(self) -> list[str]:
        """Completeness, inverse columns and relator closure; empty when all hold."""
        k = self.index
        width = 2 * self.presentation.ngens
        problems: list[str] = []
        for c, row in enumerate(self.action):
            if len(row) != width or any(not 0 <= d < k for d in row):
                problems.append(f"row {c} is incomplete")
                return problems
        for c, row in enumerate(self.action):
            for x in range(width):
                if self.action[row[x]][x ^ 1] != c:
                    problems.append(f"columns {x} and {x ^ 1} are not inverse at coset {c}")
        for r, rel in enumerate(self.presentation.relators):
            for c in range(k):
                if self.trace(c, rel) != c:
                    problems.append(f"relator {r} does not close at coset {c}")
                    break
        if not isinstance(self.subgroup, str):
            for w in self.subgroup:
                if self.trace(0, w) != 0:
                    problems.append(f"subgroup word {format_word(w, self.presentation.generators)} leaves coset 0")
        return problems

    def to_json(self) -> dict[str, Any]:
        if isinstance(self.subgroup, str):
            subgroup: str | list[str] = self.subgroup
        else:
            subgroup = [format_word(w, self.presentation.generators) for w in self.subgroup]
        return {
            "index": self.index,
            "action": [list(row) for row in self.action],
            "subgroup": subgroup,
        }
