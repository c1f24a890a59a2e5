from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from adorn.errors import AdornError

IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


class PresentationError(AdornError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class PresentationSyntaxError(PresentationError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UndeclaredGeneratorError(PresentationError):
    def __init__(self, name: str, position: int | None = None):
        where = "" if position is None else f" at position {position}"
        super().__init__(f"Undeclared generator '{name}'{where}")
        self.name = name
        self.position = position


class DuplicateGeneratorError(PresentationError):
    def __init__(self, name: str):
        super().__init__(f"Duplicate generator '{name}'")
        self.name = name


class WordError(PresentationError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


@dataclass(frozen=True)
class Word:
    """Freely reduced word stored as (generator index, nonzero exponent) runs."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for gen, exp in self.letters:
            if gen < 0 or exp == 0:
                raise WordError(f"Invalid syllable ({gen}, {exp})")
            if gen == prev:
                raise WordError(f"Adjacent syllables share generator {gen}")
            prev = gen

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.letters)

    def __len__(self) -> int:
        return sum(abs(exp) for _, exp in self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    @property
    def syllables(self) -> int:
        return len(self.letters)

    def generators(self) -> set[int]:
        return {gen for gen, _ in self.letters}

    def signed_letters(self) -> Iterator[tuple[int, int]]:
        """Yield the word one letter at a time as (generator, +1 or -1)."""
        for gen, exp in self.letters:
            step = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield gen, step


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for name in self.generators:
            if not IDENT.fullmatch(name):
                raise PresentationError(f"Invalid generator name '{name}'")
            if name in seen:
                raise DuplicateGeneratorError(name)
            seen.add(name)
        n = len(self.generators)
        for k, rel in enumerate(self.relators):
            for gen, _ in rel:
                if gen >= n:
                    raise PresentationError(
                        f"Relator {k} uses generator #{gen} but only {n} are declared"
                    )

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @property
    def nrels(self) -> int:
        return len(self.relators)

    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise UndeclaredGeneratorError(name) from None
