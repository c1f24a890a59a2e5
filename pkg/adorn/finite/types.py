from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from math import gcd
from typing import Union

import sympy

from adorn.errors import AdornError


class FiniteGroupError(AdornError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class ElementError(FiniteGroupError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class EnumerationBudgetError(FiniteGroupError):
    def __init__(self, limit: int, what: str = "group"):
        super().__init__(f"{what} has more than {limit} elements")
        self.limit = limit


class NotASubgroupError(FiniteGroupError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class NotNormalError(FiniteGroupError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class ElementKind(Enum):
    PERMUTATION = "permutation"
    MODMATRIX = "modmatrix"


@dataclass(frozen=True)
class Permutation:
    """Bijection of {0..n-1}; products apply the left factor first."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ElementError(f"{list(self.images)} is not a permutation")

    @classmethod
    def identity_of(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: list[list[int]], degree: int) -> Permutation:
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if point in seen or not 0 <= point < degree:
                    raise ElementError(f"Invalid cycle {cycle} for degree {degree}")
                seen.add(point)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def kind(self) -> ElementKind:
        return ElementKind.PERMUTATION

    def __mul__(self, other: Permutation) -> Permutation:
        img = other.images
        return Permutation(tuple(img[x] for x in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def identity(self) -> Permutation:
        return Permutation.identity_of(self.degree)

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self.images[x]
            out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


@dataclass(frozen=True)
class ModMatrix:
    """Invertible n x n matrix over Z/m, entries stored row-major in [0, m)."""

    n: int
    m: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 2 or self.n < 1:
            raise ElementError(f"Invalid matrix shape n={self.n}, modulus={self.m}")
        if len(self.entries) != self.n * self.n:
            raise ElementError(f"{self.n}x{self.n} matrix needs {self.n * self.n} entries")
        if any(not 0 <= e < self.m for e in self.entries):
            object.__setattr__(self, "entries", tuple(e % self.m for e in self.entries))

    @classmethod
    def from_rows(cls, rows: list[list[int]], m: int) -> ModMatrix:
        if m < 2:
            raise ElementError(f"Modulus must be at least 2, got {m}")
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ElementError(f"Matrix {rows} is not square")
        mat = cls(n, m, tuple(e % m for r in rows for e in r))
        if gcd(mat.det(), m) != 1:
            raise ElementError(f"Matrix {rows} is not invertible mod {m}")
        return mat

    @property
    def kind(self) -> ElementKind:
        return ElementKind.MODMATRIX

    def rows(self) -> list[list[int]]:
        n = self.n
        return [list(self.entries[i * n : (i + 1) * n]) for i in range(n)]

    def det(self) -> int:
        return int(sympy.Matrix(self.rows()).det(method="bareiss")) % self.m

    def __mul__(self, other: ModMatrix) -> ModMatrix:
        n, m = self.n, self.m
        a, b = self.entries, other.entries
        out = tuple(
            sum(a[i * n + k] * b[k * n + j] for k in range(n)) % m
            for i in range(n)
            for j in range(n)
        )
        return ModMatrix(n, m, out)

    def inverse(self) -> ModMatrix:
        inv = sympy.Matrix(self.rows()).inv_mod(self.m)
        return ModMatrix(self.n, self.m, tuple(int(e) % self.m for e in inv))

    def identity(self) -> ModMatrix:
        n = self.n
        return ModMatrix(n, self.m, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def is_identity(self) -> bool:
        return self == self.identity()

    def __str__(self) -> str:
        return f"mod {self.m}: {self.rows()}"


Element = Union[Permutation, ModMatrix]


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A concrete finite group: its generators and every element, in discovery order."""

    kind: ElementKind
    generators: tuple[Element, ...]
    elements: tuple[Element, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def element_set(self) -> frozenset[Element]:
        return frozenset(self.elements)

    @cached_property
    def identity(self) -> Element:
        return self.elements[0]

    def __contains__(self, g: Element) -> bool:
        return g in self.element_set

    def __len__(self) -> int:
        return len(self.elements)

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def is_subgroup_of(self, other: FiniteGroup) -> bool:
        return self.element_set <= other.element_set

    def same_elements(self, other: FiniteGroup) -> bool:
        return self.element_set == other.element_set

    def __repr__(self) -> str:
        return f"FiniteGroup(kind={self.kind.value}, order={self.order}, gens={len(self.generators)})"


class Terminal(Enum):
    PERFECT = "perfect"
    TRIVIAL = "trivial"


@dataclass(frozen=True)
class DoaResult:
    doa: int
    terminal: Terminal

    def to_dict(self) -> dict[str, object]:
        return {"doa": self.doa, "terminal": self.terminal.value}
