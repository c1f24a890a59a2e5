from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

from adorn.errors import AdornError


class IntLinError(AdornError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class MatrixShapeError(IntLinError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class MatrixLiteralError(IntLinError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class InfiniteGroupError(IntLinError):
    def __init__(self, group: AbelianGroupData):
        super().__init__(f"Abelian group {group} is infinite (rank {group.rank})")
        self.group = group


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise MatrixShapeError(f"Negative dimensions {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise MatrixShapeError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries: list[int] = []
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise MatrixShapeError(f"Row {i} has {len(row)} entries, expected {cols}")
            entries.extend(int(x) for x in row)
        return cls(len(rows), cols, tuple(entries))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise MatrixShapeError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out: list[int] = []
        for i in range(self.rows):
            row = self.row(i)
            for j in range(other.cols):
                out.append(sum(row[k] * other[k, j] for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> IntMatrix:
        rows, cols = list(rows), list(cols)
        return IntMatrix(len(rows), len(cols), tuple(self[i, j] for i in rows for j in cols))


@dataclass(frozen=True)
class SmithForm:
    """Result of ``smith_normal_form``: ``left @ M @ right`` is diagonal.

    ``diag`` lists the nonzero invariants d1 | d2 | ... | dk; the remaining
    diagonal positions of the ``rows x cols`` product are zero.
    """

    diag: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix
    rows: int
    cols: int

    def diagonal_matrix(self) -> IntMatrix:
        entries = [0] * (self.rows * self.cols)
        for i, d in enumerate(self.diag):
            entries[i * self.cols + i] = d
        return IntMatrix(self.rows, self.cols, tuple(entries))


@dataclass(frozen=True)
class AbelianGroupData:
    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise IntLinError(f"Negative rank {self.rank}")
        for t in self.torsion:
            if t < 2:
                raise IntLinError(f"Torsion invariant {t} must be at least 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise IntLinError(f"Torsion invariants {self.torsion} are not a divisibility chain")

    def is_finite(self) -> bool:
        return self.rank == 0

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def order(self) -> int:
        if not self.is_finite():
            raise InfiniteGroupError(self)
        return prod(self.torsion)

    def to_dict(self) -> dict[str, object]:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " x ".join(parts) if parts else "1"
