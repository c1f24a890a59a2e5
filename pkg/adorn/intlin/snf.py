from __future__ import annotations

import json
from math import comb
from typing import Any

import sympy

from adorn.log import get_logger

from .types import AbelianGroupData, IntMatrix, MatrixLiteralError, MatrixShapeError, SmithForm

log = get_logger("intlin")


class _Reduction:
    """Work state for one Smith normal form computation.

    Invariant after every operation: ``left @ original @ right == work``.
    """

    def __init__(self, m: IntMatrix):
        self.rows = m.rows
        self.cols = m.cols
        self.work = m.to_rows()
        self.left = IntMatrix.identity(m.rows).to_rows()
        self.right = IntMatrix.identity(m.cols).to_rows()

    # -- elementary row operations (mirrored on ``left``)

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        for mat in (self.work, self.left):
            mat[i], mat[j] = mat[j], mat[i]

    def add_row(self, target: int, source: int, factor: int) -> None:
        """row[target] += factor * row[source]"""
        for mat in (self.work, self.left):
            src = mat[source]
            mat[target] = [a + factor * b for a, b in zip(mat[target], src)]

    def negate_row(self, i: int) -> None:
        for mat in (self.work, self.left):
            mat[i] = [-a for a in mat[i]]

    # -- elementary column operations (mirrored on ``right``)

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for mat in (self.work, self.right):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def add_col(self, target: int, source: int, factor: int) -> None:
        """col[target] += factor * col[source]"""
        for mat in (self.work, self.right):
            for row in mat:
                row[target] += factor * row[source]

    # -- pivoting

    def smallest_entry(self, t: int) -> tuple[int, int] | None:
        best: tuple[int, int] | None = None
        best_abs = 0
        for i in range(t, self.rows):
            row = self.work[i]
            for j in range(t, self.cols):
                v = abs(row[j])
                if v and (best is None or v < best_abs):
                    best, best_abs = (i, j), v
                    if v == 1:
                        return best
        return best

    def move_to_pivot(self, t: int, at: tuple[int, int]) -> None:
        self.swap_rows(t, at[0])
        self.swap_cols(t, at[1])

    def clear_cross(self, t: int) -> bool:
        """Reduce column t and row t against the pivot.

        Returns True once every off-pivot entry of the cross is zero; returns
        False after moving a smaller remainder into the pivot position.
        """
        w = self.work
        p = w[t][t]
        for i in range(t + 1, self.rows):
            if w[i][t]:
                self.add_row(i, t, -(w[i][t] // p))
        for j in range(t + 1, self.cols):
            if w[t][j]:
                self.add_col(j, t, -(w[t][j] // p))

        candidates = [(abs(w[i][t]), i, t) for i in range(t + 1, self.rows) if w[i][t]]
        candidates += [(abs(w[t][j]), t, j) for j in range(t + 1, self.cols) if w[t][j]]
        if not candidates:
            return True
        _, i, j = min(candidates)
        self.move_to_pivot(t, (i, j))
        return False

    def divisibility_violation(self, t: int) -> int | None:
        p = self.work[t][t]
        for i in range(t + 1, self.rows):
            row = self.work[i]
            for j in range(t + 1, self.cols):
                if row[j] % p:
                    return i
        return None


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Diagonalize ``m`` by unimodular row and column operations.

    The pivot at each stage is an entry of smallest nonzero absolute value in
    the remaining block, which keeps intermediate coefficients small.
    """
    red = _Reduction(m)
    diag: list[int] = []

    for t in range(min(m.rows, m.cols)):
        at = red.smallest_entry(t)
        if at is None:
            break
        red.move_to_pivot(t, at)

        while True:
            if not red.clear_cross(t):
                continue
            bad = red.divisibility_violation(t)
            if bad is None:
                break
            red.add_row(t, bad, 1)

        if red.work[t][t] < 0:
            red.negate_row(t)
        diag.append(red.work[t][t])

    log.debug("smith normal form of %dx%d matrix: %s", m.rows, m.cols, diag)
    return SmithForm(
        diag=tuple(diag),
        left=IntMatrix.from_rows(red.left, m.rows),
        right=IntMatrix.from_rows(red.right, m.cols),
        rows=m.rows,
        cols=m.cols,
    )


def certify(m: IntMatrix, form: SmithForm) -> bool:
    """Check a Smith form against its input by explicit multiplication."""
    if (form.rows, form.cols) != (m.rows, m.cols):
        return False
    if form.left @ m @ form.right != form.diagonal_matrix():
        return False
    if any(d <= 0 for d in form.diag):
        return False
    if any(b % a for a, b in zip(form.diag, form.diag[1:])):
        return False
    return abs(determinant(form.left)) == 1 and abs(determinant(form.right)) == 1


def determinant(m: IntMatrix) -> int:
    if m.rows != m.cols:
        raise MatrixShapeError(f"Determinant of non-square {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return 1
    return int(sympy.Matrix(m.to_rows()).det(method="bareiss"))


def abelian_invariants(m: IntMatrix) -> AbelianGroupData:
    """Invariants of the abelian group Z^cols / (row space of m)."""
    diag = smith_normal_form(m).diag
    return AbelianGroupData(
        rank=m.cols - len(diag),
        torsion=tuple(d for d in diag if d > 1),
    )


def is_finite(group: AbelianGroupData) -> bool:
    return group.is_finite()


def order(group: AbelianGroupData) -> int:
    return group.order()


def h2_rank_abelian(group: AbelianGroupData) -> int:
    """Rank of the second integral homology of a finitely generated abelian group."""
    return comb(group.rank, 2)


def parse_matrix_literal(text: str) -> IntMatrix:
    """Parse a JSON matrix literal.

    Accepts an array of arrays of integers (decimal strings allowed for big
    values) or ``{"rows": r, "cols": c, "entries": [...]}`` for shapes an
    array cannot express, such as 0x2.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixLiteralError(f"Invalid matrix literal: {exc.msg} at {exc.pos}") from exc

    match raw:
        case list():
            rows = [_parse_row(row, i) for i, row in enumerate(raw)]
            width = len(rows[0]) if rows else 0
            for i, row in enumerate(rows):
                if len(row) != width:
                    raise MatrixLiteralError(f"Row {i} has {len(row)} entries, expected {width}")
            return IntMatrix.from_rows(rows, width)
        case {"rows": int(r), "cols": int(c), "entries": list(entries)}:
            values = tuple(_parse_entry(v) for v in entries)
            if r < 0 or c < 0 or len(values) != r * c:
                raise MatrixLiteralError(f"{r}x{c} matrix needs {r * c} entries, got {len(values)}")
            return IntMatrix(r, c, values)
        case _:
            raise MatrixLiteralError("Matrix literal must be an array of rows or a rows/cols/entries object")


def _parse_row(row: Any, index: int) -> list[int]:
    if not isinstance(row, list):
        raise MatrixLiteralError(f"Row {index} is not an array")
    return [_parse_entry(v) for v in row]


def _parse_entry(value: Any) -> int:
    if isinstance(value, bool):
        raise MatrixLiteralError(f"Matrix entry {value!r} is not an integer")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            pass
    raise MatrixLiteralError(f"Matrix entry {value!r} is not an integer")
