from __future__ import annotations

from itertools import combinations

import sympy

from adorn.engine import Adorable, NotAdorable, NotAdorableReason, Verdict
from adorn.fpcore import Presentation
from adorn.intlin import IntMatrix, abelian_invariants
from adorn.log import get_logger

from .fox import alexander_matrix
from .types import T, AlexanderData, AlexanderPreconditionError, LaurentPoly

log = get_logger("alexander")


def _drop_column(
    matrix: tuple[tuple[LaurentPoly, ...], ...], column: int
) -> list[list[LaurentPoly]]:
    return [[e for j, e in enumerate(row) if j != column] for row in matrix]


def _minor(rows: list[list[LaurentPoly]]) -> sympy.Poly:
    """Determinant of a square Laurent matrix, up to a power of t.

    Each row is shifted into Z[t] first; that changes the determinant by a unit.
    """
    shifted = []
    for row in rows:
        nonzero = [e.min_exp for e in row if not e.is_zero()]
        k = -min(nonzero, default=0)
        shifted.append([e.shift(k).as_expr() for e in row])
    det = sympy.Matrix(shifted).det(method="berkowitz")
    return sympy.Poly(sympy.expand(det), T, domain="ZZ")


def alexander_polynomial(p: Presentation, deleted_column: int | None = None) -> AlexanderData:
    """Alexander polynomial as the gcd of the maximal minors of the Fox matrix
    with one column deleted, normalized to lowest exponent 0 and positive
    leading coefficient.
    """
    matrix = alexander_matrix(p)
    n = p.ngens
    column = n - 1 if deleted_column is None else deleted_column
    if not 0 <= column < n:
        raise AlexanderPreconditionError(f"Column {column} out of range for {n} generators")
    if len(matrix) < n - 1:
        raise AlexanderPreconditionError(
            f"Need at least {n - 1} relators for {n} generators, got {len(matrix)}"
        )

    reduced = _drop_column(matrix, column)
    if n == 1:
        return AlexanderData(matrix, LaurentPoly.constant(1))

    g = sympy.Poly(0, T, domain="ZZ")
    for rows in combinations(range(len(reduced)), n - 1):
        g = g.gcd(_minor([reduced[i] for i in rows]))

    polynomial = LaurentPoly.from_sympy(g).normalize()
    degenerate = polynomial.is_zero()
    log.debug("alexander polynomial %s (degenerate=%s)", polynomial, degenerate)
    return AlexanderData(matrix, polynomial, degenerate)


def h1prime_rank(p: Presentation) -> int:
    """Rank of G'/G'' for a knot group: the degree of its Alexander polynomial."""
    return alexander_polynomial(p).degree


def double_cover_order(p: Presentation) -> int:
    """Order of the group presented by the column-deleted Fox matrix at t = -1.

    Equals |Delta(-1)|; 0 when that group is infinite.
    """
    matrix = alexander_matrix(p)
    reduced = _drop_column(matrix, p.ngens - 1)
    rows = [[int(e.evaluate(-1)) for e in row] for row in reduced]
    group = abelian_invariants(IntMatrix.from_rows(rows, p.ngens - 1))
    return group.order() if group.is_finite() else 0


def knot_adorability_verdict(p: Presentation) -> Verdict:
    """A knot group is adorable exactly when its Alexander polynomial is trivial."""
    data = alexander_polynomial(p)
    if data.degenerate:
        raise AlexanderPreconditionError("Alexander polynomial is zero; not a knot group presentation")
    if data.polynomial.is_one():
        return Adorable(doa=1, certificate="trivial Alexander polynomial")
    return NotAdorable(
        NotAdorableReason.NONTRIVIAL_ALEXANDER_POLYNOMIAL,
        {"polynomial": str(data.polynomial), "degree": data.degree},
    )
