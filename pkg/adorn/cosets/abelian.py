from __future__ import annotations

from math import prod

from adorn.fpcore import Presentation, relation_matrix
from adorn.intlin import AbelianGroupData, smith_normal_form
from adorn.log import get_logger

from .types import COMMUTATOR, CosetBudgetError, CosetTable, InfiniteAbelianizationError

log = get_logger("cosets")


def coset_table_from_abelianization(
    p: Presentation, max_cosets: int | None = None
) -> CosetTable:
    """Coset table of the commutator subgroup, built in Smith coordinates.

    With U*M*V = D, generator g maps to row g of V reduced modulo the
    nontrivial invariants. Cosets are numbered in mixed radix, first
    coordinate fastest, so coset 0 is the zero vector.
    """
    m = relation_matrix(p)
    form = smith_normal_form(m)
    rank = p.ngens - len(form.diag)
    torsion = [(i, d) for i, d in enumerate(form.diag) if d > 1]
    if rank:
        raise InfiniteAbelianizationError(
            AbelianGroupData(rank=rank, torsion=tuple(d for _, d in torsion))
        )

    moduli = [d for _, d in torsion]
    size = prod(moduli)
    if max_cosets is not None and size > max_cosets:
        raise CosetBudgetError(max_cosets, "abelianization table")

    images = [
        [form.right[g, i] % d for i, d in torsion]
        for g in range(p.ngens)
    ]

    def encode(vec: list[int]) -> int:
        index = 0
        for v, d in zip(reversed(vec), reversed(moduli)):
            index = index * d + v
        return index

    def decode(index: int) -> list[int]:
        vec = []
        for d in moduli:
            index, v = divmod(index, d)
            vec.append(v)
        return vec

    action = []
    for c in range(size):
        vec = decode(c)
        row: list[int] = []
        for a in images:
            row.append(encode([(v + x) % d for v, x, d in zip(vec, a, moduli)]))
            row.append(encode([(v - x) % d for v, x, d in zip(vec, a, moduli)]))
        action.append(tuple(row))

    log.debug("abelianization table with %d cosets, invariants %s", size, moduli)
    return CosetTable(p, tuple(action), COMMUTATOR)
