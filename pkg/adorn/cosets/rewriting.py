from __future__ import annotations

from adorn.fpcore import Presentation, Word, free_reduce, tietze_simplify
from adorn.fpcore.tietze import DEFAULT_PASSES
from adorn.log import get_logger

from .types import CosetTable, IncompleteTableError, column

log = get_logger("cosets")


def spanning_tree(t: CosetTable) -> set[tuple[int, int]]:
    """Tree edges (coset, generator), breadth-first from coset 0 in column order.

    An edge reached through g^-1 from c to d is recorded as (d, g).
    """
    ngens = t.presentation.ngens
    seen = {0}
    queue = [0]
    tree: set[tuple[int, int]] = set()
    for c in queue:
        for gen in range(ngens):
            for exp in (1, -1):
                d = t.action[c][column(gen, exp)]
                if d in seen:
                    continue
                seen.add(d)
                queue.append(d)
                tree.add((c, gen) if exp > 0 else (d, gen))
    return tree


def schreier_generators(t: CosetTable) -> list[tuple[int, int]]:
    """Edges outside the spanning tree, ordered by coset then generator."""
    tree = spanning_tree(t)
    return [
        (c, gen)
        for c in range(t.index)
        for gen in range(t.presentation.ngens)
        if (c, gen) not in tree
    ]


def _check_complete(t: CosetTable) -> None:
    width = 2 * t.presentation.ngens
    for c, row in enumerate(t.action):
        if len(row) != width or any(not 0 <= d < t.index for d in row):
            raise IncompleteTableError(f"Coset table row {c} is incomplete")


def reidemeister_schreier(
    p: Presentation, t: CosetTable, tietze_passes: int = DEFAULT_PASSES
) -> Presentation:
    """Presentation of the subgroup whose coset table is ``t``.

    Generators are the Schreier generators ``s1, s2, ...``; relators are the
    relators of ``p`` rewritten from every coset. ``tietze_passes=0`` returns
    the unsimplified presentation.
    """
    if t.presentation.ngens != p.ngens:
        raise IncompleteTableError(
            f"Coset table has {t.presentation.ngens} generators, presentation has {p.ngens}"
        )
    _check_complete(t)

    symbols = {edge: k for k, edge in enumerate(schreier_generators(t))}
    relators: list[Word] = []
    for rel in p.relators:
        for start in range(t.index):
            c = start
            raw: list[tuple[int, int]] = []
            for gen, step in rel.signed_letters():
                if step > 0:
                    edge = (c, gen)
                    c = t.action[c][column(gen, 1)]
                else:
                    c = t.action[c][column(gen, -1)]
                    edge = (c, gen)
                k = symbols.get(edge)
                if k is not None:
                    raw.append((k, step))
            rewritten = free_reduce(raw)
            if rewritten:
                relators.append(rewritten)

    names = tuple(f"s{k + 1}" for k in range(len(symbols)))
    subgroup = Presentation(names, tuple(relators))
    log.debug(
        "reidemeister-schreier: index %d, %d generators, %d relators before simplification",
        t.index,
        subgroup.ngens,
        subgroup.nrels,
    )
    return tietze_simplify(subgroup, tietze_passes)
