"""Derived series of finitely presented groups.

Each stage G^i is abelianized through the Smith normal form of its relation
matrix. When G^i/G^(i+1) is finite, the coset table of the commutator
subgroup is built directly in Smith coordinates and Reidemeister-Schreier
rewriting gives a presentation of G^(i+1).
"""

from __future__ import annotations

from adorn.config import Budgets
from adorn.cosets import coset_table_from_abelianization, reidemeister_schreier
from adorn.fpcore import Presentation, relation_matrix, tietze_simplify
from adorn.intlin import AbelianGroupData, abelian_invariants
from adorn.log import get_logger

from .types import (
    Adorable,
    DerivedStep,
    NotAdorable,
    NotAdorableReason,
    SizeBudgetError,
    Stall,
    Unknown,
    Verdict,
)

log = get_logger("engine")

TRIVIAL = Presentation(())


def abelianization(p: Presentation) -> AbelianGroupData:
    return abelian_invariants(relation_matrix(p))


def _check_size(p: Presentation, index: int, budgets: Budgets) -> None:
    needed = max(index, index * p.ngens)
    if needed > budgets.max_cosets:
        raise SizeBudgetError(needed, budgets.max_cosets)


def _commutator_subgroup(p: Presentation, abel: AbelianGroupData, budgets: Budgets) -> Presentation:
    if abel.is_trivial():
        return p
    _check_size(p, abel.order(), budgets)
    table = coset_table_from_abelianization(p, budgets.max_cosets)
    return reidemeister_schreier(p, table, budgets.tietze_passes)


def derived_quotient_step(
    p: Presentation, budgets: Budgets | None = None
) -> tuple[AbelianGroupData, Presentation | None]:
    """G/G' and, when it is finite, a presentation of G'.

    A perfect input is returned unchanged as its own commutator subgroup.
    Raises SizeBudgetError when the rewriting would exceed the coset budget.
    """
    budgets = budgets or Budgets()
    abel = abelianization(p)
    if not abel.is_finite():
        return abel, None
    return abel, _commutator_subgroup(p, abel, budgets)


def explore_derived_series(
    p: Presentation, budgets: Budgets | None = None
) -> tuple[list[DerivedStep], Verdict]:
    """Follow G, G', G'', ... until a verdict or a budget stops the walk.

    Never raises on budget exhaustion: stalls come back as Unknown.
    """
    budgets = budgets or Budgets()
    current = tietze_simplify(p, budgets.tietze_passes)
    trace: list[DerivedStep] = []
    order = 1
    depth = 0

    while True:
        if current.nrels == 0 and current.ngens >= 2:
            log.info("depth %d: free group of rank %d", depth, current.ngens)
            verdict: Verdict = NotAdorable(
                NotAdorableReason.NONABELIAN_FREE,
                {"depth": depth, "rank": current.ngens},
                tuple(trace),
            )
            return trace, verdict

        abel = abelianization(current)
        log.info("depth %d: %s (%d generators, %d relators)", depth, abel, current.ngens, current.nrels)

        if abel.is_trivial():
            trace.append(DerivedStep(depth, current, abel, 1, order))
            return trace, Adorable(depth, tuple(trace), f"perfect stage at depth {depth}")

        if not abel.is_finite():
            trace.append(DerivedStep(depth, current, abel, None, None))
            if current.ngens == 1:
                # one generator: the stage is cyclic, its commutator subgroup trivial
                trace.append(DerivedStep(depth + 1, TRIVIAL, AbelianGroupData(0), 1, None))
                return trace, Adorable(
                    depth + 1, tuple(trace), f"cyclic stage at depth {depth}"
                )
            return trace, Unknown(depth, Stall.INFINITE_ABELIANIZATION, tuple(trace))

        index = abel.order()
        order *= index
        trace.append(DerivedStep(depth, current, abel, index, order))

        if depth >= budgets.max_depth:
            return trace, Unknown(depth, Stall.DEPTH_BUDGET, tuple(trace))
        try:
            current = _commutator_subgroup(current, abel, budgets)
        except SizeBudgetError as exc:
            log.info("depth %d: %s", depth, exc)
            return trace, Unknown(depth, Stall.SIZE_BUDGET, tuple(trace))
        depth += 1
