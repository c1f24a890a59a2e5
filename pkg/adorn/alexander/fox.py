from __future__ import annotations

from adorn.fpcore import Presentation, Word, relation_matrix
from adorn.intlin import smith_normal_form

from .types import AlexanderPreconditionError, LaurentPoly


def check_knot_presentation(p: Presentation) -> None:
    """Require G/G' = Z with every generator mapped to the same generator t.

    Raises AlexanderPreconditionError otherwise.
    """
    form = smith_normal_form(relation_matrix(p))
    rank = p.ngens - len(form.diag)
    torsion = [d for d in form.diag if d > 1]
    if rank != 1 or torsion:
        raise AlexanderPreconditionError(
            f"Abelianization must be infinite cyclic, got rank {rank} and torsion {torsion}"
        )
    free = len(form.diag)
    images = {form.right[g, free] for g in range(p.ngens)}
    if len(images) != 1 or abs(images.pop()) != 1:
        raise AlexanderPreconditionError(
            "Generators do not all map to the same generator of the abelianization"
        )


def fox_derivative_abelianized(w: Word, gen: int) -> LaurentPoly:
    """Fox derivative of ``w`` by generator ``gen``, pushed to Z[t, 1/t].

    Every generator is sent to t, so the image of a prefix is t to its
    exponent sum.
    """
    terms: list[tuple[int, int]] = []
    prefix = 0
    for g, step in w.signed_letters():
        if step > 0:
            if g == gen:
                terms.append((prefix, 1))
            prefix += 1
        else:
            prefix -= 1
            if g == gen:
                terms.append((prefix, -1))
    return LaurentPoly(tuple(terms))


def alexander_matrix(p: Presentation) -> tuple[tuple[LaurentPoly, ...], ...]:
    check_knot_presentation(p)
    return tuple(
        tuple(fox_derivative_abelianized(rel, g) for g in range(p.ngens)) for rel in p.relators
    )
