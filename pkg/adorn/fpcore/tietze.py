from __future__ import annotations

from collections import Counter

from adorn.log import get_logger

from .types import Presentation, Word
from .words import concat, cyclic_key, cyclic_reduce, free_reduce, power, substitute

log = get_logger("fpcore")

DEFAULT_PASSES = 16


def tietze_simplify(p: Presentation, budget: int = DEFAULT_PASSES) -> Presentation:
    """Simplify ``p`` with Tietze moves that never lengthen the presentation.

    Each pass cyclically reduces relators, drops empty and duplicate relators
    (duplicates up to rotation and inversion), then eliminates generators that
    occur exactly once, with exponent +-1, in some relator. An elimination is
    only kept while the total relator length stays at or below its value at the
    start of the pass. Stops early once a pass changes nothing.
    """
    gens = list(p.generators)
    rels = list(p.relators)

    for n in range(budget):
        start = sum(len(r) for r in rels)
        before = (len(gens), len(rels), start)

        rels = _clean(rels)
        gens, rels = _eliminate(gens, rels, start)

        after = (len(gens), len(rels), sum(len(r) for r in rels))
        log.debug("tietze pass %d: gens/rels/length %s -> %s", n, before, after)
        if after == before:
            break

    return Presentation(tuple(gens), tuple(rels))


def _clean(rels: list[Word]) -> list[Word]:
    seen: set[tuple[tuple[int, int], ...]] = set()
    out: list[Word] = []
    for rel in rels:
        rel = cyclic_reduce(rel)
        if not rel:
            continue
        key = cyclic_key(rel)
        if key in seen:
            continue
        seen.add(key)
        out.append(rel)
    return out


def _candidates(rels: list[Word]) -> list[tuple[int, int, int, int, int]]:
    """Possible eliminations as (length change bound, relator length, -gen, relator, gen)."""
    occurrences: Counter[int] = Counter()
    for rel in rels:
        for gen, exp in rel:
            occurrences[gen] += abs(exp)

    found = []
    for ri, rel in enumerate(rels):
        syllables = Counter(gen for gen, _ in rel)
        length = len(rel)
        for gen, exp in rel:
            if abs(exp) != 1 or syllables[gen] != 1:
                continue
            elsewhere = occurrences[gen] - 1
            bound = elsewhere * (length - 2) - length
            found.append((bound, length, -gen, ri, gen))
    return sorted(found)


def _eliminate(gens: list[str], rels: list[Word], ceiling: int) -> tuple[list[str], list[Word]]:
    while True:
        for _, _, _, ri, gen in _candidates(rels):
            image = _solve_for(rels[ri], gen)
            images: list[Word | None] = [None] * len(gens)
            images[gen] = image
            rewritten = [substitute(r, images) for k, r in enumerate(rels) if k != ri]
            rewritten = [r for r in rewritten if r]
            if sum(len(r) for r in rewritten) <= ceiling:
                gens, rels = _drop_generator(gens, rewritten, gen)
                break
        else:
            return gens, rels


def _solve_for(rel: Word, gen: int) -> Word:
    """Express ``gen`` from the relator ``u gen^e v`` as ``(v u)^-e``."""
    letters = rel.letters
    k = next(i for i, (g, _) in enumerate(letters) if g == gen)
    e = letters[k][1]
    rest = concat(Word(letters[k + 1 :]), Word(letters[:k]))
    return power(rest, -e)


def _drop_generator(gens: list[str], rels: list[Word], gen: int) -> tuple[list[str], list[Word]]:
    def shift(w: Word) -> Word:
        return free_reduce((g - 1 if g > gen else g, e) for g, e in w)

    return gens[:gen] + gens[gen + 1 :], [shift(r) for r in rels]
