from __future__ import annotations

from typing import Iterable, Sequence

from adorn.intlin import IntMatrix

from .types import Presentation, Word


def free_reduce(raw: Iterable[tuple[int, int]]) -> Word:
    """Merge adjacent runs of the same generator and cancel zero runs."""
    stack: list[tuple[int, int]] = []
    for gen, exp in raw:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            merged = stack.pop()[1] + exp
            if merged:
                stack.append((gen, merged))
        else:
            stack.append((gen, exp))
    return Word(tuple(stack))


def letter(gen: int, exp: int = 1) -> Word:
    return free_reduce([(gen, exp)])


def concat(*words: Word) -> Word:
    return free_reduce(syl for w in words for syl in w)


def inverse(w: Word) -> Word:
    return Word(tuple((gen, -exp) for gen, exp in reversed(w.letters)))


def power(w: Word, n: int) -> Word:
    if n < 0:
        w, n = inverse(w), -n
    return free_reduce(syl for _ in range(n) for syl in w)


def commutator(u: Word, v: Word) -> Word:
    """The word u v u^-1 v^-1, freely reduced."""
    return concat(u, v, inverse(u), inverse(v))


def exponent_vector(w: Word, ngens: int) -> tuple[int, ...]:
    vec = [0] * ngens
    for gen, exp in w:
        vec[gen] += exp
    return tuple(vec)


def relation_matrix(p: Presentation) -> IntMatrix:
    return IntMatrix.from_rows([exponent_vector(r, p.ngens) for r in p.relators], p.ngens)


def cyclic_reduce(w: Word) -> Word:
    """Conjugate ``w`` until its first and last runs use different generators.

    The merged boundary run is placed at the front.
    """
    letters = list(w.letters)
    while len(letters) > 1 and letters[0][0] == letters[-1][0]:
        gen = letters[0][0]
        merged = letters[0][1] + letters[-1][1]
        letters = letters[1:-1]
        if merged:
            letters.insert(0, (gen, merged))
    return Word(tuple(letters))


def cyclic_key(w: Word) -> tuple[tuple[int, int], ...]:
    """Canonical representative of the cyclic conjugates of ``w`` and ``w^-1``."""
    best: tuple[tuple[int, int], ...] | None = None
    for cand in (cyclic_reduce(w), cyclic_reduce(inverse(w))):
        letters = cand.letters
        for k in range(max(len(letters), 1)):
            rotated = letters[k:] + letters[:k]
            if best is None or rotated < best:
                best = rotated
    return best or ()


def substitute(w: Word, images: Sequence[Word | None]) -> Word:
    """Replace generator g by ``images[g]``; ``None`` keeps the generator."""
    out: list[tuple[int, int]] = []
    for gen, exp in w:
        image = images[gen]
        if image is None:
            out.append((gen, exp))
        else:
            out.extend(power(image, exp).letters)
    return free_reduce(out)


def format_word(w: Word, names: Sequence[str]) -> str:
    if not w:
        return "1"
    parts = []
    for gen, exp in w:
        parts.append(names[gen] if exp == 1 else f"{names[gen]}^{exp}")
    return "*".join(parts)


def format_presentation(p: Presentation) -> str:
    gens = ", ".join(p.generators)
    rels = ", ".join(format_word(r, p.generators) for r in p.relators)
    left = f"< {gens} |" if gens else "< |"
    return f"{left} {rels} >" if rels else f"{left} >"
