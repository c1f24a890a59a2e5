from __future__ import annotations

import random

import pytest

from adorn.catalog import get, presentation_of, presented_pairs
from adorn.cosets import (
    COMMUTATOR,
    CosetBudgetError,
    CosetTable,
    IncompleteTableError,
    InfiniteAbelianizationError,
    coset_table_from_abelianization,
    reidemeister_schreier,
    schreier_generators,
    spanning_tree,
    todd_coxeter,
)
from adorn.finite import Permutation, enumerate_group, subgroup
from adorn.fpcore import (
    Presentation,
    Word,
    commutator,
    concat,
    inverse,
    letter,
    parse_presentation,
    parse_word,
    relation_matrix,
)
from adorn.intlin import AbelianGroupData, abelian_invariants

S3 = "< a, b | a^2, b^3, (a*b)^2 >"
A4 = "< a, b | a^2, b^3, (a*b)^3 >"
A5 = "< a, b | a^2, b^3, (a*b)^5 >"
Q8 = "< x, y | x^4, x^2*y^-2, y*x*y^-1*x >"


def _abelianized(p: Presentation) -> AbelianGroupData:
    return abelian_invariants(relation_matrix(p))


# -------------------------
# Todd-Coxeter
# -------------------------


@pytest.mark.parametrize(
    "text, subgroup, index",
    [
        (S3, [], 6),
        (S3, ["a"], 3),
        (S3, ["b"], 2),
        (A4, [], 12),
        (A5, [], 60),
        (A5, ["a", "b"], 1),
        (Q8, [], 8),
        ("< a | a >", [], 1),
        ("< a | a^7 >", [], 7),
    ],
)
def test_todd_coxeter_index(text: str, subgroup: list[str], index: int) -> None:
    p = parse_presentation(text)
    words = [parse_word(w, p.generators) for w in subgroup]
    t = todd_coxeter(p, words)
    assert t.index == index
    assert t.audit() == []


def _regular_images(p: Presentation) -> list[Permutation]:
    table = todd_coxeter(p)
    return [Permutation(tuple(row[2 * g] for row in table.action)) for g in range(p.ngens)]


def _evaluate(w: Word, images: list[Permutation]) -> Permutation:
    out = images[0].identity()
    for gen, step in w.signed_letters():
        out = out * (images[gen] if step > 0 else images[gen].inverse())
    return out


def _subgroup_words(p: Presentation) -> list[list[Word]]:
    gens = [letter(g) for g in range(p.ngens)]
    words = [[g] for g in gens]
    if len(gens) >= 2:
        a, b = gens[:2]
        words += [[concat(a, b)], [commutator(a, b)], [concat(a, b, a), b]]
    return words


SMALL_PRESENTED = [
    presented for presented, concrete in presented_pairs() if get(concrete).fact("order") <= 200
]


@pytest.mark.parametrize("name", SMALL_PRESENTED)
def test_index_is_group_order_over_subgroup_order(name: str) -> None:
    p = presentation_of(name)
    images = _regular_images(p)
    G = enumerate_group(images)
    assert G.order == get(name).fact("order")
    for words in _subgroup_words(p):
        H = subgroup(G, [_evaluate(w, images) for w in words])
        table = todd_coxeter(p, words)
        assert table.audit() == []
        assert table.index * H.order == G.order, (name, words)


def test_todd_coxeter_budget_on_infinite_index() -> None:
    p = parse_presentation("< a, b | >")
    with pytest.raises(CosetBudgetError) as info:
        todd_coxeter(p, max_cosets=50)
    assert info.value.limit == 50


def test_table_trace_and_json() -> None:
    p = parse_presentation(S3)
    t = todd_coxeter(p, [parse_word("b", p.generators)])
    a = parse_word("a", p.generators)
    c = t.trace(0, a)
    assert c != 0
    assert t.image(c, 0, -1) == 0
    data = t.to_json()
    assert data["index"] == 2
    assert data["subgroup"] == ["b"]
    assert len(data["action"]) == 2


def test_audit_reports_unclosed_relators() -> None:
    p = parse_presentation("< a | a^2 >")
    bad = CosetTable(p, ((1, 1), (2, 0), (0, 1)))
    assert any("relator" in problem for problem in bad.audit())


# -------------------------
# Abelianization tables
# -------------------------


@pytest.mark.parametrize("text, index", [(S3, 2), (A4, 3), (Q8, 4), (A5, 1), ("< a | a^6 >", 6)])
def test_abelianization_table(text: str, index: int) -> None:
    p = parse_presentation(text)
    t = coset_table_from_abelianization(p)
    assert t.index == index
    assert t.subgroup == COMMUTATOR
    assert t.audit() == []


def test_abelianization_table_needs_finite_abelianization() -> None:
    p = parse_presentation("< a, b | a^2 >")
    with pytest.raises(InfiniteAbelianizationError) as info:
        coset_table_from_abelianization(p)
    assert info.value.group == AbelianGroupData(1, (2,))


def test_abelianization_table_budget() -> None:
    with pytest.raises(CosetBudgetError):
        coset_table_from_abelianization(parse_presentation("< a | a^10 >"), max_cosets=5)


# -------------------------
# Reidemeister-Schreier
# -------------------------


def test_schreier_generator_count() -> None:
    p = parse_presentation(S3)
    t = coset_table_from_abelianization(p)
    assert len(spanning_tree(t)) == t.index - 1
    assert len(schreier_generators(t)) == t.index * (p.ngens - 1) + 1


def test_unsimplified_subgroup_names() -> None:
    p = parse_presentation(S3)
    sub = reidemeister_schreier(p, coset_table_from_abelianization(p), tietze_passes=0)
    assert sub.generators == ("s1", "s2", "s3")
    assert sub.nrels > 0


@pytest.mark.parametrize(
    "text, derived_abelianization",
    [
        (S3, AbelianGroupData(0, (3,))),
        (A4, AbelianGroupData(0, (2, 2))),
        (Q8, AbelianGroupData(0, (2,))),
        ("< a, b | a^2, b^3, (a*b)^4 >", AbelianGroupData(0, (3,))),
    ],
)
def test_commutator_subgroup_presentations(text: str, derived_abelianization: AbelianGroupData) -> None:
    p = parse_presentation(text)
    sub = reidemeister_schreier(p, coset_table_from_abelianization(p))
    assert _abelianized(sub) == derived_abelianization


def test_subgroup_of_index_two_in_s3() -> None:
    p = parse_presentation(S3)
    t = todd_coxeter(p, [parse_word("b", p.generators)])
    sub = reidemeister_schreier(p, t)
    assert todd_coxeter(sub).index == 3


def test_rewriting_rejects_incomplete_tables() -> None:
    p = parse_presentation("< a | a^2 >")
    with pytest.raises(IncompleteTableError):
        reidemeister_schreier(p, CosetTable(p, ((1, 1), (0, -1))))
    other = parse_presentation("< a, b | >")
    with pytest.raises(IncompleteTableError):
        reidemeister_schreier(p, todd_coxeter(other, [letter(0), letter(1)]))


def _stabilizer_words(perms: list[list[int]]) -> tuple[list[Word], int]:
    """Generators of the stabilizer of point 0 as words, and the orbit size."""
    transversal: dict[int, Word] = {0: Word()}
    queue = [0]
    for c in queue:
        for g, perm in enumerate(perms):
            for exp, d in ((1, perm[c]), (-1, perm.index(c))):
                if d not in transversal:
                    transversal[d] = concat(transversal[c], letter(g, exp))
                    queue.append(d)
    words = []
    for c, t in transversal.items():
        for g, perm in enumerate(perms):
            words.append(concat(t, letter(g), inverse(transversal[perm[c]])))
    return [w for w in words if w], len(transversal)


def test_nielsen_schreier_rank_for_finite_index_subgroups_of_free_groups() -> None:
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(1, 3)
        k = rng.randint(1, 8)
        perms = []
        for _ in range(n):
            perm = list(range(k))
            rng.shuffle(perm)
            perms.append(perm)
        words, orbit = _stabilizer_words(perms)
        free = Presentation(tuple(f"x{i}" for i in range(n)))

        t = todd_coxeter(free, words, max_cosets=1000)
        assert t.index == orbit
        sub = reidemeister_schreier(free, t, tietze_passes=0)
        assert sub.ngens == orbit * (n - 1) + 1
        assert sub.nrels == 0
