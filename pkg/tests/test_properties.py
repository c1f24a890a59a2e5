from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adorn.engine import (
    abelian_layer_bounds,
    perfect_extension,
    product_law,
    quotient_monotone,
    simple_term_bound,
    solvable_quotient_inclusions,
)
from adorn.finite import (
    FiniteGroup,
    NotNormalError,
    derived_series,
    derived_subgroup,
    direct_product,
    enumerate_group,
    normal_closure,
    parse_elements,
    parse_permutation,
    subgroup,
    trivial_subgroup,
)

GROUPS = {
    "s3": "(0 1), (0 1 2)",
    "s4": "(0 1), (0 1 2 3)",
    "d4": "(0 1 2 3), (0 2)",
    "a4": "(0 1 2), (1 2 3)",
    "c6": "(0 1 2 3 4 5)",
    "q8": "mod 3: [[0,2],[1,0]], mod 3: [[1,1],[1,2]]",
    "sl2_3": "mod 3: [[1,1],[0,1]], mod 3: [[1,0],[1,1]]",
    "gl2_3": "mod 3: [[1,1],[0,1]], mod 3: [[1,0],[1,1]], mod 3: [[2,0],[0,1]]",
}

_cache: dict[str, FiniteGroup] = {}


def group(text: str) -> FiniteGroup:
    if text not in _cache:
        _cache[text] = enumerate_group(parse_elements(text))
    return _cache[text]


def _all_normal_closures(G: FiniteGroup) -> list[FiniteGroup]:
    return [normal_closure(G, [g]) for g in G.elements]


# -------------------------
# Quotients and products
# -------------------------


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_quotients_never_raise_the_degree(name: str) -> None:
    G = group(GROUPS[name])
    assert all(quotient_monotone(G, N) for N in _all_normal_closures(G))


@settings(deadline=None, max_examples=40)
@given(st.sampled_from(sorted(GROUPS)), st.integers(min_value=0))
def test_quotient_monotone_on_sampled_elements(name: str, k: int) -> None:
    G = group(GROUPS[name])
    g = G.elements[k % G.order]
    assert quotient_monotone(G, normal_closure(G, [g]))


@pytest.mark.parametrize(
    "left, right",
    [("s3", "c6"), ("s3", "a4"), ("q8", "s3"), ("d4", "a4"), ("s4", "c6"), ("sl2_3", "s3")],
)
def test_product_law(left: str, right: str) -> None:
    assert product_law(group(GROUPS[left]), group(GROUPS[right]))


def test_product_law_with_perfect_factor() -> None:
    A5 = group("(0 1 2), (0 1 2 3 4)")
    assert product_law(A5, group(GROUPS["s3"]))


# -------------------------
# Perfect extensions
# -------------------------


def test_perfect_by_perfect_is_perfect() -> None:
    A5 = group("(0 1 2), (0 1 2 3 4)")
    P = direct_product(A5, A5)
    left = normal_closure(P, P.generators[:2])
    assert left.order == 60
    assert perfect_extension(P, left)


def test_perfect_extension_without_hypothesis_holds_vacuously() -> None:
    S4 = group(GROUPS["s4"])
    assert perfect_extension(S4, derived_subgroup(S4))


def test_perfect_extension_needs_normality() -> None:
    S4 = group(GROUPS["s4"])
    with pytest.raises(NotNormalError):
        perfect_extension(S4, subgroup(S4, [parse_permutation("(0 1)", 4)]))


# -------------------------
# Normal subgroup inclusions
# -------------------------


@pytest.mark.parametrize("name", ["s4", "gl2_3", "sl2_3", "d4"])
def test_inclusions_for_every_normal_closure(name: str) -> None:
    G = group(GROUPS[name])
    for H in _all_normal_closures(G):
        assert solvable_quotient_inclusions(G, H)
        for i in range(len(derived_series(G)) + 1):
            assert abelian_layer_bounds(G, H, i)


def test_inclusions_with_a_nonsolvable_quotient() -> None:
    S5 = group("(0 1), (0 1 2 3 4)")
    assert solvable_quotient_inclusions(S5, trivial_subgroup(S5))
    assert solvable_quotient_inclusions(S5, derived_subgroup(S5))


@pytest.mark.parametrize("text", ["(0 1), (0 1 2 3 4)", "(0 1 2), (0 1 2 3 4)", "(0 1), (0 1 2)"])
def test_simple_term_bound(text: str) -> None:
    G = group(text)
    assert all(simple_term_bound(G, H) for H in _all_normal_closures(G))


def test_inclusion_checks_need_normality() -> None:
    S4 = group(GROUPS["s4"])
    H = subgroup(S4, [parse_permutation("(0 1)", 4)])
    with pytest.raises(NotNormalError):
        solvable_quotient_inclusions(S4, H)
    with pytest.raises(NotNormalError):
        abelian_layer_bounds(S4, H, 0)
    with pytest.raises(NotNormalError):
        simple_term_bound(S4, H)
