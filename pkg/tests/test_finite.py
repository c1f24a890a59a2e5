from __future__ import annotations

import pytest
from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup

from adorn.finite import (
    ElementError,
    EnumerationBudgetError,
    FiniteGroup,
    ModMatrix,
    NotASubgroupError,
    NotNormalError,
    Permutation,
    Terminal,
    as_permutation_group,
    audit,
    derived_series,
    derived_subgroup,
    direct_product,
    doa_finite,
    enumerate_group,
    is_abelian,
    is_normal,
    is_perfect,
    is_simple,
    is_solvable,
    normal_closure,
    parse_elements,
    parse_matrix,
    parse_permutation,
    quotient,
    subgroup,
    trivial_subgroup,
)

S3 = "(0 1), (0 1 2)"
S4 = "(0 1), (0 1 2 3)"
S5 = "(0 1), (0 1 2 3 4)"
A4 = "(0 1 2), (1 2 3)"
A5 = "(0 1 2), (0 1 2 3 4)"
D5 = "(0 1 2 3 4), (1 4)(2 3)"
Q8_MATRIX = "mod 3: [[0,2],[1,0]], mod 3: [[1,1],[1,2]]"
SL2_3 = "mod 3: [[1,1],[0,1]], mod 3: [[1,0],[1,1]]"
GL2_3 = "mod 3: [[1,1],[0,1]], mod 3: [[1,0],[1,1]], mod 3: [[2,0],[0,1]]"
GL2_5 = "mod 5: [[1,1],[0,1]], mod 5: [[1,0],[1,1]], mod 5: [[2,0],[0,1]]"


def group(text: str) -> FiniteGroup:
    return enumerate_group(parse_elements(text))


def _sympy(text: str) -> PermutationGroup:
    return PermutationGroup([SymPermutation(list(g.images)) for g in parse_elements(text)])


def _brute_force_derived(G: FiniteGroup) -> FiniteGroup:
    comms = [a.inverse() * b.inverse() * a * b for a in G.elements for b in G.elements]
    return subgroup(G, comms)


# -------------------------
# Enumeration
# -------------------------


@pytest.mark.parametrize(
    "text, order",
    [(S3, 6), (S4, 24), (S5, 120), (A5, 60), (D5, 10), (Q8_MATRIX, 8), (SL2_3, 24), (GL2_5, 480)],
)
def test_enumeration_orders(text: str, order: int) -> None:
    G = group(text)
    assert G.order == order
    assert G.identity.is_identity()
    assert audit(G) == []


def test_enumeration_budget() -> None:
    with pytest.raises(EnumerationBudgetError) as info:
        enumerate_group(parse_elements(S5), max_order=50)
    assert info.value.limit == 50


def test_generators_must_agree() -> None:
    with pytest.raises(ElementError):
        enumerate_group([Permutation((1, 0)), Permutation((1, 2, 0))])
    with pytest.raises(ElementError):
        enumerate_group([])


def test_audit_flags_a_broken_group() -> None:
    a = Permutation((1, 2, 0))
    broken = FiniteGroup(a.kind, (a,), (a.identity(), a))
    assert audit(broken) != []


# -------------------------
# Derived series and doa
# -------------------------


def test_derived_subgroup_of_s3_is_a3() -> None:
    assert derived_subgroup(group(S3)).order == 3


@pytest.mark.parametrize("text", [S3, S4, A4, D5, Q8_MATRIX, SL2_3, GL2_3, S5])
def test_derived_subgroup_matches_all_commutators(text: str) -> None:
    G = group(text)
    assert derived_subgroup(G).same_elements(_brute_force_derived(G))


@pytest.mark.parametrize("text", [S4, S5, A4, D5, "(0 1 2 3 4 5), (0 1)(2 3)"])
def test_derived_series_matches_sympy(text: str) -> None:
    ours = [H.order for H in derived_series(group(text))]
    theirs = [H.order() for H in _sympy(text).derived_series()]
    assert ours == theirs


@pytest.mark.parametrize(
    "text, doa, terminal",
    [
        (S3, 2, Terminal.TRIVIAL),
        (S4, 3, Terminal.TRIVIAL),
        (S5, 1, Terminal.PERFECT),
        ("(0 1), (0 1 2 3 4 5)", 1, Terminal.PERFECT),
        ("(0 1), (0 1 2 3 4 5 6)", 1, Terminal.PERFECT),
        (A5, 0, Terminal.PERFECT),
        (Q8_MATRIX, 2, Terminal.TRIVIAL),
        (SL2_3, 3, Terminal.TRIVIAL),
        (GL2_3, 4, Terminal.TRIVIAL),
        (GL2_5, 1, Terminal.PERFECT),
        ("(0 1)", 1, Terminal.TRIVIAL),
    ],
)
def test_doa_finite(text: str, doa: int, terminal: Terminal) -> None:
    result = doa_finite(group(text))
    assert result.doa == doa
    assert result.terminal is terminal


def test_trivial_group_has_doa_zero() -> None:
    result = doa_finite(group("()"))
    assert result.doa == 0
    assert result.terminal is Terminal.TRIVIAL


def test_perfect_and_solvable() -> None:
    assert is_perfect(group(A5))
    assert not is_perfect(group(S5))
    assert is_solvable(group(S4))
    assert not is_solvable(group(S5))
    assert is_abelian(group("(0 1 2 3)"))
    assert not is_abelian(group(S3))


# -------------------------
# Subgroups, normality, quotients
# -------------------------


def test_subgroup_and_normality() -> None:
    G = group(S4)
    A = derived_subgroup(G)
    transposition = subgroup(G, [parse_permutation("(0 1)", 4)])
    assert is_normal(A, G)
    assert transposition.order == 2
    assert not is_normal(transposition, G)


def test_subgroup_rejects_foreign_elements() -> None:
    with pytest.raises(NotASubgroupError):
        subgroup(group(A4), [parse_permutation("(0 1)", 4)])


def test_normal_closure_of_a_transposition_is_everything() -> None:
    G = group(S4)
    assert normal_closure(G, [parse_permutation("(0 1)", 4)]).order == 24
    assert normal_closure(G, [parse_permutation("(0 1)(2 3)", 4)]).order == 4


def test_quotient_by_klein_four_is_s3() -> None:
    G = group(S4)
    V4 = normal_closure(G, [parse_permutation("(0 1)(2 3)", 4)])
    Q = quotient(G, V4)
    assert Q.order == 6
    assert doa_finite(Q).doa == 2


def test_quotient_by_whole_group_is_trivial() -> None:
    G = group(S3)
    Q = quotient(G, G)
    assert Q.is_trivial()
    assert doa_finite(Q).doa == 0


def test_quotient_needs_a_normal_subgroup() -> None:
    G = group(S4)
    with pytest.raises(NotNormalError):
        quotient(G, subgroup(G, [parse_permutation("(0 1)", 4)]))


def test_direct_product() -> None:
    P = direct_product(group(S3), group("(0 1)"))
    assert P.order == 12
    assert audit(P) == []
    assert doa_finite(P).doa == 2


def test_direct_product_budget() -> None:
    with pytest.raises(EnumerationBudgetError):
        direct_product(group(S5), group(S5), max_order=1000)


def test_matrix_group_as_permutations() -> None:
    G = group(Q8_MATRIX)
    P = as_permutation_group(G)
    assert P.order == 8
    assert audit(P) == []
    assert doa_finite(P).doa == doa_finite(G).doa


# -------------------------
# Simplicity
# -------------------------


@pytest.mark.parametrize(
    "text, simple",
    [(A5, True), (S5, False), (A4, False), ("(0 1 2 3 4)", True), ("()", False), (SL2_3, False)],
)
def test_is_simple(text: str, simple: bool) -> None:
    assert is_simple(group(text)) is simple


def test_simplicity_budget() -> None:
    with pytest.raises(EnumerationBudgetError):
        is_simple(group(S5), max_order=100)


def test_trivial_subgroup() -> None:
    G = group(S3)
    assert trivial_subgroup(G).order == 1
    assert trivial_subgroup(G).is_subgroup_of(G)


# -------------------------
# Literals
# -------------------------


def test_parse_permutation() -> None:
    p = parse_permutation("(0 1 2)(3 4)")
    assert p.images == (1, 2, 0, 4, 3)
    assert str(p) == "(0 1 2)(3 4)"
    assert parse_permutation("()").is_identity()
    assert parse_permutation("(0 1)", degree=4).degree == 4


@pytest.mark.parametrize("text", ["(0 1", "0 1", "(0 a)", "(0 1)(1 2)", ""])
def test_bad_permutation_literals(text: str) -> None:
    with pytest.raises(ElementError):
        parse_permutation(text)


def test_permutation_degree_too_small() -> None:
    with pytest.raises(ElementError):
        parse_permutation("(0 5)", degree=3)


def test_products_apply_left_factor_first() -> None:
    a = parse_permutation("(0 1)", 3)
    b = parse_permutation("(1 2)", 3)
    assert (a * b).images == (2, 0, 1)
    assert (a * a.inverse()).is_identity()


def test_parse_matrix() -> None:
    m = parse_matrix("mod 5: [[1, 1], [0, 1]]")
    assert (m.n, m.m) == (2, 5)
    assert m.rows() == [[1, 1], [0, 1]]
    assert (m * m.inverse()).is_identity()
    assert str(m) == "mod 5: [[1, 1], [0, 1]]"


@pytest.mark.parametrize(
    "text",
    [
        "mod 4: [[2,0],[0,1]]",
        "mod 5: [[1,2,3]]",
        "mod 5 [[1]]",
        "mod 5: [[1.5]]",
        "mod 0: [[1]]",
        "mod 1: [[0]]",
    ],
)
def test_bad_matrix_literals(text: str) -> None:
    with pytest.raises(ElementError):
        parse_matrix(text)


def test_matrix_entries_are_reduced() -> None:
    assert ModMatrix(1, 5, (7,)).entries == (2,)


def test_parse_elements_pads_degrees() -> None:
    gens = parse_elements("(0 1); (0 1 2 3 4)")
    assert [g.degree for g in gens] == [5, 5]


def test_parse_elements_rejects_mixtures() -> None:
    with pytest.raises(ElementError):
        parse_elements("(0 1), mod 3: [[1,1],[0,1]]")
    with pytest.raises(ElementError):
        parse_elements("  ")
