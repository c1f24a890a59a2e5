from __future__ import annotations

import pytest

from adorn.catalog import presentation_of, presented_pairs
from adorn.config import Budgets
from adorn.engine import (
    Adorable,
    FiltrationCertificate,
    NotAdorable,
    NotAdorableReason,
    Stall,
    Unknown,
    check_filtration_certificate,
    derived_certificate,
    derived_quotient_step,
    explore_derived_series,
)
from adorn.finite import (
    NotASubgroupError,
    derived_subgroup,
    doa_finite,
    enumerate_group,
    normal_closure,
    parse_elements,
    parse_permutation,
    subgroup,
    trivial_subgroup,
)
from adorn.fpcore import parse_presentation
from adorn.intlin import AbelianGroupData

S4_PRESENTED = "< a, b | a^2, b^3, (a*b)^4 >"
A5_PRESENTED = "< a, b | a^2, b^3, (a*b)^5 >"
Q8_PRESENTED = "< x, y | x^4, x^2*y^-2, y*x*y^-1*x >"


def explore(text: str, **budgets: int):
    return explore_derived_series(parse_presentation(text), Budgets(**budgets))


# -------------------------
# Derived series of presentations
# -------------------------


def test_symmetric4_trace() -> None:
    trace, verdict = explore(S4_PRESENTED)
    assert isinstance(verdict, Adorable)
    assert verdict.doa == 3
    assert [s.index for s in trace] == [2, 3, 4, 1]
    assert [s.quotient_order for s in trace] == [2, 6, 24, 24]
    assert [str(s.abelianization) for s in trace] == ["Z/2", "Z/3", "Z/2 x Z/2", "1"]


@pytest.mark.parametrize(
    "text, doa",
    [
        (A5_PRESENTED, 0),
        (Q8_PRESENTED, 2),
        ("< a | a^6 >", 1),
        ("< a, b | a^2, b^3, (a*b)^2 >", 2),
        ("< a, b | a^2, b^2, [a,b] >", 1),
        ("< s, t | (s*t)^2 = s^3, s^3 = t^5 >", 0),
        ("< a, b, c, d | a^2, b^3, (a*b)^5, c^2, d^3, (c*d)^5 >", 0),
        ("< | >", 0),
    ],
)
def test_finite_and_perfect_presentations(text: str, doa: int) -> None:
    _, verdict = explore(text)
    assert isinstance(verdict, Adorable)
    assert verdict.doa == doa


def test_free_group_is_not_adorable() -> None:
    trace, verdict = explore("< a, b | >")
    assert isinstance(verdict, NotAdorable)
    assert verdict.reason is NotAdorableReason.NONABELIAN_FREE
    assert verdict.evidence == {"depth": 0, "rank": 2}
    assert trace == []


def test_infinite_cyclic_group_has_degree_one() -> None:
    trace, verdict = explore("< x | >")
    assert isinstance(verdict, Adorable)
    assert verdict.doa == 1
    assert verdict.certificate == "cyclic stage at depth 0"
    assert trace[0].index is None
    assert trace[1].abelianization.is_trivial()


@pytest.mark.parametrize(
    "text",
    ["< x, y | x*y*x = y*x*y >", "< a, b | a*b*a*b^-1 >", "< a, b, c | [a,b] >"],
)
def test_infinite_abelianization_stalls(text: str) -> None:
    trace, verdict = explore(text)
    assert isinstance(verdict, Unknown)
    assert verdict.stall is Stall.INFINITE_ABELIANIZATION
    assert verdict.depth == 0
    assert trace[-1].quotient_order is None


def test_sl2_integers_reaches_a_free_commutator_subgroup() -> None:
    trace, verdict = explore("< a, b | a^4, a^2*b^-3 >")
    assert trace[0].abelianization == AbelianGroupData(0, (12,))
    if isinstance(verdict, NotAdorable):
        assert verdict.reason is NotAdorableReason.NONABELIAN_FREE
        assert verdict.evidence["rank"] == 2
    else:
        assert isinstance(verdict, Unknown)
        assert trace[1].abelianization.rank == 2


def test_depth_budget() -> None:
    trace, verdict = explore(S4_PRESENTED, max_depth=1)
    assert isinstance(verdict, Unknown)
    assert verdict.stall is Stall.DEPTH_BUDGET
    assert verdict.depth == 1
    assert len(trace) == 2


def test_size_budget() -> None:
    trace, verdict = explore(S4_PRESENTED, max_cosets=3)
    assert isinstance(verdict, Unknown)
    assert verdict.stall is Stall.SIZE_BUDGET
    assert verdict.depth == 0
    assert trace[0].index == 2


def _decision(verdict: Adorable | NotAdorable | Unknown) -> tuple[str, object] | None:
    if isinstance(verdict, Adorable):
        return ("adorable", verdict.doa)
    if isinstance(verdict, NotAdorable):
        return ("not_adorable", verdict.reason)
    return None


BUDGET_LADDER = [
    Budgets(max_depth=1, max_cosets=200),
    Budgets(max_depth=3, max_cosets=5000),
    Budgets(),
    Budgets(max_depth=12, max_cosets=300000),
]


@pytest.mark.parametrize(
    "name",
    [presented for presented, _ in presented_pairs()]
    + ["free2", "free3", "sl2_int", "klein_bottle", "unknot"],
)
def test_raising_budgets_never_changes_a_decided_verdict(name: str) -> None:
    p = presentation_of(name)
    decided = None
    for budgets in BUDGET_LADDER:
        _, verdict = explore_derived_series(p, budgets)
        current = _decision(verdict)
        if decided is not None:
            assert current == decided, (name, budgets)
        decided = decided or current


def test_derived_quotient_step() -> None:
    abel, sub = derived_quotient_step(parse_presentation("< a, b | a^2, b^3, (a*b)^2 >"))
    assert abel == AbelianGroupData(0, (2,))
    assert sub is not None
    abel2, _ = derived_quotient_step(sub)
    assert abel2 == AbelianGroupData(0, (3,))


def test_derived_quotient_step_on_perfect_and_infinite_groups() -> None:
    p = parse_presentation(A5_PRESENTED)
    assert derived_quotient_step(p) == (AbelianGroupData(0), p)
    abel, sub = derived_quotient_step(parse_presentation("< a, b | a*b*a*b^-1 >"))
    assert abel == AbelianGroupData(1, (2,))
    assert sub is None


def test_verdict_dicts() -> None:
    _, adorable = explore("< a | a^2 >")
    assert adorable.to_dict()["verdict"] == "adorable"
    assert adorable.to_dict()["trace"][0]["index"] == 2
    _, free = explore("< a, b | >")
    assert free.to_dict()["reason"] == "nonabelian_free"
    _, stalled = explore("< a, b | a*b*a*b^-1 >")
    assert stalled.to_dict()["stall"] == "infinite_abelianization"


# -------------------------
# Filtration certificates
# -------------------------


@pytest.fixture(scope="module")
def s4():
    return enumerate_group(parse_elements("(0 1), (0 1 2 3)"))


def test_derived_chain_of_s4_is_a_certificate(s4) -> None:
    A4 = derived_subgroup(s4)
    V4 = derived_subgroup(A4)
    assert check_filtration_certificate(s4, [s4, A4, V4, trivial_subgroup(s4)])


def test_longer_chain_is_a_certificate_too(s4) -> None:
    A4 = derived_subgroup(s4)
    V4 = derived_subgroup(A4)
    C2 = subgroup(s4, [parse_permutation("(0 1)(2 3)", 4)])
    chain = FiltrationCertificate((s4, A4, V4, C2, trivial_subgroup(s4)))
    assert check_filtration_certificate(s4, chain)
    assert chain.length == 4
    assert chain.orders() == [24, 12, 4, 2, 1]


def test_s5_over_a5_is_a_certificate() -> None:
    S5 = enumerate_group(parse_elements("(0 1), (0 1 2 3 4)"))
    assert check_filtration_certificate(S5, [S5, derived_subgroup(S5)])


def test_nonabelian_factor_is_rejected(s4) -> None:
    V4 = normal_closure(s4, [parse_permutation("(0 1)(2 3)", 4)])
    assert not check_filtration_certificate(s4, [s4, V4, trivial_subgroup(s4)])


def test_chain_must_start_at_the_group(s4) -> None:
    A4 = derived_subgroup(s4)
    assert not check_filtration_certificate(s4, [A4, trivial_subgroup(s4)])


def test_chain_must_end_perfect(s4) -> None:
    assert not check_filtration_certificate(s4, [s4, derived_subgroup(s4)])


def test_foreign_chain_member_raises(s4) -> None:
    S5 = enumerate_group(parse_elements("(0 1), (0 1 2 3 4)"))
    with pytest.raises(NotASubgroupError):
        check_filtration_certificate(s4, [s4, S5])


@pytest.mark.parametrize("text", ["(0 1), (0 1 2 3)", "(0 1), (0 1 2 3 4)", "(0 1 2), (0 1 2 3 4)"])
def test_derived_certificate_has_length_doa(text: str) -> None:
    G = enumerate_group(parse_elements(text))
    cert = derived_certificate(G)
    assert check_filtration_certificate(G, cert)
    assert cert.length == doa_finite(G).doa
