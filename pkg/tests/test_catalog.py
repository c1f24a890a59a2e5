from __future__ import annotations

import pytest

from adorn.catalog import (
    CatalogEntry,
    Provenance,
    UnknownEntryError,
    get,
    gl2,
    names,
    presentation_of,
    presented_pairs,
    sl2,
)
from adorn.engine import abelianization
from adorn.finite import audit, doa_finite
from adorn.intlin import AbelianGroupData

FINITE = [
    "symmetric1", "symmetric3", "symmetric4", "symmetric5", "symmetric6",
    "alternating3", "alternating4", "alternating5",
    "dihedral3", "dihedral4", "dihedral5", "dihedral6",
    "cyclic1", "cyclic6", "klein_four", "quaternion8", "quaternion8_matrix",
    "gl2_2", "gl2_3", "gl2_4", "gl2_5", "gl2_6", "sl2_2", "sl2_3", "sl2_4", "sl2_5", "sl2_7",
]  # fmt: skip


def test_names_are_sorted_and_unique() -> None:
    listing = names()
    assert listing == sorted(set(listing))
    for name in ("trefoil", "free4", "braid6", "symmetric4_presented", "sl2_int"):
        assert name in listing


def test_every_listed_name_resolves() -> None:
    for name in names():
        entry = get(name)
        assert isinstance(entry, CatalogEntry)
        assert entry.name == name
        assert entry.has_model or entry.presentation is not None


@pytest.mark.parametrize("name", FINITE)
def test_finite_facts_are_rederived(name: str) -> None:
    entry = get(name)
    G = entry.model()
    assert G is not None
    assert audit(G) == []
    assert G.order == entry.fact("order")
    if entry.fact("doa") is not None:
        assert doa_finite(G).doa == entry.fact("doa")


@pytest.mark.parametrize("presented, concrete", presented_pairs())
def test_presented_texts_parse(presented: str, concrete: str) -> None:
    p = presentation_of(presented)
    assert p.ngens >= 1
    assert len(p.relators) >= 1


def test_presented_abelianizations_match_their_facts() -> None:
    checked = 0
    for name in names():
        entry = get(name)
        expected = entry.fact("abelianization")
        if entry.presentation is None or expected is None:
            continue
        assert abelianization(entry.presentation) == expected, name
        checked += 1
    assert checked > 20


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_braid_groups_abelianize_to_z(n: int) -> None:
    assert abelianization(presentation_of(f"braid{n}")) == AbelianGroupData(rank=1)


@pytest.mark.parametrize("presented, concrete", presented_pairs())
def test_presented_entries_copy_their_twin(presented: str, concrete: str) -> None:
    entry = get(presented)
    twin = get(concrete)
    assert entry.pair == concrete
    assert not entry.has_model
    assert twin.has_model
    assert entry.fact("doa") == twin.fact("doa")
    assert entry.fact("order") == twin.fact("order")


@pytest.mark.parametrize("m, order", [(2, 6), (3, 48), (4, 96), (5, 480), (6, 288), (7, 2016)])
def test_gl2_orders(m: int, order: int) -> None:
    assert gl2(m).fact("order") == order


@pytest.mark.parametrize("m, order", [(2, 6), (3, 24), (4, 48), (5, 120), (6, 144), (7, 336)])
def test_sl2_orders(m: int, order: int) -> None:
    assert sl2(m).fact("order") == order


@pytest.mark.parametrize("name", ["symmetric9", "alternating2", "gl2_8", "free0", "nonsense", "trefoil_presented"])
def test_unknown_entries(name: str) -> None:
    with pytest.raises(UnknownEntryError):
        get(name)


def test_entry_without_presentation() -> None:
    with pytest.raises(UnknownEntryError):
        presentation_of("symmetric5")


def test_entry_dict() -> None:
    data = get("trefoil").to_dict()
    assert data["model"] is None
    assert data["presentation"] == "< x, y | x*y*x*y^-1*x^-1*y^-1 >"
    assert data["facts"]["alexander"] == {"value": "t^2 - t + 1", "provenance": "derived"}
    assert data["facts"]["abelianization"]["value"]["text"] == "Z"


def test_provenance_of_trivial_facts() -> None:
    entry = get("symmetric5")
    assert entry.facts["order"].provenance is Provenance.TRIVIAL
    assert entry.facts["doa"].provenance is Provenance.LITERATURE
