"""Named groups: finite models, presentations, and the facts expected of them.

Parametric families are resolved from their name (``symmetric5``, ``gl2_7``,
``braid4``); fixed entries live in ``_FIXED``. Entries ending in
``_presented`` carry only a presentation and name their concrete twin in
``pair``.
"""

from __future__ import annotations

import re
from math import factorial, gcd
from typing import Callable

from adorn.finite import ModMatrix, Permutation
from adorn.fpcore import Presentation, parse_presentation
from adorn.intlin import AbelianGroupData

from .types import CatalogEntry, Fact, Provenance, UnknownEntryError

CITED = Provenance.LITERATURE
DERIVED = Provenance.DERIVED
TRIVIAL = Provenance.TRIVIAL


def _abelian(*torsion: int, rank: int = 0) -> AbelianGroupData:
    return AbelianGroupData(rank=rank, torsion=tuple(torsion))


def _cycle(points: list[int], degree: int) -> Permutation:
    return Permutation.from_cycles([points], degree)


def _prime_factors(m: int) -> list[int]:
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


# -- parametric families


def symmetric(n: int) -> CatalogEntry:
    if not 1 <= n <= 7:
        raise UnknownEntryError(f"symmetric{n}", "degree must be between 1 and 7")
    gens = (_cycle([0, 1], n), _cycle(list(range(n)), n)) if n >= 2 else (Permutation.identity_of(1),)
    doa = {1: (0, TRIVIAL), 2: (1, CITED), 3: (2, DERIVED), 4: (3, DERIVED)}.get(n, (1, CITED))
    facts = {
        "order": Fact(factorial(n), TRIVIAL),
        "doa": Fact(doa[0], doa[1]),
        "abelianization": Fact(_abelian(2) if n >= 2 else _abelian(), DERIVED),
    }
    return CatalogEntry(f"symmetric{n}", f"symmetric group S{n} on {n} points", gens, None, facts)


def alternating(n: int) -> CatalogEntry:
    if not 3 <= n <= 7:
        raise UnknownEntryError(f"alternating{n}", "degree must be between 3 and 7")
    long_cycle = list(range(n)) if n % 2 else list(range(1, n))
    gens = (_cycle([0, 1, 2], n), _cycle(long_cycle, n))
    doa = {3: (1, CITED), 4: (2, DERIVED)}.get(n, (0, CITED))
    abel = {3: _abelian(3), 4: _abelian(3)}.get(n, _abelian())
    facts = {
        "order": Fact(factorial(n) // 2, TRIVIAL),
        "doa": Fact(doa[0], doa[1]),
        "abelianization": Fact(abel, DERIVED),
    }
    return CatalogEntry(f"alternating{n}", f"alternating group A{n}", gens, None, facts)


def cyclic(n: int) -> CatalogEntry:
    if n < 1:
        raise UnknownEntryError(f"cyclic{n}", "order must be positive")
    gens = (_cycle(list(range(n)), n),) if n > 1 else (Permutation.identity_of(1),)
    facts = {
        "order": Fact(n, TRIVIAL),
        "doa": Fact(1 if n > 1 else 0, CITED),
        "abelianization": Fact(_abelian(n) if n > 1 else _abelian(), TRIVIAL),
    }
    return CatalogEntry(
        f"cyclic{n}", f"cyclic group of order {n}", gens, parse_presentation(f"< a | a^{n} >"), facts
    )


def dihedral(n: int) -> CatalogEntry:
    """Dihedral group of order 2n acting on the vertices of an n-gon."""
    if n < 3:
        raise UnknownEntryError(f"dihedral{n}", "needs at least 3 vertices")
    rotation = _cycle(list(range(n)), n)
    reflection = Permutation(tuple((-i) % n for i in range(n)))
    abel = _abelian(2) if n % 2 else _abelian(2, 2)
    facts = {
        "order": Fact(2 * n, TRIVIAL),
        "doa": Fact(2, DERIVED),
        "abelianization": Fact(abel, DERIVED),
    }
    p = parse_presentation(f"< r, s | r^{n}, s^2, (s*r)^2 >")
    return CatalogEntry(
        f"dihedral{n}", f"dihedral group of order {2 * n}", (rotation, reflection), p, facts
    )


def _elementary(m: int) -> tuple[ModMatrix, ...]:
    return (ModMatrix.from_rows([[1, 1], [0, 1]], m), ModMatrix.from_rows([[1, 0], [1, 1]], m))


def gl2(m: int) -> CatalogEntry:
    if not 2 <= m <= 7:
        raise UnknownEntryError(f"gl2_{m}", "modulus must be between 2 and 7")
    units = [u for u in range(2, m) if gcd(u, m) == 1]
    gens = _elementary(m) + tuple(ModMatrix.from_rows([[u, 0], [0, 1]], m) for u in units)
    order = m**4
    for p in _prime_factors(m):
        order = order * (p - 1) * (p * p - 1) // p**3
    facts = {"order": Fact(order, DERIVED)}
    doa = {2: 2, 3: 4, 5: 1, 7: 1}
    if m in doa:
        facts["doa"] = Fact(doa[m], DERIVED)
    return CatalogEntry(f"gl2_{m}", f"GL(2, Z/{m})", gens, None, facts)


def sl2(m: int) -> CatalogEntry:
    if not 2 <= m <= 7:
        raise UnknownEntryError(f"sl2_{m}", "modulus must be between 2 and 7")
    order = m**3
    for p in _prime_factors(m):
        order = order * (p * p - 1) // (p * p)
    facts = {"order": Fact(order, DERIVED)}
    doa = {2: 2, 3: 3, 5: 0, 7: 0}
    if m in doa:
        facts["doa"] = Fact(doa[m], DERIVED)
    return CatalogEntry(f"sl2_{m}", f"SL(2, Z/{m})", _elementary(m), None, facts)


def free(n: int) -> CatalogEntry:
    if not 1 <= n <= 8:
        raise UnknownEntryError(f"free{n}", "rank must be between 1 and 8")
    names = ", ".join(f"x{k + 1}" for k in range(n))
    facts = {"abelianization": Fact(_abelian(rank=n), TRIVIAL)}
    if n == 1:
        facts["verdict"] = Fact("adorable", CITED)
        facts["doa"] = Fact(1, CITED)
    else:
        facts["verdict"] = Fact("not_adorable", CITED)
    return CatalogEntry(f"free{n}", f"free group of rank {n}", (), parse_presentation(f"< {names} | >"), facts)


def surface(g: int) -> CatalogEntry:
    if not 1 <= g <= 3:
        raise UnknownEntryError(f"surface{g}", "genus must be between 1 and 3")
    gens = ", ".join(f"a{k}, b{k}" for k in range(1, g + 1))
    rel = "*".join(f"[a{k},b{k}]" for k in range(1, g + 1))
    facts = {"abelianization": Fact(_abelian(rank=2 * g), DERIVED)}
    return CatalogEntry(
        f"surface{g}",
        f"fundamental group of the closed orientable surface of genus {g}",
        (),
        parse_presentation(f"< {gens} | {rel} >"),
        facts,
    )


def braid(n: int) -> CatalogEntry:
    if not 2 <= n <= 6:
        raise UnknownEntryError(f"braid{n}", "strand count must be between 2 and 6")
    names = [f"s{k}" for k in range(1, n)]
    rels = []
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            a, b = names[i], names[j]
            if j == i + 1:
                rels.append(f"{a}*{b}*{a} = {b}*{a}*{b}")
            else:
                rels.append(f"[{a},{b}]")
    p = parse_presentation(f"< {', '.join(names)} | {', '.join(rels)} >")
    facts = {"abelianization": Fact(_abelian(rank=1), DERIVED)}
    return CatalogEntry(f"braid{n}", f"Artin braid group on {n} strands", (), p, facts)


_FAMILIES: list[tuple[re.Pattern[str], Callable[[int], CatalogEntry], range]] = [
    (re.compile(r"symmetric(\d+)"), symmetric, range(1, 8)),
    (re.compile(r"alternating(\d+)"), alternating, range(3, 8)),
    (re.compile(r"cyclic(\d+)"), cyclic, range(1, 13)),
    (re.compile(r"dihedral(\d+)"), dihedral, range(3, 9)),
    (re.compile(r"gl2_(\d+)"), gl2, range(2, 8)),
    (re.compile(r"sl2_(\d+)"), sl2, range(2, 8)),
    (re.compile(r"free(\d+)"), free, range(1, 5)),
    (re.compile(r"surface(\d+)"), surface, range(1, 4)),
    (re.compile(r"braid(\d+)"), braid, range(2, 7)),
]


# -- fixed entries

_Q8_PERMS = (
    Permutation((2, 3, 1, 0, 6, 7, 5, 4)),
    Permutation((4, 5, 7, 6, 1, 0, 2, 3)),
)
_Q8_PRESENTATION = "< x, y | x^4, x^2*y^-2, y*x*y^-1*x >"
_A5 = "a^2, b^3, (a*b)^5"

_PRESENTED: dict[str, tuple[str, str]] = {
    "cyclic6": ("< a | a^6 >", "cyclic6"),
    "symmetric3": ("< a, b | a^2, b^3, (a*b)^2 >", "symmetric3"),
    "symmetric4": ("< a, b | a^2, b^3, (a*b)^4 >", "symmetric4"),
    "symmetric5": ("< a, b | a^2, b^5, (a*b)^4, ([a,b])^3 >", "symmetric5"),
    "alternating4": ("< a, b | a^2, b^3, (a*b)^3 >", "alternating4"),
    "alternating5": (f"< a, b | {_A5} >", "alternating5"),
    "dihedral4": ("< r, s | r^4, s^2, (s*r)^2 >", "dihedral4"),
    "dihedral5": ("< r, s | r^5, s^2, (s*r)^2 >", "dihedral5"),
    "klein_four": ("< a, b | a^2, b^2, [a,b] >", "klein_four"),
    "quaternion8": (_Q8_PRESENTATION, "quaternion8"),
    "binary_icosahedral": ("< s, t | (s*t)^2 = s^3, s^3 = t^5 >", "sl2_5"),
}


def _fixed() -> dict[str, Callable[[], CatalogEntry]]:
    def quaternion8() -> CatalogEntry:
        facts = {
            "order": Fact(8, TRIVIAL),
            "doa": Fact(2, DERIVED),
            "abelianization": Fact(_abelian(2, 2), DERIVED),
        }
        return CatalogEntry(
            "quaternion8", "quaternion group of order 8", _Q8_PERMS, parse_presentation(_Q8_PRESENTATION), facts
        )

    def quaternion8_matrix() -> CatalogEntry:
        gens = (
            ModMatrix.from_rows([[0, 2], [1, 0]], 3),
            ModMatrix.from_rows([[1, 1], [1, 2]], 3),
        )
        facts = {"order": Fact(8, TRIVIAL), "doa": Fact(2, DERIVED)}
        return CatalogEntry("quaternion8_matrix", "quaternion group inside SL(2, Z/3)", gens, None, facts)

    def klein_four() -> CatalogEntry:
        gens = (Permutation((1, 0, 3, 2)), Permutation((2, 3, 0, 1)))
        facts = {
            "order": Fact(4, TRIVIAL),
            "doa": Fact(1, CITED),
            "abelianization": Fact(_abelian(2, 2), TRIVIAL),
        }
        return CatalogEntry(
            "klein_four", "Klein four-group", gens, parse_presentation(_PRESENTED["klein_four"][0]), facts
        )

    def klein_bottle() -> CatalogEntry:
        facts = {"abelianization": Fact(_abelian(2, rank=1), DERIVED)}
        return CatalogEntry(
            "klein_bottle",
            "fundamental group of the Klein bottle",
            (),
            parse_presentation("< a, b | a*b*a*b^-1 >"),
            facts,
        )

    def knot(name: str, description: str, text: str, alexander: str, verdict: str) -> CatalogEntry:
        facts = {
            "abelianization": Fact(_abelian(rank=1), DERIVED),
            "alexander": Fact(alexander, DERIVED),
            "verdict": Fact(verdict, CITED),
        }
        return CatalogEntry(name, description, (), parse_presentation(text), facts)

    def sl2_int() -> CatalogEntry:
        facts = {
            "abelianization": Fact(_abelian(12), DERIVED),
            "verdict": Fact("not_adorable", DERIVED),
        }
        return CatalogEntry(
            "sl2_int",
            "SL(2, Z), whose commutator subgroup is free of rank 2",
            (),
            parse_presentation("< a, b | a^4, a^2*b^-3 >"),
            facts,
        )

    def free_product_perfect() -> CatalogEntry:
        facts = {
            "abelianization": Fact(_abelian(), DERIVED),
            "doa": Fact(0, CITED),
            "verdict": Fact("adorable", CITED),
        }
        return CatalogEntry(
            "free_product_perfect",
            "free product A5 * A5 of two perfect groups",
            (),
            parse_presentation(f"< a, b, c, d | {_A5}, c^2, d^3, (c*d)^5 >"),
            facts,
        )

    return {
        "quaternion8": quaternion8,
        "quaternion8_matrix": quaternion8_matrix,
        "klein_four": klein_four,
        "klein_bottle": klein_bottle,
        "unknot": lambda: knot("unknot", "group of the unknot", "< x | >", "1", "adorable"),
        "trefoil": lambda: knot(
            "trefoil", "trefoil knot group", "< x, y | x*y*x = y*x*y >", "t^2 - t + 1", "not_adorable"
        ),
        "figure_eight": lambda: knot(
            "figure_eight",
            "figure-eight knot group",
            "< x, y | y*x*y^-1*x*y = x*y*x^-1*y*x >",
            "t^2 - 3t + 1",
            "not_adorable",
        ),
        "trefoil_sum_trefoil": lambda: knot(
            "trefoil_sum_trefoil",
            "group of the connected sum of two trefoils",
            "< x, y, z | x*y*x = y*x*y, x*z*x = z*x*z >",
            "t^4 - 2t^3 + 3t^2 - 2t + 1",
            "not_adorable",
        ),
        "sl2_int": sl2_int,
        "free_product_perfect": free_product_perfect,
    }


_FIXED = _fixed()


def _presented(base: str) -> CatalogEntry:
    text, pair = _PRESENTED[base]
    twin = get(pair)
    facts = {k: f for k, f in twin.facts.items() if k in ("order", "doa", "abelianization")}
    if "abelianization" not in facts and pair == "sl2_5":
        facts["abelianization"] = Fact(_abelian(), DERIVED)
    return CatalogEntry(
        f"{base}_presented",
        f"presentation of {twin.description}",
        (),
        parse_presentation(text),
        facts,
        pair,
    )


def get(name: str) -> CatalogEntry:
    if name.endswith("_presented") and name[: -len("_presented")] in _PRESENTED:
        return _presented(name[: -len("_presented")])
    if name in _FIXED:
        return _FIXED[name]()
    for pattern, build, _ in _FAMILIES:
        m = pattern.fullmatch(name)
        if m is not None:
            return build(int(m.group(1)))
    raise UnknownEntryError(name)


def names() -> list[str]:
    out = list(_FIXED)
    out += [f"{base}_presented" for base in _PRESENTED]
    for pattern, _, span in _FAMILIES:
        prefix = pattern.pattern.split("(")[0]
        out += [f"{prefix}{k}" for k in span]
    return sorted(set(out))


def presented_pairs() -> list[tuple[str, str]]:
    """(presented entry, concrete twin) for every oracle pair."""
    return [(f"{base}_presented", pair) for base, (_, pair) in _PRESENTED.items()]


def presentation_of(name: str) -> Presentation:
    entry = get(name)
    if entry.presentation is None:
        raise UnknownEntryError(name, "entry has no presentation")
    return entry.presentation
