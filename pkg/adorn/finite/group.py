from __future__ import annotations

from typing import Iterable, Sequence

from adorn.log import get_logger

from .types import (
    DoaResult,
    Element,
    ElementError,
    ElementKind,
    EnumerationBudgetError,
    FiniteGroup,
    ModMatrix,
    NotASubgroupError,
    NotNormalError,
    Permutation,
    Terminal,
)

log = get_logger("finite")

DEFAULT_MAX_ORDER = 1_000_000
SIMPLICITY_ORDER = 10_000


class _Closure:
    """Breadth-first closure of a generating set under right multiplication.

    Generators may be added one at a time; the element list only grows and
    keeps discovery order, identity first.
    """

    def __init__(self, identity: Element, max_order: int, what: str = "group"):
        self.elements: list[Element] = [identity]
        self.members: set[Element] = {identity}
        self.generators: list[Element] = []
        self.max_order = max_order
        self.what = what

    def __contains__(self, g: Element) -> bool:
        return g in self.members

    def add_generator(self, g: Element) -> bool:
        """Extend the closure by ``g``; returns False when ``g`` was already inside."""
        if g in self.members:
            return False
        # elements found so far are already closed under the earlier generators
        known = len(self.elements)
        self.generators.append(g)
        i = 0
        while i < len(self.elements):
            x = self.elements[i]
            for s in (g,) if i < known else self.generators:
                y = x * s
                if y not in self.members:
                    self.members.add(y)
                    self.elements.append(y)
                    if len(self.elements) > self.max_order:
                        raise EnumerationBudgetError(self.max_order, self.what)
            i += 1
        return True

    def freeze(self, kind: ElementKind) -> FiniteGroup:
        return FiniteGroup(kind, tuple(self.generators), tuple(self.elements))


def _check_compatible(generators: Sequence[Element]) -> ElementKind:
    first = generators[0]
    for g in generators[1:]:
        if g.kind is not first.kind:
            raise ElementError("Generators mix permutations and matrices")
        if isinstance(g, Permutation) and g.degree != first.degree:
            raise ElementError(f"Permutation degrees differ: {first.degree} and {g.degree}")
        if isinstance(g, ModMatrix) and (g.n, g.m) != (first.n, first.m):
            raise ElementError(f"Matrix shapes differ: {first} and {g}")
    return first.kind


def enumerate_group(
    generators: Sequence[Element], max_order: int = DEFAULT_MAX_ORDER
) -> FiniteGroup:
    """Enumerate the group generated by ``generators``.

    Raises EnumerationBudgetError once more than ``max_order`` elements are found.
    """
    if not generators:
        raise ElementError("At least one generator is required")
    kind = _check_compatible(generators)
    closure = _Closure(generators[0].identity(), max_order)
    for g in generators:
        closure.add_generator(g)
    group = closure.freeze(kind)
    log.debug("enumerated %s group of order %d", kind.value, group.order)
    return group


def trivial_subgroup(G: FiniteGroup) -> FiniteGroup:
    return FiniteGroup(G.kind, (), (G.identity,))


def subgroup(G: FiniteGroup, generators: Iterable[Element]) -> FiniteGroup:
    gens = list(generators)
    for g in gens:
        if g not in G:
            raise NotASubgroupError(f"{g} is not an element of {G!r}")
    closure = _Closure(G.identity, G.order, "subgroup")
    for g in gens:
        closure.add_generator(g)
    return closure.freeze(G.kind)


def normal_closure(G: FiniteGroup, generators: Iterable[Element]) -> FiniteGroup:
    """Smallest normal subgroup of ``G`` containing ``generators``."""
    gens = list(generators)
    for g in gens:
        if g not in G:
            raise NotASubgroupError(f"{g} is not an element of {G!r}")
    closure = _Closure(G.identity, G.order, "normal closure")
    for g in gens:
        closure.add_generator(g)

    conjugators = [(g.inverse(), g) for g in G.generators]
    i = 0
    while i < len(closure.generators):
        n = closure.generators[i]
        for g_inv, g in conjugators:
            closure.add_generator(g_inv * n * g)
        i += 1
    return closure.freeze(G.kind)


def is_normal(N: FiniteGroup, G: FiniteGroup) -> bool:
    if not N.is_subgroup_of(G):
        return False
    for g in G.generators:
        g_inv = g.inverse()
        for n in N.generators:
            if g_inv * n * g not in N:
                return False
    return True


def is_abelian(G: FiniteGroup) -> bool:
    gens = G.generators
    return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1 :])


def derived_subgroup(G: FiniteGroup) -> FiniteGroup:
    """Normal closure of the commutators of all generator pairs."""
    gens = G.generators
    commutators = []
    for i, a in enumerate(gens):
        a_inv = a.inverse()
        for b in gens[i + 1 :]:
            c = a_inv * b.inverse() * a * b
            if not c.is_identity():
                commutators.append(c)
    return normal_closure(G, commutators)


def derived_series(G: FiniteGroup) -> list[FiniteGroup]:
    """G, G', G'', ... ending at the first perfect term (possibly trivial)."""
    series = [G]
    while True:
        D = derived_subgroup(series[-1])
        if D.order == series[-1].order:
            break
        series.append(D)
    log.debug("derived series orders %s", [H.order for H in series])
    return series


def doa_finite(G: FiniteGroup) -> DoaResult:
    series = derived_series(G)
    terminal = Terminal.TRIVIAL if series[-1].is_trivial() else Terminal.PERFECT
    return DoaResult(len(series) - 1, terminal)


def is_perfect(G: FiniteGroup) -> bool:
    return derived_subgroup(G).order == G.order


def is_solvable(G: FiniteGroup) -> bool:
    return derived_series(G)[-1].is_trivial()


def _conjugacy_class(G: FiniteGroup, x: Element) -> set[Element]:
    seen = {x}
    frontier = [x]
    conjugators = [(g.inverse(), g) for g in G.generators]
    while frontier:
        y = frontier.pop()
        for g_inv, g in conjugators:
            z = g_inv * y * g
            if z not in seen:
                seen.add(z)
                frontier.append(z)
    return seen


def is_simple(G: FiniteGroup, max_order: int = SIMPLICITY_ORDER) -> bool:
    """True iff ``G`` is nontrivial and every nonidentity element normally generates it.

    Only attempted for groups of order at most ``max_order``.
    """
    if G.order > max_order:
        raise EnumerationBudgetError(max_order, "simplicity check")
    if G.is_trivial():
        return False
    covered: set[Element] = {G.identity}
    for x in G.elements:
        if x in covered:
            continue
        if normal_closure(G, [x]).order != G.order:
            return False
        covered |= _conjugacy_class(G, x)
    return True


def as_permutation_group(G: FiniteGroup) -> FiniteGroup:
    """Right-regular representation of ``G`` on its own element list."""
    if G.kind is ElementKind.PERMUTATION:
        return G
    index = {x: i for i, x in enumerate(G.elements)}

    def regular(x: Element) -> Permutation:
        return Permutation(tuple(index[e * x] for e in G.elements))

    return FiniteGroup(
        ElementKind.PERMUTATION,
        tuple(regular(g) for g in G.generators),
        tuple(regular(x) for x in G.elements),
    )


def direct_product(
    G: FiniteGroup, H: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER
) -> FiniteGroup:
    """G x H acting on the disjoint union of the two domains."""
    if G.order * H.order > max_order:
        raise EnumerationBudgetError(max_order, "direct product")
    G = as_permutation_group(G)
    H = as_permutation_group(H)
    dg = G.identity.degree
    dh = H.identity.degree
    left_id = tuple(range(dg))
    right_id = tuple(range(dg, dg + dh))

    def pair(g: Permutation, h: Permutation) -> Permutation:
        return Permutation(g.images + tuple(dg + x for x in h.images))

    gens = [Permutation(g.images + right_id) for g in G.generators]
    gens += [Permutation(left_id + tuple(dg + x for x in h.images)) for h in H.generators]
    elements = tuple(pair(g, h) for g in G.elements for h in H.elements)
    return FiniteGroup(ElementKind.PERMUTATION, tuple(gens), elements)


def quotient(G: FiniteGroup, N: FiniteGroup) -> FiniteGroup:
    """G/N realized as the action of G on the right cosets of N."""
    if not N.is_subgroup_of(G):
        raise NotASubgroupError(f"{N!r} is not a subgroup of {G!r}")
    if not is_normal(N, G):
        raise NotNormalError(f"{N!r} is not normal in {G!r}")

    coset_of: dict[Element, int] = {}
    reps: list[Element] = []
    for x in G.elements:
        if x in coset_of:
            continue
        k = len(reps)
        reps.append(x)
        for n in N.elements:
            coset_of[n * x] = k

    def action(x: Element) -> Permutation:
        return Permutation(tuple(coset_of[r * x] for r in reps))

    gens = tuple(p for p in (action(g) for g in G.generators) if not p.is_identity())
    return FiniteGroup(ElementKind.PERMUTATION, gens, tuple(action(r) for r in reps))


def audit(G: FiniteGroup) -> list[str]:
    """Structural problems with ``G``: empty when closed with identity first."""
    problems = []
    if not G.elements or not G.identity.is_identity():
        problems.append("first element is not the identity")
    if len(G.element_set) != len(G.elements):
        problems.append("duplicate elements")
    for g in G.generators:
        if g not in G:
            problems.append(f"generator {g} missing from elements")
    for x in G.elements:
        if x.inverse() not in G:
            problems.append(f"inverse of {x} missing")
            break
        if any(x * s not in G for s in G.generators):
            problems.append(f"products of {x} with generators not closed")
            break
    return problems
