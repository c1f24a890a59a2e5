"""Checkable consequences of the adorability statements on finite groups.

Every function returns True when the statement holds for the given groups, or
when its hypothesis does not apply.
"""

from __future__ import annotations

from adorn.finite import (
    FiniteGroup,
    NotNormalError,
    derived_series,
    direct_product,
    doa_finite,
    is_normal,
    is_perfect,
    is_simple,
    quotient,
)


def _term(series: list[FiniteGroup], i: int) -> FiniteGroup:
    """G^i from a stabilized derived series."""
    return series[min(i, len(series) - 1)]


def _require_normal(N: FiniteGroup, G: FiniteGroup) -> None:
    if not is_normal(N, G):
        raise NotNormalError(f"{N!r} is not normal in {G!r}")


def quotient_monotone(G: FiniteGroup, N: FiniteGroup) -> bool:
    """doa(G/N) <= doa(G)."""
    return doa_finite(quotient(G, N)).doa <= doa_finite(G).doa


def product_law(G: FiniteGroup, H: FiniteGroup, max_order: int = 1_000_000) -> bool:
    """doa(G x H) = max(doa(G), doa(H))."""
    product = direct_product(G, H, max_order)
    return doa_finite(product).doa == max(doa_finite(G).doa, doa_finite(H).doa)


def perfect_extension(G: FiniteGroup, N: FiniteGroup) -> bool:
    """N and G/N perfect implies G perfect."""
    _require_normal(N, G)
    if is_perfect(N) and is_perfect(quotient(G, N)):
        return is_perfect(G)
    return True


def solvable_quotient_inclusions(G: FiniteGroup, H: FiniteGroup) -> bool:
    """If G/H is solvable of derived length k then G^(k+j) lies in H^j for all j."""
    _require_normal(H, G)
    top = derived_series(quotient(G, H))
    if not top[-1].is_trivial():
        return True
    k = len(top) - 1
    g_series = derived_series(G)
    h_series = derived_series(H)
    depth = max(len(g_series), len(h_series)) + 1
    return all(
        _term(g_series, k + j).is_subgroup_of(_term(h_series, j)) for j in range(depth)
    )


def abelian_layer_bounds(G: FiniteGroup, H: FiniteGroup, i: int) -> bool:
    """If G^i/H^i is abelian, that is G^(i+1) lies in H^i, then
    doa(H) <= max(doa(G), i+1) and doa(G) <= max(doa(H), i+1) + 1.
    """
    _require_normal(H, G)
    g_series = derived_series(G)
    h_series = derived_series(H)
    if not _term(g_series, i + 1).is_subgroup_of(_term(h_series, i)):
        return True
    doa_g = len(g_series) - 1
    doa_h = len(h_series) - 1
    return doa_h <= max(doa_g, i + 1) and doa_g <= max(doa_h, i + 1) + 1


def simple_term_bound(G: FiniteGroup, H: FiniteGroup, simplicity_order: int = 10_000) -> bool:
    """If some G^i is simple then doa(H) <= doa(G)."""
    _require_normal(H, G)
    g_series = derived_series(G)
    if not any(term.order <= simplicity_order and is_simple(term, simplicity_order) for term in g_series):
        return True
    return len(derived_series(H)) - 1 <= len(g_series) - 1
