from __future__ import annotations

from typing import Sequence

from adorn.finite import FiniteGroup, NotASubgroupError, derived_series, is_normal, is_perfect
from adorn.log import get_logger

from .types import FiltrationCertificate

log = get_logger("engine")


def _abelian_quotient(upper: FiniteGroup, lower: FiniteGroup) -> bool:
    """upper/lower is abelian iff commutators of upper's generators lie in lower."""
    gens = upper.generators
    for i, a in enumerate(gens):
        a_inv = a.inverse()
        for b in gens[i + 1 :]:
            if a_inv * b.inverse() * a * b not in lower:
                return False
    return True


def check_filtration_certificate(
    G: FiniteGroup, chain: FiltrationCertificate | Sequence[FiniteGroup]
) -> bool:
    """True iff ``chain`` starts at G, each link is normal in its predecessor
    with abelian quotient, and the last member is perfect.

    Raises NotASubgroupError when a member is not a subgroup of G.
    """
    members = chain.chain if isinstance(chain, FiltrationCertificate) else tuple(chain)
    for k, H in enumerate(members):
        if not H.is_subgroup_of(G):
            raise NotASubgroupError(f"Chain member {k} ({H!r}) is not a subgroup of {G!r}")
    if not members or not members[0].same_elements(G):
        return False

    for k, (upper, lower) in enumerate(zip(members, members[1:]), start=1):
        if not is_normal(lower, upper):
            log.debug("link %d is not normal in its predecessor", k)
            return False
        if not _abelian_quotient(upper, lower):
            log.debug("link %d has a nonabelian quotient", k)
            return False
    return is_perfect(members[-1])


def derived_certificate(G: FiniteGroup) -> FiltrationCertificate:
    """The derived series itself, which always passes the check."""
    return FiltrationCertificate(tuple(derived_series(G)))
