from .group import (
    DEFAULT_MAX_ORDER,
    SIMPLICITY_ORDER,
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
    quotient,
    subgroup,
    trivial_subgroup,
)
from .literals import parse_elements, parse_matrix, parse_permutation, split_generators
from .types import (
    DoaResult,
    Element,
    ElementError,
    ElementKind,
    EnumerationBudgetError,
    FiniteGroup,
    FiniteGroupError,
    ModMatrix,
    NotASubgroupError,
    NotNormalError,
    Permutation,
    Terminal,
)

__all__ = [
    "DEFAULT_MAX_ORDER",
    "SIMPLICITY_ORDER",
    "as_permutation_group",
    "audit",
    "derived_series",
    "derived_subgroup",
    "direct_product",
    "doa_finite",
    "enumerate_group",
    "is_abelian",
    "is_normal",
    "is_perfect",
    "is_simple",
    "is_solvable",
    "normal_closure",
    "quotient",
    "subgroup",
    "trivial_subgroup",
    "parse_elements",
    "parse_matrix",
    "parse_permutation",
    "split_generators",
    "DoaResult",
    "Element",
    "ElementError",
    "ElementKind",
    "EnumerationBudgetError",
    "FiniteGroup",
    "FiniteGroupError",
    "ModMatrix",
    "NotASubgroupError",
    "NotNormalError",
    "Permutation",
    "Terminal",
]
