from .abelian import coset_table_from_abelianization
from .rewriting import reidemeister_schreier, schreier_generators, spanning_tree
from .todd_coxeter import DEFAULT_MAX_COSETS, todd_coxeter
from .types import (
    COMMUTATOR,
    CosetBudgetError,
    CosetError,
    CosetTable,
    IncompleteTableError,
    InfiniteAbelianizationError,
    column,
)

__all__ = [
    "coset_table_from_abelianization",
    "reidemeister_schreier",
    "schreier_generators",
    "spanning_tree",
    "DEFAULT_MAX_COSETS",
    "todd_coxeter",
    "COMMUTATOR",
    "CosetBudgetError",
    "CosetError",
    "CosetTable",
    "IncompleteTableError",
    "InfiniteAbelianizationError",
    "column",
]
