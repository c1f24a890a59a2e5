from .parser import parse_presentation, parse_word
from .tietze import tietze_simplify
from .types import (
    DuplicateGeneratorError,
    Presentation,
    PresentationError,
    PresentationSyntaxError,
    UndeclaredGeneratorError,
    Word,
    WordError,
)
from .words import (
    commutator,
    concat,
    cyclic_key,
    cyclic_reduce,
    exponent_vector,
    format_presentation,
    format_word,
    free_reduce,
    inverse,
    letter,
    power,
    relation_matrix,
    substitute,
)

__all__ = [
    "parse_presentation",
    "parse_word",
    "tietze_simplify",
    "DuplicateGeneratorError",
    "Presentation",
    "PresentationError",
    "PresentationSyntaxError",
    "UndeclaredGeneratorError",
    "Word",
    "WordError",
    "commutator",
    "concat",
    "cyclic_key",
    "cyclic_reduce",
    "exponent_vector",
    "format_presentation",
    "format_word",
    "free_reduce",
    "inverse",
    "letter",
    "power",
    "relation_matrix",
    "substitute",
]
