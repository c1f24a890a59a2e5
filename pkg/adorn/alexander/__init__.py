from .fox import alexander_matrix, check_knot_presentation, fox_derivative_abelianized
from .polynomial import (
    alexander_polynomial,
    double_cover_order,
    h1prime_rank,
    knot_adorability_verdict,
)
from .types import AlexanderData, AlexanderError, AlexanderPreconditionError, LaurentPoly

__all__ = [
    "alexander_matrix",
    "check_knot_presentation",
    "fox_derivative_abelianized",
    "alexander_polynomial",
    "double_cover_order",
    "h1prime_rank",
    "knot_adorability_verdict",
    "AlexanderData",
    "AlexanderError",
    "AlexanderPreconditionError",
    "LaurentPoly",
]
