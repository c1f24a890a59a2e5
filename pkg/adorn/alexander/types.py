from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Mapping

import sympy

from adorn.errors import AdornError

T = sympy.Symbol("t")


class AlexanderError(AdornError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class AlexanderPreconditionError(AlexanderError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


def _collect(pairs: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    coeffs: dict[int, int] = {}
    for e, c in pairs:
        coeffs[e] = coeffs.get(e, 0) + c
    return tuple(sorted((e, c) for e, c in coeffs.items() if c))


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial in t, stored as sorted (exponent, coefficient) pairs."""

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", _collect(self.terms))

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> LaurentPoly:
        return cls(tuple(coeffs.items()))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls(((exp, coeff),))

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls(((0, c),))

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> LaurentPoly:
        return cls(tuple((int(e), int(c)) for (e,), c in poly.terms()))

    def coeffs(self) -> dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == ((0, 1),)

    @property
    def min_exp(self) -> int:
        return self.terms[0][0] if self.terms else 0

    @property
    def max_exp(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    @property
    def degree(self) -> int:
        return self.max_exp - self.min_exp

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        return LaurentPoly(self.terms + other.terms)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        return LaurentPoly(
            tuple((e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms)
        )

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms))

    def reciprocal(self) -> LaurentPoly:
        """Substitute t -> 1/t."""
        return LaurentPoly(tuple((-e, c) for e, c in self.terms))

    def normalize(self) -> LaurentPoly:
        """Lowest exponent 0 and positive leading coefficient."""
        if self.is_zero():
            return self
        out = self.shift(-self.min_exp)
        return -out if out.terms[-1][1] < 0 else out

    def evaluate(self, x: int) -> int | Fraction:
        value = sum((c * Fraction(x) ** e for e, c in self.terms), Fraction(0))
        return int(value) if value.denominator == 1 else value

    def as_expr(self) -> sympy.Expr:
        return sum((c * T**e for e, c in self.terms), sympy.Integer(0))

    def to_json(self) -> dict[str, Any]:
        return {"coeffs": {str(e): c for e, c in reversed(self.terms)}}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for e, c in reversed(self.terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "t" if e == 1 else f"t^{e}"
                body = power if mag == 1 else f"{mag}{power}"
            if not out:
                out = body if sign == "+" else f"-{body}"
            else:
                out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class AlexanderData:
    """Abelianized Fox matrix (relators x generators) and the Alexander polynomial."""

    matrix: tuple[tuple[LaurentPoly, ...], ...]
    polynomial: LaurentPoly
    degenerate: bool = False

    @property
    def degree(self) -> int:
        return self.polynomial.degree

    def to_dict(self) -> dict[str, Any]:
        return {
            "polynomial": str(self.polynomial),
            "coeffs": self.polynomial.to_json()["coeffs"],
            "degree": self.degree,
            "degenerate": self.degenerate,
            "matrix": [[str(entry) for entry in row] for row in self.matrix],
        }
