"""Generator literals.

Permutations use cycle notation over 0-based points, ``(0 1 2)(3 4)``, with
``()`` for the identity. Matrices are written ``mod m: [[a, b], [c, d]]``.
Several generators are separated by top-level commas or semicolons.
"""

from __future__ import annotations

import json
import re

from .types import Element, ElementError, ModMatrix, Permutation

_CYCLE = re.compile(r"\(([^()]*)\)")
_MATRIX = re.compile(r"\s*mod\s+(\d+)\s*:\s*(\[.*\])\s*$", re.DOTALL)


def split_generators(text: str) -> list[str]:
    parts: list[str] = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise ElementError(f"Unbalanced '{ch}' at position {i}")
        elif ch in ",;" and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth:
        raise ElementError("Unbalanced brackets in generator list")
    parts.append(text[start:])
    return [p.strip() for p in parts if p.strip()]


def _cycles(text: str) -> list[list[int]]:
    stripped = text.replace(" ", "")
    if _CYCLE.sub("", text).strip() or not stripped:
        raise ElementError(f"Invalid permutation literal {text!r}")
    cycles = []
    for body in _CYCLE.findall(text):
        try:
            points = [int(tok) for tok in body.replace(",", " ").split()]
        except ValueError:
            raise ElementError(f"Invalid cycle ({body}) in {text!r}") from None
        if points:
            cycles.append(points)
    return cycles


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    cycles = _cycles(text)
    largest = max((p for c in cycles for p in c), default=-1)
    if degree is None:
        degree = largest + 1
    if largest >= degree:
        raise ElementError(f"Point {largest} out of range for degree {degree}")
    return Permutation.from_cycles(cycles, max(degree, 1))


def parse_matrix(text: str) -> ModMatrix:
    m = _MATRIX.match(text)
    if m is None:
        raise ElementError(f"Invalid matrix literal {text!r}, expected 'mod m: [[...], ...]'")
    try:
        rows = json.loads(m.group(2))
    except json.JSONDecodeError as exc:
        raise ElementError(f"Invalid matrix rows in {text!r}: {exc.msg}") from exc
    if not isinstance(rows, list) or not all(
        isinstance(r, list) and all(isinstance(e, int) for e in r) for r in rows
    ):
        raise ElementError(f"Matrix rows must be arrays of integers in {text!r}")
    return ModMatrix.from_rows(rows, int(m.group(1)))


def parse_elements(text: str) -> list[Element]:
    """Parse a generator list; permutations are padded to a common degree."""
    parts = split_generators(text)
    if not parts:
        raise ElementError("Empty generator list")
    if all(p.startswith("mod") for p in parts):
        return [parse_matrix(p) for p in parts]
    if any(p.startswith("mod") for p in parts):
        raise ElementError("Generators mix permutations and matrices")
    cycles = [_cycles(p) for p in parts]
    degree = max((x for cs in cycles for c in cs for x in c), default=0) + 1
    return [Permutation.from_cycles(cs, degree) for cs in cycles]
