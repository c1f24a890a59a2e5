"""Replayable checks of the adorability facts on concrete groups.

Each check is deterministic: sampled groups come from a seeded generator and
details never include timings.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from adorn.alexander import (
    alexander_polynomial,
    double_cover_order,
    h1prime_rank,
    knot_adorability_verdict,
)
from adorn.catalog import get, presentation_of, presented_pairs
from adorn.config import Budgets
from adorn.engine import (
    Adorable,
    NotAdorable,
    NotAdorableReason,
    abelian_layer_bounds,
    check_filtration_certificate,
    explore_derived_series,
    perfect_extension,
    product_law,
    quotient_monotone,
    simple_term_bound,
    solvable_quotient_inclusions,
)
from adorn.errors import AdornError
from adorn.finite import (
    DoaResult,
    FiniteGroup,
    derived_series,
    derived_subgroup,
    direct_product,
    doa_finite,
    is_perfect,
    normal_closure,
    trivial_subgroup,
)
from adorn.intlin import AbelianGroupData, h2_rank_abelian
from adorn.log import get_logger

from .types import CheckResult, SuiteReport, UnknownCheckError, VerifyError

log = get_logger("verify")

DEFAULT_SEED = 0

MONOTONE_SAMPLES = 100
PRODUCT_SAMPLES = 50
EXTENSION_SAMPLES = 8

# |G| <= 2000
QUOTIENT_POOL = (
    "symmetric3", "symmetric4", "symmetric5", "symmetric6",
    "alternating4", "alternating5", "alternating6",
    "dihedral3", "dihedral4", "dihedral6", "dihedral8",
    "quaternion8", "klein_four", "cyclic6", "cyclic12",
    "gl2_2", "gl2_3", "gl2_4", "gl2_5", "sl2_3", "sl2_5", "sl2_7",
)  # fmt: skip

# pairwise products stay below 4000 elements
PRODUCT_POOL = (
    "symmetric3", "symmetric4", "alternating4", "alternating5",
    "dihedral3", "dihedral4", "dihedral5", "quaternion8", "klein_four",
    "cyclic2", "cyclic3", "cyclic5", "gl2_2", "sl2_3",
)  # fmt: skip

INCLUSION_POOL = ("symmetric4", "symmetric5", "gl2_3", "sl2_5", "dihedral6", "gl2_5")


@dataclass
class _Context:
    budgets: Budgets
    seed: int
    _models: dict[str, FiniteGroup] = field(default_factory=dict)
    _doa: dict[str, DoaResult] = field(default_factory=dict)

    def model(self, name: str) -> FiniteGroup:
        if name not in self._models:
            group = get(name).model(self.budgets.max_order)
            if group is None:
                raise VerifyError(f"Catalog entry '{name}' has no finite model")
            self._models[name] = group
        return self._models[name]

    def doa(self, name: str) -> DoaResult:
        if name not in self._doa:
            self._doa[name] = doa_finite(self.model(name))
        return self._doa[name]

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


CheckFn = Callable[[_Context], tuple[bool, str]]


@dataclass(frozen=True)
class _Check:
    name: str
    statement: str
    run: CheckFn


_CHECKS: dict[str, _Check] = {}


def _check(name: str, statement: str) -> Callable[[CheckFn], CheckFn]:
    def register(fn: CheckFn) -> CheckFn:
        _CHECKS[name] = _Check(name, statement, fn)
        return fn

    return register


def _normal_samples(G: FiniteGroup, rng: random.Random, count: int) -> list[FiniteGroup]:
    picks = [G.elements[rng.randrange(G.order)] for _ in range(count)]
    return [normal_closure(G, [x]) for x in picks]


def _doa_line(pairs: Iterable[tuple[str, int]]) -> str:
    return ", ".join(f"{name}={doa}" for name, doa in pairs)


# -- definition examples


@_check("symmetric_degree_one", "symmetric groups on n >= 5 letters are adorable of degree 1")
def _symmetric_degree_one(ctx: _Context) -> tuple[bool, str]:
    got = [(f"symmetric{n}", ctx.doa(f"symmetric{n}").doa) for n in (5, 6, 7)]
    return all(doa == 1 for _, doa in got), _doa_line(got)


@_check("perfect_degree_zero", "perfect groups are adorable of degree 0")
def _perfect_degree_zero(ctx: _Context) -> tuple[bool, str]:
    A5 = ctx.model("alternating5")
    doa = ctx.doa("alternating5").doa
    perfect = is_perfect(A5)
    return doa == 0 and perfect, f"alternating5={doa}, perfect={perfect}"


@_check("solvable_degrees", "finite solvable groups have doa equal to their derived length")
def _solvable_degrees(ctx: _Context) -> tuple[bool, str]:
    expected = {"symmetric3": 2, "symmetric4": 3, "quaternion8": 2, "quaternion8_matrix": 2}
    got = [(name, ctx.doa(name).doa) for name in expected]
    return all(expected[name] == doa for name, doa in got), _doa_line(got)


# -- statements about normal subgroups and products


@_check("quotient_monotone", "doa(G/N) <= doa(G) for every normal subgroup N")
def _quotient_monotone(ctx: _Context) -> tuple[bool, str]:
    rng = ctx.rng("quotient")
    violations = []
    for k in range(MONOTONE_SAMPLES):
        name = rng.choice(QUOTIENT_POOL)
        G = ctx.model(name)
        (N,) = _normal_samples(G, rng, 1)
        if not quotient_monotone(G, N):
            violations.append(f"{name}/N{k}")
    return not violations, f"{MONOTONE_SAMPLES} samples, violations: {violations or 'none'}"


@_check("product_law", "doa(G x H) = max(doa(G), doa(H))")
def _product_law(ctx: _Context) -> tuple[bool, str]:
    rng = ctx.rng("product")
    violations = []
    for _ in range(PRODUCT_SAMPLES):
        a, b = rng.choice(PRODUCT_POOL), rng.choice(PRODUCT_POOL)
        if not product_law(ctx.model(a), ctx.model(b), ctx.budgets.max_order):
            violations.append(f"{a} x {b}")
    return not violations, f"{PRODUCT_SAMPLES} pairs, violations: {violations or 'none'}"


@_check("perfect_extension", "an extension of a perfect group by a perfect group is perfect")
def _perfect_extension(ctx: _Context) -> tuple[bool, str]:
    rng = ctx.rng("extension")
    A5 = ctx.model("alternating5")
    groups = {
        "alternating5": A5,
        "sl2_5": ctx.model("sl2_5"),
        "alternating5 x alternating5": direct_product(A5, A5, ctx.budgets.max_order),
        "alternating5 x cyclic2": direct_product(A5, ctx.model("cyclic2"), ctx.budgets.max_order),
        "alternating5 x symmetric3": direct_product(A5, ctx.model("symmetric3"), ctx.budgets.max_order),
    }
    configurations = 0
    violations = []
    for name, G in groups.items():
        normals = [normal_closure(G, [g]) for g in G.generators]
        normals += _normal_samples(G, rng, EXTENSION_SAMPLES)
        normals += [trivial_subgroup(G), G]
        for N in normals:
            configurations += 1
            if not perfect_extension(G, N):
                violations.append(f"{name} over order {N.order}")
    return not violations, f"{configurations} configurations, violations: {violations or 'none'}"


@_check(
    "filtration_certificates",
    "G is adorable of degree at most n iff it has a normal chain of length n "
    "with abelian factors ending in a perfect group",
)
def _filtration_certificates(ctx: _Context) -> tuple[bool, str]:
    S4 = ctx.model("symmetric4")
    A4 = derived_subgroup(S4)
    V4 = derived_subgroup(A4)
    S5 = ctx.model("symmetric5")
    cases = [
        ("S4 > A4 > V4 > 1", check_filtration_certificate(S4, [S4, A4, V4, trivial_subgroup(S4)]), True),
        ("S5 > A5", check_filtration_certificate(S5, [S5, derived_subgroup(S5)]), True),
        ("S4 > V4 > 1", check_filtration_certificate(S4, [S4, V4, trivial_subgroup(S4)]), False),
    ]
    detail = ", ".join(f"{label}: {got}" for label, got, _ in cases)
    return all(got == want for _, got, want in cases), detail


@_check(
    "normal_subgroup_inclusions",
    "derived terms of G sit inside derived terms of a normal subgroup H as its quotient allows",
)
def _normal_subgroup_inclusions(ctx: _Context) -> tuple[bool, str]:
    rng = ctx.rng("inclusions")
    configurations = 0
    violations = []
    for name in INCLUSION_POOL:
        G = ctx.model(name)
        normals = [derived_subgroup(G)] + _normal_samples(G, rng, 4)
        for k, H in enumerate(normals):
            configurations += 1
            ok = solvable_quotient_inclusions(G, H)
            ok = ok and all(abelian_layer_bounds(G, H, i) for i in range(4))
            ok = ok and simple_term_bound(G, H, ctx.budgets.simplicity_order)
            if not ok:
                violations.append(f"{name}/H{k}")
    return not violations, f"{configurations} configurations, violations: {violations or 'none'}"


@_check("h2_rank_formula", "H2 of a free abelian group of rank r has rank r choose 2")
def _h2_rank_formula(ctx: _Context) -> tuple[bool, str]:
    got = {r: h2_rank_abelian(AbelianGroupData(rank=r)) for r in (3, 5)}
    return got == {3: 3, 5: 10}, ", ".join(f"rank {r} -> {v}" for r, v in got.items())


# -- presented groups


@_check("alexander_verdicts", "a knot group is adorable iff its Alexander polynomial is trivial")
def _alexander_verdicts(ctx: _Context) -> tuple[bool, str]:
    expected = {
        "unknot": ("1", Adorable.label, 1),
        "trefoil": ("t^2 - t + 1", NotAdorable.label, 3),
        "figure_eight": ("t^2 - 3t + 1", NotAdorable.label, 5),
    }
    ok = True
    parts = []
    for name, (poly, label, det) in expected.items():
        p = presentation_of(name)
        got_poly = str(alexander_polynomial(p).polynomial)
        got_label = knot_adorability_verdict(p).label
        got_det = double_cover_order(p)
        ok = ok and (got_poly, got_label, got_det) == (poly, label, det)
        parts.append(f"{name}: {got_poly}, {got_label}, |D(-1)|={got_det}")
    trefoil = presentation_of("trefoil")
    rank = h1prime_rank(trefoil)
    parts.append(f"trefoil H1' rank={rank}")
    return ok and rank == 2, "; ".join(parts)


@_check(
    "finite_quotient_traces",
    "the presented derived series agrees with finite enumeration on every oracle pair",
)
def _finite_quotient_traces(ctx: _Context) -> tuple[bool, str]:
    mismatches = []
    for presented, concrete in presented_pairs():
        p = presentation_of(presented)
        G = ctx.model(concrete)
        series = derived_series(G)
        trace, verdict = explore_derived_series(p, ctx.budgets)
        if not isinstance(verdict, Adorable) or verdict.doa != len(series) - 1:
            mismatches.append(f"{presented}: {verdict.label}")
            continue
        for step in trace:
            term = series[min(step.depth + 1, len(series) - 1)]
            if step.quotient_order != G.order // term.order:
                mismatches.append(f"{presented}: depth {step.depth}")
                break
    total = len(presented_pairs())
    return not mismatches, f"{total} pairs, mismatches: {mismatches or 'none'}"


@_check("free_group_verdict", "nonabelian free groups are not adorable; Z is adorable of degree 1")
def _free_group_verdict(ctx: _Context) -> tuple[bool, str]:
    parts = []
    ok = True
    for n in (1, 2, 3):
        p = presentation_of(f"free{n}")
        _, verdict = explore_derived_series(p, ctx.budgets)
        if n == 1:
            good = isinstance(verdict, Adorable) and verdict.doa == 1
        else:
            good = isinstance(verdict, NotAdorable) and verdict.reason is NotAdorableReason.NONABELIAN_FREE
        ok = ok and good
        parts.append(f"free{n}: {verdict.label}")
    return ok, ", ".join(parts)


def check_names() -> list[str]:
    return list(_CHECKS)


def _run_one(check: _Check, ctx: _Context) -> CheckResult:
    log.info("running check %s", check.name)
    try:
        passed, detail = check.run(ctx)
    except AdornError as exc:
        passed, detail = False, f"error: {exc}"
    if not passed:
        log.warning("check %s failed: %s", check.name, detail)
    return CheckResult(check.name, check.statement, passed, detail)


def run_suite(
    budgets: Budgets | None = None,
    only: Iterable[str] | None = None,
    seed: int = DEFAULT_SEED,
) -> SuiteReport:
    """Run the named checks (all of them by default) in registration order."""
    selected = list(_CHECKS) if only is None else list(only)
    for name in selected:
        if name not in _CHECKS:
            raise UnknownCheckError(name)
    ctx = _Context(budgets or Budgets(), seed)
    return SuiteReport(tuple(_run_one(_CHECKS[name], ctx) for name in selected))
