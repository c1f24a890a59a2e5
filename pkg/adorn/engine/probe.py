from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from adorn.config import Budgets, ProbeParams
from adorn.fpcore import Presentation, Word, free_reduce
from adorn.log import get_logger

from .series import explore_derived_series
from .types import Adorable, NotAdorable, ProbeParamsError, ProbeReport, Unknown

log = get_logger("engine")


def random_presentation(n_gens: int, n_rels: int, max_len: int, seed: int) -> Presentation:
    """Seeded random presentation on x1..xn with freely reduced relators.

    Each relator has a uniform length in [1, max_len]; every letter is drawn
    uniformly among the signed letters that do not cancel the previous one.
    """
    if n_gens < 1 or n_rels < 0 or max_len < 1:
        raise ProbeParamsError(
            f"Invalid probe parameters n_gens={n_gens}, n_rels={n_rels}, max_len={max_len}"
        )
    rng = random.Random(seed)
    signed = [(g, e) for g in range(n_gens) for e in (1, -1)]
    relators: list[Word] = []
    for _ in range(n_rels):
        length = rng.randint(1, max_len)
        letters: list[tuple[int, int]] = []
        for _ in range(length):
            choices = signed
            if letters:
                gen, exp = letters[-1]
                choices = [s for s in signed if s != (gen, -exp)]
            letters.append(rng.choice(choices))
        relators.append(free_reduce(letters))
    names = tuple(f"x{k + 1}" for k in range(n_gens))
    return Presentation(names, tuple(relators))


@dataclass(frozen=True)
class _Outcome:
    label: str
    stall: str | None
    depth: int
    max_quotient_order: int


def _explore_one(p: Presentation, budgets: Budgets) -> _Outcome:
    trace, verdict = explore_derived_series(p, budgets)
    orders = [s.index for s in trace if s.index is not None]
    largest = max(orders, default=0)
    match verdict:
        case Adorable(doa=doa):
            return _Outcome(verdict.label, None, doa, largest)
        case NotAdorable():
            return _Outcome(verdict.label, None, len(trace), largest)
        case Unknown(depth=depth, stall=stall):
            return _Outcome(verdict.label, stall.value, depth, largest)
    raise AssertionError("Unreachable")


class Prober:
    """Runs the derived-series walk over a batch and aggregates the outcomes.

    With ``workers > 1`` samples run in a process pool; results are collected
    in input order, so the report does not depend on the worker count.
    """

    def __init__(self, budgets: Budgets, workers: int = 1):
        self.budgets = budgets
        self.workers = workers

    def _outcomes(self, presentations: Sequence[Presentation]) -> list[_Outcome]:
        if self.workers <= 1 or len(presentations) <= 1:
            return [_explore_one(p, self.budgets) for p in presentations]
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            return list(pool.map(_explore_one, presentations, [self.budgets] * len(presentations)))

    def _run(self, presentations: Sequence[Presentation], seed: int | None) -> ProbeReport:
        outcomes = self._outcomes(presentations)
        verdicts = Counter({"adorable": 0, "not_adorable": 0, "unknown": 0})
        stalls: Counter[str] = Counter()
        depths: Counter[int] = Counter()
        for out in outcomes:
            verdicts[out.label] += 1
            depths[out.depth] += 1
            if out.stall is not None:
                stalls[out.stall] += 1

        histogram = tuple(depths[d] for d in range(max(depths, default=-1) + 1))
        report = ProbeReport(
            samples=len(outcomes),
            verdicts=dict(sorted(verdicts.items())),
            stalls=dict(sorted(stalls.items())),
            depth_histogram=histogram,
            max_quotient_order=max((o.max_quotient_order for o in outcomes), default=0),
            seed=seed,
        )
        log.info("probe: %d samples, verdicts %s", report.samples, report.verdicts)
        return report

    def run_random(self, params: ProbeParams) -> ProbeReport:
        rng = random.Random(params.seed)
        seeds = [rng.randrange(2**32) for _ in range(params.count)]
        presentations = [
            random_presentation(params.n_gens, params.n_rels, params.max_len, s) for s in seeds
        ]
        return self._run(presentations, params.seed)

    def run_batch(self, presentations: Sequence[Presentation]) -> ProbeReport:
        return self._run(list(presentations), None)


def random_probe(
    params: ProbeParams, budgets: Budgets | None = None, workers: int | None = None
) -> ProbeReport:
    """Walk the derived series of ``params.count`` seeded random presentations."""
    return Prober(budgets or Budgets(), workers or params.workers).run_random(params)


def probe_presentations(
    presentations: Sequence[Presentation], budgets: Budgets | None = None, workers: int = 1
) -> ProbeReport:
    return Prober(budgets or Budgets(), workers).run_batch(presentations)
