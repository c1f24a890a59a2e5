from __future__ import annotations

from typing import Sequence

from adorn.fpcore import Presentation, Word
from adorn.log import get_logger

from .types import CosetBudgetError, CosetTable, column

log = get_logger("cosets")

DEFAULT_MAX_COSETS = 100_000
UNDEFINED = -1


def _columns(w: Word) -> list[int]:
    return [column(gen, step) for gen, step in w.signed_letters()]


class _Enumeration:
    """HLT coset enumeration with union-find coincidence processing.

    Dead cosets keep their rows; ``parent`` maps them towards the surviving
    lower-numbered coset.
    """

    def __init__(self, p: Presentation, max_cosets: int):
        self.width = 2 * p.ngens
        self.table: list[list[int]] = [[UNDEFINED] * self.width]
        self.parent: list[int] = [0]
        self.live = 1
        self.max_cosets = max_cosets
        self.hard_cap = max(10 * max_cosets, 1_000)

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def define(self, c: int, x: int) -> None:
        if len(self.table) >= self.hard_cap:
            raise CosetBudgetError(self.hard_cap, "coset definitions")
        new = len(self.table)
        self.table.append([UNDEFINED] * self.width)
        self.parent.append(new)
        self.table[c][x] = new
        self.table[new][x ^ 1] = c
        self.live += 1
        if self.live > self.max_cosets:
            raise CosetBudgetError(self.max_cosets)

    def scan_and_fill(self, alpha: int, w: list[int]) -> None:
        table = self.table
        f, b = alpha, alpha
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] != UNDEFINED:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][w[j] ^ 1] != UNDEFINED:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            self.define(f, w[i])

    def _merge(self, k: int, l: int, queue: list[int]) -> None:
        k, l = self.rep(k), self.rep(l)
        if k == l:
            return
        low, high = min(k, l), max(k, l)
        self.parent[high] = low
        queue.append(high)
        self.live -= 1

    def coincidence(self, a: int, b: int) -> None:
        table = self.table
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            gamma = queue[i]
            i += 1
            for x in range(self.width):
                delta = table[gamma][x]
                if delta == UNDEFINED:
                    continue
                table[delta][x ^ 1] = UNDEFINED
                mu, nu = self.rep(gamma), self.rep(delta)
                if table[mu][x] != UNDEFINED:
                    self._merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] != UNDEFINED:
                    self._merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def run(self, relators: list[list[int]], subgroup: list[list[int]]) -> None:
        for w in subgroup:
            self.scan_and_fill(0, w)
        alpha = 0
        while alpha < len(self.table):
            for r in relators:
                if not self.alive(alpha):
                    break
                self.scan_and_fill(alpha, r)
            if self.alive(alpha):
                for x in range(self.width):
                    if self.table[alpha][x] == UNDEFINED:
                        self.define(alpha, x)
            alpha += 1

    def compact(self) -> tuple[tuple[int, ...], ...]:
        survivors = [c for c in range(len(self.table)) if self.alive(c)]
        renumber = {c: k for k, c in enumerate(survivors)}
        return tuple(
            tuple(renumber[self.rep(d)] for d in self.table[c]) for c in survivors
        )


def todd_coxeter(
    p: Presentation,
    subgroup_gens: Sequence[Word] = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> CosetTable:
    """Enumerate the right cosets of the subgroup generated by ``subgroup_gens``.

    Raises CosetBudgetError when more than ``max_cosets`` cosets are alive at
    once; an infinite index and an insufficient budget look the same.
    """
    if max_cosets < 1:
        raise CosetBudgetError(max_cosets)
    relators = [_columns(r) for r in p.relators if r]
    subgroup = [_columns(w) for w in subgroup_gens if w]

    enum = _Enumeration(p, max_cosets)
    enum.run(relators, subgroup)
    action = enum.compact()
    log.debug("todd-coxeter: index %d after %d definitions", len(action), len(enum.table))
    return CosetTable(p, action, tuple(subgroup_gens))
