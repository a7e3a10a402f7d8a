"""Exhaustive reference solvers. Only meant for small instances and tests."""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceeded
from .graph import Derivation, DominationResult, Graph, ZeroOneMatrix


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 14
    max_rows: int = 7
    max_intervals: int = 20
    time_limit: float | None = 60.0


DEFAULT_BUDGET = OracleBudget()


class _Clock:
    def __init__(self, limit: float | None):
        self.deadline = None if limit is None else time.monotonic() + limit
        self.ticks = 0

    def tick(self) -> None:
        self.ticks += 1
        if self.deadline is not None and self.ticks % 4096 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("oracle time limit reached")


def oracle_min_ktuple(g: Graph, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> DominationResult:
    """Minimum k-tuple dominating set by pruned enumeration in lexicographic order."""
    if k <= 0:
        return DominationResult(k, 0, (), (Derivation.ZERO,))
    if k > g.min_degree + 1:
        return DominationResult.infeasible(k)
    if g.n > budget.max_vertices:
        raise BudgetExceeded(f"{g.n} vertices exceeds oracle cap {budget.max_vertices}")
    n = g.n
    masks = g.closed_masks()
    clock = _Clock(budget.time_limit)
    lower = max(k, -(-k * n // (g.max_degree + 1)))
    for size in range(lower, n + 1):
        found = _search(masks, n, k, size, clock)
        if found is not None:
            return DominationResult(k, size, tuple(v + 1 for v in found), (Derivation.ORACLE,))
    raise AssertionError("V(G) itself dominates whenever k <= delta + 1")


def _search(masks, n, k, size, clock):
    need = [k] * n
    chosen: list[int] = []
    # later[i]: bitmask of vertices with index >= i
    later = [((1 << n) - 1) ^ ((1 << i) - 1) for i in range(n + 1)]

    def rec(start: int, left: int):
        clock.tick()
        worst = max(need)
        if worst <= 0:
            return True
        if worst > left:
            return False
        avail = later[start]
        for v in range(n):
            if need[v] > 0 and (masks[v] & avail).bit_count() < need[v]:
                return False
        for cand in range(start, n - left + 1):
            chosen.append(cand)
            m = masks[cand]
            for v in range(n):
                if m >> v & 1:
                    need[v] -= 1
            if rec(cand + 1, left - 1):
                return True
            for v in range(n):
                if m >> v & 1:
                    need[v] += 1
            chosen.pop()
        return False

    return list(chosen) if rec(0, size) else None


def oracle_interval_mis(model, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Largest pairwise-disjoint subfamily, by subset enumeration (largest first)."""
    ivs = [(a, b) for _, a, b in _triples(model)]
    if len(ivs) > budget.max_intervals:
        raise BudgetExceeded(f"{len(ivs)} intervals exceeds oracle cap {budget.max_intervals}")
    for size in range(len(ivs), 0, -1):
        for combo in combinations(ivs, size):
            if all(x[1] < y[0] or y[1] < x[0] for x, y in combinations(combo, 2)):
                return size
    return 0


def _triples(model):
    return getattr(model, "intervals", model)


def oracle_c1p(m: ZeroOneMatrix, budget: OracleBudget = DEFAULT_BUDGET, circular: bool = False):
    """(verdict, permutation or None) by complete backtracking over row orders."""
    if m.rows > budget.max_rows:
        raise BudgetExceeded(f"{m.rows} rows exceeds oracle cap {budget.max_rows}")
    rows = m.rows
    if rows == 0:
        return True, ()
    cols = [sum(1 << i for i in m.column_ones(j)) for j in range(m.cols)]
    if circular:
        return _circ_search(cols, rows)
    order: list[int] = []
    # per column: 0 = not started, 1 = open, 2 = closed
    state = [0] * len(cols)

    def rec(placed: int) -> bool:
        if len(order) == rows:
            return True
        for r in range(rows):
            if placed >> r & 1:
                continue
            saved = state[:]
            ok = True
            rest = placed | (1 << r)
            for j, c in enumerate(cols):
                if c >> r & 1:
                    if state[j] == 2:
                        ok = False
                        break
                    state[j] = 1
                elif state[j] == 1:
                    if c & ~rest:
                        ok = False
                        break
                    state[j] = 2
            if ok:
                order.append(r)
                if rec(rest):
                    return True
                order.pop()
            state[:] = saved
        return False

    if rec(0):
        return True, tuple(order)
    return False, None


def _circ_search(cols, rows):
    from itertools import permutations

    def circular_ok(perm) -> bool:
        for c in cols:
            bits = [c >> r & 1 for r in perm]
            changes = sum(bits[i] != bits[i - 1] for i in range(rows))
            if changes > 2:
                return False
        return True

    # rotations are equivalent, so pin row 0 first
    for rest in permutations(range(1, rows)):
        perm = (0,) + rest
        if circular_ok(perm):
            return True, perm
    return False, None


def oracle_c0p(m: ZeroOneMatrix, budget: OracleBudget = DEFAULT_BUDGET):
    return oracle_c1p(m.complement(), budget)


def oracle_circ1p(m: ZeroOneMatrix, budget: OracleBudget = DEFAULT_BUDGET):
    return oracle_c1p(m, budget, circular=True)
