"""k-tuple domination on co-biconvex graphs for k <= |U| + 3.

Universal vertices are peeled off first; the universal-free remainder is
solved from the independence numbers of two interval graphs whose
intervals are the zero runs of each clique's columns inside the other
clique's block.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import InputError, UnsupportedK, WitnessNotConstructed
from .graph import (
    Derivation,
    DominationResult,
    Graph,
    connected_components,
    induced_subgraph,
    universal_vertices,
    verify_ktuple,
)
from .recognition import CoBiconvexDecomposition, decompose_cobiconvex

D = Derivation


@dataclass(frozen=True)
class IntervalModel:
    """(owner vertex, left, right) triples with integer endpoints, left <= right."""

    intervals: tuple[tuple[int, int, int], ...]

    def __len__(self) -> int:
        return len(self.intervals)

    def owners(self) -> list[int]:
        return [v for v, _, _ in self.intervals]

    def span(self, owner: int) -> tuple[int, int]:
        for v, a, b in self.intervals:
            if v == owner:
                return a, b
        raise KeyError(owner)

    def is_stable(self, owners) -> bool:
        spans = sorted(self.span(v) for v in owners)
        return all(x[1] < y[0] for x, y in zip(spans, spans[1:]))


@dataclass(frozen=True)
class AlphaPair:
    alpha1: int
    alpha2: int
    witness1: tuple[int, ...]
    witness2: tuple[int, ...]


def build_auxiliary_intervals(d: CoBiconvexDecomposition, g: Graph) -> tuple[IntervalModel, IntervalModel]:
    """Interval models of the zero runs of each clique inside the other.

    Positions follow ``d``: C1 occupies 1..r and C2 occupies r+1..n'.
    """
    if d.u:
        raise InputError("peel universal vertices before building interval models")
    r = d.r
    pos = {v: i + 1 for i, v in enumerate(d.c1 + d.c2)}
    models = []
    for side, other in ((d.c1, d.c2), (d.c2, d.c1)):
        triples = []
        for v in side:
            zeros = sorted(pos[w] for w in other if not g.has_edge(v, w))
            if not zeros:
                raise AssertionError(f"vertex {v} has no zero run; a universal vertex leaked through")
            if zeros[-1] - zeros[0] + 1 != len(zeros):
                raise AssertionError(f"zeros of vertex {v} are not consecutive")
            triples.append((v, zeros[0], zeros[-1]))
        models.append(IntervalModel(tuple(triples)))
    if any(a <= r for _, a, _ in models[0].intervals) or any(b > r for _, _, b in models[1].intervals):
        raise AssertionError("interval endpoints fall outside the opposite block")
    return models[0], models[1]


def interval_mis(model: IntervalModel) -> tuple[int, tuple[int, ...]]:
    """Maximum set of pairwise disjoint intervals (earliest right endpoint first)."""
    if not len(model):
        raise InputError("interval model is empty")
    chosen = []
    last = None
    for v, a, b in sorted(model.intervals, key=lambda t: (t[2], t[1], t[0])):
        if last is None or a > last:
            chosen.append(v)
            last = b
    return len(chosen), tuple(chosen)


def alpha_pair(d: CoBiconvexDecomposition, g: Graph) -> AlphaPair:
    h1, h2 = build_auxiliary_intervals(d, g)
    a1, s1 = interval_mis(h1)
    a2, s2 = interval_mis(h2)
    return AlphaPair(a1, a2, s1, s2)


def tuple_bound_pair(d: CoBiconvexDecomposition, k: int) -> tuple[int, int | None]:
    """(k + 1, 2k) bracket for a universal-free co-biconvex graph.

    The upper bound is None unless both cliques have at least k vertices.
    """
    if d.u or len(d.c1) < 2 or len(d.c2) < 2:
        raise InputError("bounds need U empty and both cliques of size >= 2")
    upper = 2 * k if len(d.c1) >= k and len(d.c2) >= k else None
    return k + 1, upper


def solve_cobiconvex(g: Graph, k: int) -> DominationResult:
    """gamma_{x k}(G) with a verified witness.

    Disconnected graphs are solved per component and summed. Raises
    NotCoBiconvex when recognition fails and UnsupportedK when some component
    needs k > |U| + 3 and the answer is not already known to be infinite.
    """
    if k < 0:
        raise InputError(f"k must be non-negative, got {k}")
    if k == 0:
        return DominationResult(0, 0, (), (D.ZERO,))
    if k > g.min_degree + 1:
        return DominationResult.infeasible(k)
    comps = connected_components(g)
    if len(comps) == 1:
        return _solve_connected(g, k)
    parts = []
    for comp in comps:
        sub, mapping = induced_subgraph(g, comp)
        res = _solve_connected(sub, k)
        parts.append(DominationResult(k, res.value, tuple(mapping[v - 1] for v in res.witness), res.derivation))
    witness = tuple(v for p in parts for v in p.witness)
    chain = (D.COMPONENTS,) + tuple(dict.fromkeys(t for p in parts for t in p.derivation))
    return _checked(g, DominationResult(k, sum(p.value for p in parts), witness, chain))


def _solve_connected(g: Graph, k: int) -> DominationResult:
    u = sorted(universal_vertices(g))
    if k <= len(u):
        return _checked(g, DominationResult(k, k, tuple(u[:k]), (D.UNIVERSAL,)))
    inner_k = k - len(u)
    if inner_k > 3:
        raise UnsupportedK(f"k={k} exceeds |U|+3={len(u) + 3}")
    rest = [v for v in g.vertices if v not in set(u)]
    sub, mapping = induced_subgraph(g, rest)
    d = decompose_cobiconvex(sub)
    value, inner, tag = _solve_universal_free(sub, d, inner_k)
    witness = tuple(u) + tuple(mapping[v - 1] for v in inner)
    chain = ((D.PEEL,) if u else ()) + (tag,)
    return _checked(g, DominationResult(k, value + len(u), witness, chain))


def _solve_universal_free(g: Graph, d: CoBiconvexDecomposition, k: int):
    """(value, witness, derivation) for 1 <= k <= 3 and U empty."""
    c1, c2 = sorted(d.c1), sorted(d.c2)
    if k == 1:
        return 2, (c1[0], c2[0]), D.ONE_PER_SIDE
    ap = alpha_pair(d, g)
    total = ap.alpha1 + ap.alpha2
    if total > k:
        a1, a2 = _balanced_split(k + 1, ap.alpha1, ap.alpha2)
        witness = ap.witness1[:a1] + ap.witness2[:a2]
        return k + 1, witness, D.STABLE_UNION
    if total == 2:
        return 2 * k, tuple(c1[:k]) + tuple(c2[:k]), D.TWO_CLIQUES
    # remaining case: k = 3 with alpha1 + alpha2 = 3
    base = ap.witness1 + ap.witness2
    w1 = [v for v in c1 if v not in ap.witness1]
    w2 = [v for v in c2 if v not in ap.witness2]
    if w1 and w2:
        return k + 2, base + (w1[0], w2[0]), D.STABLE_PLUS_TWO
    witness = _augment(g, base, c1, c2, k, k + 2)
    if witness is None:
        raise WitnessNotConstructed("no size-5 superset of the stable sets verifies", k + 2)
    return k + 2, witness, D.STABLE_PLUS_TWO


def _balanced_split(total: int, cap1: int, cap2: int) -> tuple[int, int]:
    best = None
    for a1 in range(max(0, total - cap2), min(cap1, total) + 1):
        a2 = total - a1
        if best is None or min(a1, a2) > min(best):
            best = (a1, a2)
    return best


def _augment(g: Graph, base: Sequence[int], c1, c2, k: int, size: int):
    # up to two extra vertices per side
    pool1 = [v for v in c1 if v not in base]
    pool2 = [v for v in c2 if v not in base]
    extra = size - len(base)
    for x in range(0, min(2, extra, len(pool1)) + 1):
        y = extra - x
        if y > 2 or y > len(pool2):
            continue
        for add1 in combinations(pool1, x):
            for add2 in combinations(pool2, y):
                cand = tuple(base) + add1 + add2
                if verify_ktuple(g, cand, k):
                    return cand
    return None


def _checked(g: Graph, res: DominationResult) -> DominationResult:
    if len(set(res.witness)) != res.value or not verify_ktuple(g, res.witness, res.k):
        raise AssertionError(f"witness for k={res.k} failed verification")
    return res
