"""Consecutive-ones / consecutive-zeros / circular-ones tests and the
(C1, C2, U) decomposition of co-biconvex graphs."""
from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NotCoBiconvex, StructureViolation
from .graph import Graph, ZeroOneMatrix, augmented_adjacency
from .pqtree import PQTree, Unreducible


def is_consecutive_order(m: ZeroOneMatrix, perm: Sequence[int], circular: bool = False) -> bool:
    """Check that under row order ``perm`` every column's 1's are (circularly) consecutive."""
    if sorted(perm) != list(range(m.rows)):
        return False
    a = m.entries[list(perm), :].astype(np.int8)
    if a.shape[0] == 0:
        return True
    # count 0->1 transitions down each column
    starts = np.diff(np.vstack([np.zeros((1, a.shape[1]), np.int8), a]), axis=0) == 1
    runs = starts.sum(axis=0)
    if circular:
        wrap = (a[0] == 1) & (a[-1] == 1) & (runs >= 2)
        runs = runs - wrap
    return bool(np.all(runs <= 1))


def c1p_columns(m: ZeroOneMatrix) -> tuple[int, ...] | None:
    """Row order making each column's 1's consecutive, or None if none exists."""
    tree = PQTree(range(m.rows))
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * m.rows + 100))
    try:
        seen = set()
        for j in range(m.cols):
            ones = tuple(m.column_ones(j))
            if len(ones) <= 1 or len(ones) == m.rows or ones in seen:
                continue
            seen.add(ones)
            tree.reduce(ones)
    except Unreducible:
        return None
    finally:
        sys.setrecursionlimit(old)
    perm = tuple(tree.frontier())
    assert is_consecutive_order(m, perm), "PQ-tree frontier failed re-verification"
    return perm


def c0p_columns(m: ZeroOneMatrix) -> tuple[int, ...] | None:
    return c1p_columns(m.complement())


def circ1p_columns(m: ZeroOneMatrix) -> tuple[int, ...] | None:
    """Row order making each column's 1's circularly consecutive, or None.

    Columns with a 1 in the reference row 0 are complemented; the result has
    the C1P iff the original has the Circ1P, with the same row order.
    """
    if m.rows <= 2:
        return tuple(range(m.rows))
    a = m.entries.copy()
    flip = a[0] == 1
    a[:, flip] = 1 - a[:, flip]
    perm = c1p_columns(ZeroOneMatrix(a))
    if perm is None:
        return None
    if not is_consecutive_order(m, perm, circular=True):
        raise AssertionError("circular-ones reduction produced an invalid order")
    return perm


@dataclass(frozen=True)
class CoBiconvexDecomposition:
    """Vertex order C1 + C2 + U realising the two-clique block layout of M*."""

    ordering: tuple[int, ...]
    c1: tuple[int, ...]
    c2: tuple[int, ...]
    u: frozenset[int]

    @property
    def r(self) -> int:
        return len(self.c1)


def decompose_cobiconvex(g: Graph) -> CoBiconvexDecomposition:
    """Split V(G) into cliques C1, C2 and universal set U.

    Any C0P row order classifies every non-universal column by whether its
    zero run lies below or above the diagonal. C1 columns only have zeros in
    C2 rows and vice versa, so stably moving C1 ahead of C2 keeps every zero
    run consecutive.
    """
    mat = augmented_adjacency(g)
    perm = c0p_columns(mat)
    if perm is None:
        raise NotCoBiconvex("augmented adjacency matrix lacks the consecutive 0's property")
    pos = {row + 1: p for p, row in enumerate(perm)}
    c1, c2, u = [], [], []
    for v in g.vertices:
        zeros = [pos[w] for w in g.vertices if w != v and not g.has_edge(v, w)]
        if not zeros:
            u.append(v)
        elif min(zeros) > pos[v]:
            c1.append(v)
        elif max(zeros) < pos[v]:
            c2.append(v)
        else:
            raise StructureViolation(f"zero run of column {v} straddles the diagonal")
    c1.sort(key=pos.__getitem__)
    c2.sort(key=pos.__getitem__)
    # reversing the order swaps the roles; pick the one with the smallest label in C1
    if c2 and (not c1 or min(c2) < min(c1)):
        c1, c2 = c2[::-1], c1[::-1]
    d = CoBiconvexDecomposition(tuple(c1 + c2 + sorted(u)), tuple(c1), tuple(c2), frozenset(u))
    check_decomposition(g, d)
    return d


def check_decomposition(g: Graph, d: CoBiconvexDecomposition) -> None:
    """Raise StructureViolation unless ``d`` satisfies every block-layout invariant."""
    if sorted(d.ordering) != list(g.vertices) or len(d.c1) + len(d.c2) + len(d.u) != g.n:
        raise StructureViolation("ordering is not a partition of V(G)")
    for v in d.u:
        if g.degree(v) != g.n - 1:
            raise StructureViolation(f"vertex {v} in U is not universal")
    for side, other in ((d.c1, d.c2), (d.c2, d.c1)):
        where = {v: i for i, v in enumerate(other)}
        for i, v in enumerate(side):
            for w in side[i + 1:]:
                if not g.has_edge(v, w):
                    raise StructureViolation(f"{v} and {w} share a clique but are not adjacent")
            zeros = [where.get(w) for w in g.vertices if w != v and not g.has_edge(v, w)]
            if not zeros or None in zeros:
                raise StructureViolation(f"zeros of column {v} leave the opposite clique")
            if max(zeros) - min(zeros) + 1 != len(zeros):
                raise StructureViolation(f"zeros of column {v} are not consecutive")
