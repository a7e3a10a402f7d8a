"""Random co-biconvex instances."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InputError
from .graph import Graph


@dataclass(frozen=True)
class CoBiconvexSpec:
    c1: int
    c2: int
    universal: int = 0
    width: int | None = None
    seed: int | None = None
    shuffle: bool = True


def random_cobiconvex(spec: CoBiconvexSpec) -> Graph:
    """Two cliques plus ``universal`` extra universal vertices.

    Each C1 vertex misses a run [a_j, b_j] of C2 with a_j and b_j
    non-decreasing in j, so zero runs stay consecutive in both directions.
    ``width`` caps run length; ``width=0`` gives a complete graph.
    Labels are shuffled unless ``shuffle`` is False.
    """
    if spec.c1 < 0 or spec.c2 < 0 or spec.universal < 0:
        raise InputError("clique and universal counts must be non-negative")
    if spec.c1 + spec.c2 + spec.universal < 1:
        raise InputError("graph needs at least one vertex")
    if spec.width is not None and spec.width < 0:
        raise InputError("width must be non-negative")
    rng = random.Random(spec.seed)
    r, s = spec.c1, spec.c2
    width = s if spec.width is None else min(spec.width, s)
    missing = set()
    if r and s and width:
        starts = sorted(rng.randrange(s) for _ in range(r))
        prev_end = -1
        for j, a in enumerate(starts):
            end = max(a + rng.randrange(width), prev_end)
            end = min(end, s - 1)
            prev_end = end
            for q in range(a, end + 1):
                missing.add((j, r + q))
    n = r + s + spec.universal
    labels = list(range(1, n + 1))
    if spec.shuffle:
        rng.shuffle(labels)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in missing:
                edges.append((labels[i], labels[j]))
    return Graph(n, edges)
