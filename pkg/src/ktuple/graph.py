"""Graph core: simple undirected graphs, M*(G), neighbourhoods and the
k-tuple domination verifier.

Vertices are numbered 1..n at every public entry point. Internally the
adjacency is kept 0-indexed.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError


class Graph:
    """Immutable simple graph on vertices 1..n."""

    __slots__ = ("n", "_adj", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise InputError(f"vertex count must be positive, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"edge ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u - 1].add(v - 1)
            adj[v - 1].add(u - 1)
        self.n = n
        self._adj = tuple(frozenset(a) for a in adj)
        self._masks: tuple[int, ...] | None = None

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        """Build from a 0-indexed adjacency list (trusted to be symmetric)."""
        g = cls.__new__(cls)
        g.n = len(adj)
        if g.n < 1:
            raise InputError("graph needs at least one vertex")
        g._adj = tuple(frozenset(a) for a in adj)
        g._masks = None
        return g

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_adjacency([set(range(n)) - {i} for i in range(n)])

    # -- queries -----------------------------------------------------------

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return sorted(u + 1 for u in self._adj[v - 1])

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v - 1])

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return (v - 1) in self._adj[u - 1]

    def edges(self) -> list[tuple[int, int]]:
        return [(i + 1, j + 1) for i in range(self.n) for j in sorted(self._adj[i]) if i < j]

    @property
    def min_degree(self) -> int:
        return min(len(a) for a in self._adj)

    @property
    def max_degree(self) -> int:
        return max(len(a) for a in self._adj)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def closed_masks(self) -> tuple[int, ...]:
        """Bitmask of N[v] per vertex (0-indexed bits), cached."""
        if self._masks is None:
            self._masks = tuple(
                (1 << i) | sum(1 << j for j in a) for i, a in enumerate(self._adj)
            )
        return self._masks

    def _check(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise InputError(f"vertex {v} out of range 1..{self.n}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={sum(map(len, self._adj)) // 2})"


@dataclass(frozen=True)
class ZeroOneMatrix:
    """Dense 0/1 matrix. Rows and columns are 0-indexed."""

    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=np.uint8)
        if arr.ndim != 2:
            raise InputError("matrix must be two-dimensional")
        if arr.size and arr.max() > 1:
            raise InputError("matrix entries must be 0 or 1")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "ZeroOneMatrix":
        return cls(np.array(rows, dtype=np.uint8).reshape(len(rows), -1))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def complement(self) -> "ZeroOneMatrix":
        return ZeroOneMatrix(1 - self.entries)

    def column_ones(self, j: int) -> list[int]:
        return np.flatnonzero(self.entries[:, j]).tolist()

    def permute_rows(self, perm: Sequence[int]) -> "ZeroOneMatrix":
        return ZeroOneMatrix(self.entries[list(perm), :])

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ZeroOneMatrix) and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.entries.shape, self.entries.tobytes()))

    def __str__(self) -> str:
        return "\n".join("".join(map(str, row)) for row in self.tolist())


class Derivation(str, Enum):
    """Which argument produced a domination value."""

    ZERO = "k-zero"
    INFEASIBLE = "infeasible"
    UNIVERSAL = "universal-only"            # k <= |U|
    PEEL = "peel-universal"                 # subtract U, recurse
    ONE_PER_SIDE = "one-per-clique"         # k'=1 on a universal-free graph
    STABLE_UNION = "stable-union"           # k'+1 from stable sets of H1, H2
    STABLE_PLUS_TWO = "stable-plus-two"     # k'+2
    TWO_CLIQUES = "k-per-clique"            # 2k' when alpha1 = alpha2 = 1
    COMPONENTS = "component-sum"
    WEB_DOM = "web-dom"
    WEB_CLASSES = "web-classes"
    ORACLE = "oracle"


@dataclass(frozen=True)
class DominationResult:
    """Outcome of a k-tuple domination solve.

    ``value`` is None when the instance is infeasible (k > delta + 1).
    ``witness`` keeps construction order; use ``sorted_witness`` for output.
    """

    k: int
    value: int | None
    witness: tuple[int, ...] = ()
    derivation: tuple[Derivation, ...] = ()
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def feasible(self) -> bool:
        return self.value is not None

    @property
    def sorted_witness(self) -> list[int]:
        return sorted(self.witness)

    @classmethod
    def infeasible(cls, k: int) -> "DominationResult":
        return cls(k, None, (), (Derivation.INFEASIBLE,))


def closed_neighborhood(g: Graph, v: int) -> set[int]:
    g._check(v)
    return {u + 1 for u in g._adj[v - 1]} | {v}


def augmented_adjacency(g: Graph) -> ZeroOneMatrix:
    a = np.eye(g.n, dtype=np.uint8)
    for i, nb in enumerate(g._adj):
        if nb:
            a[i, list(nb)] = 1
    return ZeroOneMatrix(a)


def universal_vertices(g: Graph) -> set[int]:
    return {i + 1 for i, nb in enumerate(g._adj) if len(nb) == g.n - 1}


def verify_ktuple(g: Graph, d: Iterable[int], k: int) -> bool:
    return not deficiencies(g, d, k)


def deficiencies(g: Graph, d: Iterable[int], k: int) -> dict[int, int]:
    """Map vertex -> how many more dominators it needs (only vertices short of k)."""
    chosen = set()
    for v in d:
        g._check(v)
        chosen.add(v - 1)
    if k <= 0:
        return {}
    short = {}
    for i, nb in enumerate(g._adj):
        hit = (i in chosen) + len(nb & chosen)
        if hit < k:
            short[i + 1] = k - hit
    return short


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """G[keep] relabelled to 1..|keep| in increasing original order.

    Returns the subgraph and ``mapping`` with ``mapping[i - 1]`` the original
    label of new vertex ``i``.
    """
    kept = sorted(set(keep))
    if not kept:
        raise InputError("induced subgraph needs a nonempty vertex set")
    for v in kept:
        g._check(v)
    index = {v - 1: i for i, v in enumerate(kept)}
    adj = [{index[u] for u in g._adj[v - 1] if u in index} for v in kept]
    return Graph.from_adjacency(adj), tuple(kept)


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        comp = []
        while queue:
            v = queue.popleft()
            comp.append(v + 1)
            for u in g._adj[v]:
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
        comps.append(sorted(comp))
    return comps
