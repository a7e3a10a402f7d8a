"""k-tuple domination on web graphs in O(n).

Labels are shifted so that label j stands for vertex m + j; the closed
neighbourhood of j is then the window j-m .. j+m taken cyclically in [1, n].
Residue classes of [1, n] modulo gcd(2m+1, n mod (2m+1)) meet every window
in the same number of labels, and stepping by 2m+1 walks through one class.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

import numpy as np

from .errors import InputError
from .graph import Derivation, DominationResult, Graph


@dataclass(frozen=True)
class WebParams:
    n: int
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise InputError(f"m must be positive, got {self.m}")
        if self.n < 2 * self.m + 1:
            raise InputError(f"web graph needs n >= 2m+1, got n={self.n}, m={self.m}")

    @property
    def width(self) -> int:
        """2m + 1, the size of every closed neighbourhood."""
        return 2 * self.m + 1

    @property
    def c(self) -> int:
        return self.n // self.width

    @property
    def r(self) -> int:
        return self.n % self.width

    @property
    def mu(self) -> int:
        # gcd(x, 0) == x covers the r = 0 case
        return gcd(self.width, self.r)

    @property
    def l1(self) -> int:
        return self.r // self.mu

    @property
    def l2(self) -> int:
        return self.width // self.mu

    @property
    def class_size(self) -> int:
        return self.n // self.mu


@dataclass(frozen=True)
class ContiguousSequence:
    """One residue class listed so each label is the previous one plus 2m+1 (mod n)."""

    index: int
    labels: np.ndarray

    def __len__(self) -> int:
        return len(self.labels)

    @cached_property
    def position(self) -> dict[int, int]:
        return {int(v): t for t, v in enumerate(self.labels)}

    def tolist(self) -> list[int]:
        return self.labels.tolist()


def web_graph(p: WebParams) -> Graph:
    n, m = p.n, p.m
    adj = [{(i + s) % n for s in range(-m, m + 1) if s} for i in range(n)]
    return Graph.from_adjacency(adj)


def closed_neighborhood(p: WebParams, j: int) -> list[int]:
    """N[j] computed arithmetically, in window order j-m .. j+m."""
    if not 1 <= j <= p.n:
        raise InputError(f"label {j} out of range 1..{p.n}")
    return [(j - 1 + s) % p.n + 1 for s in range(-p.m, p.m + 1)]


def label_to_vertex(p: WebParams, label):
    """Shifted label j -> original vertex index. Works on ints and arrays."""
    return (label - 1 + p.m) % p.n + 1


def class_sequence(p: WebParams, i: int) -> ContiguousSequence:
    if not 1 <= i <= p.mu:
        raise InputError(f"class index {i} out of range 1..{p.mu}")
    t = np.arange(p.class_size, dtype=np.int64)
    labels = (i - 1 + t * p.width) % p.n + 1
    return ContiguousSequence(i, labels)


def dom_size(p: WebParams, alpha: int) -> int:
    return -(-alpha * p.n // p.width)


def dom(p: WebParams, seq: ContiguousSequence, alpha: int) -> np.ndarray:
    """First ceil(alpha*n/(2m+1)) labels of ``seq``: an alpha-tuple dominating set."""
    if not 0 <= alpha <= p.l2:
        raise InputError(f"alpha must lie in 0..l2={p.l2}, got {alpha}")
    return seq.labels[: dom_size(p, alpha)]


def algorithm1(p: WebParams, k: int) -> DominationResult:
    """Minimum k-tuple dominating set of the web graph.

    Small k take a prefix of the first class. Larger k split as
    q whole classes per ``l2`` levels plus a prefix for the remainder;
    the whole classes are 2 .. q+1, wrapping around the class count.
    """
    if k < 0:
        raise InputError(f"k must be non-negative, got {k}")
    if k == 0:
        return DominationResult(0, 0, (), (Derivation.ZERO,))
    if k > p.width:
        return DominationResult.infeasible(k)
    first = class_sequence(p, 1)
    if k <= p.l2:
        labels = dom(p, first, k)
        tag = (Derivation.WEB_DOM,)
    else:
        q, rem = divmod(k, p.l2)
        parts = [dom(p, first, rem)]
        parts += [class_sequence(p, (i - 1) % p.mu + 1).labels for i in range(2, q + 2)]
        labels = np.concatenate(parts)
        tag = (Derivation.WEB_CLASSES,)
    value = -(-k * p.n // p.width)
    if len(labels) != value:
        raise AssertionError(f"witness size {len(labels)} != {value}")
    return DominationResult(k, value, tuple(labels.tolist()), tag, {"labels": labels})


def coverage(p: WebParams, labels) -> np.ndarray:
    """|N[j] ∩ D| for every label j, via a cyclic difference array."""
    d = np.asarray(labels, dtype=np.int64) - 1
    diff = np.zeros(p.n + 1, dtype=np.int64)
    lo = d - p.m
    hi = d + p.m
    # windows wrapping past either end are split in two
    plain = (lo >= 0) & (hi < p.n)
    np.add.at(diff, lo[plain], 1)
    np.add.at(diff, hi[plain] + 1, -1)
    left = lo < 0
    np.add.at(diff, np.zeros(left.sum(), np.int64), 1)
    np.add.at(diff, hi[left] + 1, -1)
    np.add.at(diff, lo[left] + p.n, 1)
    right = hi >= p.n
    np.add.at(diff, lo[right], 1)
    np.add.at(diff, np.full(right.sum(), 0, np.int64), 1)
    np.add.at(diff, hi[right] - p.n + 1, -1)
    return np.cumsum(diff)[: p.n]


def verify_web(p: WebParams, labels, k: int) -> bool:
    """k-tuple domination check in O(n + |D|) without building the graph."""
    labels = np.asarray(labels, dtype=np.int64)
    if labels.size and (labels.min() < 1 or labels.max() > p.n):
        raise InputError(f"labels must lie in 1..{p.n}")
    if len(np.unique(labels)) != len(labels):
        raise InputError("labels must be distinct")
    if k <= 0:
        return True
    return bool(coverage(p, labels).min() >= k)


def class_partition_check(p: WebParams) -> bool:
    """Classes partition [1, n] into n/mu labels each and every window meets each class l2 times."""
    seen = np.zeros(p.n + 1, dtype=bool)
    for i in range(1, p.mu + 1):
        labels = class_sequence(p, i).labels
        if len(labels) != p.class_size or seen[labels].any():
            return False
        if np.any(labels % p.mu != i % p.mu):
            return False
        seen[labels] = True
        if not np.all(coverage(p, labels) == p.l2):
            return False
    return bool(seen[1:].all())
