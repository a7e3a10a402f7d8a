"""PQ-trees with template reduction.

Each ``reduce`` walks the whole tree once, so a full C1P test costs
O(rows * columns) rather than the Booth-Lueker linear bound. The template
logic is the classical one: partial nodes are flattened into a Q-node
sequence running from the empty side to the full side.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class Leaf:
    __slots__ = ("value",)

    def __init__(self, value: int):
        self.value = value

    def __repr__(self) -> str:
        return str(self.value)


class PNode:
    __slots__ = ("children",)

    def __init__(self, children: list):
        self.children = children

    def __repr__(self) -> str:
        return "{" + " ".join(map(repr, self.children)) + "}"


class QNode:
    __slots__ = ("children",)

    def __init__(self, children: list):
        self.children = children

    def __repr__(self) -> str:
        return "[" + " ".join(map(repr, self.children)) + "]"


class Unreducible(Exception):
    """No ordering satisfies the constraints applied so far."""


EMPTY, PARTIAL, FULL = 0, 1, 2


def _group(nodes: list):
    return nodes[0] if len(nodes) == 1 else PNode(nodes)


def _qnode(children: list):
    return PNode(children) if len(children) == 2 else QNode(children)


class PQTree:
    """All orderings of ``leaves`` consistent with the reduced sets."""

    def __init__(self, leaves: Iterable[int]):
        leaves = list(leaves)
        if len(set(leaves)) != len(leaves):
            raise ValueError("leaf labels must be distinct")
        self.leaves = frozenset(leaves)
        if not leaves:
            self.root = None
        elif len(leaves) == 1:
            self.root = Leaf(leaves[0])
        else:
            self.root = PNode([Leaf(v) for v in leaves])

    def frontier(self) -> list[int]:
        out: list[int] = []
        if self.root is None:
            return out
        stack = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, Leaf):
                out.append(node.value)
            else:
                stack.extend(reversed(node.children))
        return out

    def reduce(self, subset: Iterable[int]) -> None:
        """Restrict the tree so ``subset`` is consecutive; raise Unreducible if impossible."""
        s = set(subset)
        if not s <= self.leaves:
            raise ValueError(f"unknown leaves {sorted(s - self.leaves)}")
        if len(s) <= 1 or len(s) == len(self.leaves):
            return
        status = self._label(s)
        # descend to the deepest node holding every leaf of s
        parent, slot, node = None, -1, self.root
        while True:
            nxt = None
            for i, ch in enumerate(node.children):
                if status[id(ch)][1] == len(s):
                    nxt = i
                    break
            if nxt is None or isinstance(node.children[nxt], Leaf):
                break
            parent, slot, node = node, nxt, node.children[nxt]
        replacement = self._reduce_root(node, status)
        if parent is None:
            self.root = replacement
        else:
            parent.children[slot] = replacement

    def _label(self, s: set[int]) -> dict[int, tuple[int, int]]:
        """id(node) -> (status, number of leaves of s below it)."""
        counts: dict[int, tuple[int, int]] = {}
        stack = [(self.root, False)]
        while stack:
            node, done = stack.pop()
            if isinstance(node, Leaf):
                full = node.value in s
                counts[id(node)] = (1, int(full))
                continue
            if not done:
                stack.append((node, True))
                stack.extend((ch, False) for ch in node.children)
                continue
            total = full = 0
            for ch in node.children:
                t, f = counts[id(ch)]
                total += t
                full += f
            counts[id(node)] = (total, full)
        status = {}
        for key, (total, full) in counts.items():
            st = EMPTY if full == 0 else FULL if full == total else PARTIAL
            status[key] = (st, full)
        return status

    def _partial_seq(self, node, status) -> list:
        """Children of a non-root partial node, ordered empty side -> full side."""
        kinds = [status[id(ch)][0] for ch in node.children]
        if isinstance(node, PNode):
            empties = [ch for ch, k in zip(node.children, kinds) if k == EMPTY]
            fulls = [ch for ch, k in zip(node.children, kinds) if k == FULL]
            partials = [ch for ch, k in zip(node.children, kinds) if k == PARTIAL]
            if len(partials) > 1:
                raise Unreducible
            seq = []
            if empties:
                seq.append(_group(empties))
            if partials:
                seq.extend(self._partial_seq(partials[0], status))
            if fulls:
                seq.append(_group(fulls))
            return seq
        children = node.children
        if not _matches_empty_to_full(kinds):
            kinds = kinds[::-1]
            children = children[::-1]
            if not _matches_empty_to_full(kinds):
                raise Unreducible
        seq = []
        for ch, k in zip(children, kinds):
            if k == PARTIAL:
                seq.extend(self._partial_seq(ch, status))
            else:
                seq.append(ch)
        return seq

    def _reduce_root(self, node, status):
        kinds = [status[id(ch)][0] for ch in node.children]
        if isinstance(node, PNode):
            empties = [ch for ch, k in zip(node.children, kinds) if k == EMPTY]
            fulls = [ch for ch, k in zip(node.children, kinds) if k == FULL]
            partials = [ch for ch, k in zip(node.children, kinds) if k == PARTIAL]
            if len(partials) > 2:
                raise Unreducible
            if not partials:
                if len(fulls) >= 2 and empties:
                    node.children = empties + [PNode(fulls)]
                return node
            seq = self._partial_seq(partials[0], status)
            if fulls:
                seq.append(_group(fulls))
            if len(partials) == 2:
                seq.extend(reversed(self._partial_seq(partials[1], status)))
            q = _qnode(seq)
            if not empties:
                return q
            node.children = empties + [q]
            return node
        # Q-node root: non-empty children contiguous, partials only at the ends
        busy = [i for i, k in enumerate(kinds) if k != EMPTY]
        lo, hi = busy[0], busy[-1]
        if hi - lo + 1 != len(busy):
            raise Unreducible
        for i in range(lo + 1, hi):
            if kinds[i] != FULL:
                raise Unreducible
        seq = []
        for i, ch in enumerate(node.children):
            if kinds[i] == PARTIAL and i == lo:
                seq.extend(self._partial_seq(ch, status))
            elif kinds[i] == PARTIAL:
                seq.extend(reversed(self._partial_seq(ch, status)))
            else:
                seq.append(ch)
        node.children = seq
        return node

    def orderings(self, limit: int | None = None) -> Iterator[list[int]]:
        """Enumerate frontiers of all equivalent trees (exponential; small trees only)."""
        count = 0
        for order in _orders(self.root):
            yield order
            count += 1
            if limit is not None and count >= limit:
                return


def _matches_empty_to_full(kinds: Sequence[int]) -> bool:
    # pattern E* P? F*
    i, n = 0, len(kinds)
    while i < n and kinds[i] == EMPTY:
        i += 1
    if i < n and kinds[i] == PARTIAL:
        i += 1
    while i < n and kinds[i] == FULL:
        i += 1
    return i == n


def _orders(node) -> Iterator[list[int]]:
    from itertools import permutations, product

    if node is None:
        yield []
        return
    if isinstance(node, Leaf):
        yield [node.value]
        return
    subs = [list(_orders(ch)) for ch in node.children]
    if isinstance(node, PNode):
        arrangements = permutations(range(len(subs)))
    else:
        fwd = tuple(range(len(subs)))
        arrangements = iter((fwd, fwd[::-1]))
    for arr in arrangements:
        for combo in product(*(subs[i] for i in arr)):
            yield [v for part in combo for v in part]
