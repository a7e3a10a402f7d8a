"""Text formats for graphs.

Edge list::

    # comment
    graph 4
    1 2
    3 4

Matrix text: n lines of n characters from {0,1} holding M*(G); the diagonal
must be all ones and the matrix symmetric.
"""
from __future__ import annotations

from pathlib import Path

from .errors import GraphFormatError
from .graph import Graph, augmented_adjacency

FORMATS = ("edges", "matrix")


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "graph":
                raise GraphFormatError("expected header 'graph <n>'", lineno)
            n = _int(parts[1], lineno)
            if n < 1:
                raise GraphFormatError("vertex count must be positive", lineno)
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"expected '<u> <v>', got {line!r}", lineno)
        u, v = _int(parts[0], lineno), _int(parts[1], lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"vertex out of range 1..{n}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at {u}", lineno)
        edges.add((min(u, v), max(u, v)))
    if n is None:
        raise GraphFormatError("missing 'graph <n>' header")
    return Graph(n, sorted(edges))


def parse_matrix(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if set(line) - {"0", "1"}:
            raise GraphFormatError("matrix rows may only contain 0 and 1", lineno)
        rows.append((lineno, line))
    if not rows:
        raise GraphFormatError("empty matrix")
    n = len(rows)
    for i, (lineno, line) in enumerate(rows):
        if len(line) != n:
            raise GraphFormatError(f"row has {len(line)} entries, expected {n}", lineno)
        if line[i] != "1":
            raise GraphFormatError(f"diagonal entry ({i + 1},{i + 1}) must be 1", lineno)
    edges = []
    for i, (lineno, line) in enumerate(rows):
        for j in range(i + 1, n):
            if line[j] != rows[j][1][i]:
                raise GraphFormatError(f"matrix not symmetric at ({i + 1},{j + 1})", lineno)
            if line[j] == "1":
                edges.append((i + 1, j + 1))
    return Graph(n, edges)


def parse_graph(text: str, fmt: str = "edges") -> Graph:
    if fmt == "edges":
        return parse_edge_list(text)
    if fmt == "matrix":
        return parse_matrix(text)
    raise GraphFormatError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def load_graph(path: str | Path, fmt: str = "edges") -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_graph(text, fmt)


def format_edge_list(g: Graph, comments: list[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"graph {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def format_matrix(g: Graph) -> str:
    return str(augmented_adjacency(g)) + "\n"


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"not an integer: {token!r}", lineno) from None
