"""Plain-text edge-list formats.

Both formats start with a line ``n m`` followed by ``m`` lines ``u v``. For
graphs ``u < v`` is required; for digraphs the line means ``u -> v``.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Digraph, Graph


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<text>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


def _parse_pairs(text: str, source: str):
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("missing header line 'n m'", 1, source)

    def ints(lineno: int, line: str) -> tuple[int, int]:
        parts = line.split(" ")
        if len(parts) != 2:
            raise FormatError(f"expected two integers, got {line!r}", lineno, source)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"expected two integers, got {line!r}", lineno, source) from None
        if a < 0 or b < 0:
            raise FormatError("negative value", lineno, source)
        return a, b

    n, m = ints(1, lines[0])
    if len(lines) - 1 != m:
        raise FormatError(f"header declares {m} edges but {len(lines) - 1} follow", 1, source)
    pairs = [(i + 2, *ints(i + 2, line)) for i, line in enumerate(lines[1:])]
    return n, pairs


def parse_graph(text: str, source: str = "<text>") -> Graph:
    n, pairs = _parse_pairs(text, source)
    rows = [0] * n
    for lineno, u, v in pairs:
        if not u < v < n:
            raise FormatError(f"edge {u} {v} needs 0 <= u < v < {n}", lineno, source)
        if (rows[u] >> v) & 1:
            raise FormatError(f"duplicate edge {u} {v}", lineno, source)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def parse_digraph(text: str, source: str = "<text>") -> Digraph:
    n, pairs = _parse_pairs(text, source)
    rows = [0] * n
    for lineno, u, v in pairs:
        if u >= n or v >= n:
            raise FormatError(f"arc {u} {v} out of range for n={n}", lineno, source)
        if u == v:
            raise FormatError(f"loop at {u}", lineno, source)
        if (rows[u] >> v) & 1:
            raise FormatError(f"duplicate arc {u} {v}", lineno, source)
        if (rows[v] >> u) & 1:
            raise FormatError(f"arc {u} {v} closes a 2-cycle", lineno, source)
        rows[u] |= 1 << v
    return Digraph(n, rows)


def format_graph(G: Graph) -> str:
    edges = G.edges()
    return "".join([f"{G.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def format_digraph(D: Digraph) -> str:
    arcs = D.arcs()
    return "".join([f"{D.n} {len(arcs)}\n"] + [f"{u} {v}\n" for u, v in arcs])


def read_graph(path) -> Graph:
    path = Path(path)
    return parse_graph(path.read_text(encoding="ascii"), str(path))


def read_digraph(path) -> Digraph:
    path = Path(path)
    return parse_digraph(path.read_text(encoding="ascii"), str(path))


def write_graph(G: Graph, path) -> None:
    Path(path).write_text(format_graph(G), encoding="ascii")


def write_digraph(D: Digraph, path) -> None:
    Path(path).write_text(format_digraph(D), encoding="ascii")
