"""Graph and oriented-graph types backed by per-vertex bit-vectors.

Adjacency rows are Python ints used as bitsets, so vertex counts are
unbounded. Everything iterates in ascending vertex id.

A vertex with no out-neighbours is a Seymour vertex (0 >= 0), and a vertex
with no in-neighbours is a Sullivan vertex; isolated vertices are both.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, eq=False)
class VertexSet:
    """A subset of ``range(n)`` stored as a bitmask."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask has bits outside range({self.n})")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int] = ()) -> "VertexSet":
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < n:
                raise IndexError(f"vertex {v} out of range for n={n}")
        return cls(n, mask_of(vertices))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __iter__(self):
        return iter_bits(self.mask)

    def __len__(self):
        return self.mask.bit_count()

    def __bool__(self):
        return self.mask != 0

    def __contains__(self, v):
        return 0 <= v < self.n and (self.mask >> v) & 1 == 1

    def _other_mask(self, other) -> int:
        if isinstance(other, VertexSet):
            return other.mask
        return mask_of(other)

    def __and__(self, other):
        return VertexSet(self.n, self.mask & self._other_mask(other))

    def __or__(self, other):
        return VertexSet(self.n, self.mask | self._other_mask(other))

    def __sub__(self, other):
        return VertexSet(self.n, self.mask & ~self._other_mask(other))

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def isdisjoint(self, other) -> bool:
        return self.mask & self._other_mask(other) == 0

    def __eq__(self, other):
        if isinstance(other, VertexSet):
            return self.mask == other.mask
        if isinstance(other, (set, frozenset)):
            return set(self) == other
        return NotImplemented

    def __hash__(self):
        return hash(self.mask)

    def tolist(self) -> list[int]:
        return list(self)

    def __repr__(self):
        return f"VertexSet({self.tolist()})"


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise IndexError(f"vertex {v} out of range for n={n}")


def _as_mask(n: int, s) -> int:
    if isinstance(s, VertexSet):
        if s.n != n:
            raise ValueError(f"vertex set over n={s.n} used with graph on n={n}")
        return s.mask
    m = 0
    for v in s:
        _check_vertex(n, v)
        m |= 1 << v
    return m


class Graph:
    """Undirected simple graph on vertices ``0..n-1``. Immutable."""

    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(int(a) for a in adj)
        if n < 0 or len(adj) != n:
            raise ValueError("adjacency must have one row per vertex")
        for v, row in enumerate(adj):
            if row < 0 or row >> n:
                raise ValueError(f"row {v} has bits outside range({n})")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for w in iter_bits(row):
                if not (adj[w] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {w})")
        self.n = n
        self.adj = adj
        self._m = sum(row.bit_count() for row in adj) // 2

    @classmethod
    def _trusted(cls, n: int, adj) -> "Graph":
        # caller guarantees symmetric, loop-free rows
        g = object.__new__(cls)
        g.n = n
        g.adj = tuple(adj)
        g._m = sum(row.bit_count() for row in g.adj) // 2
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if (rows[u] >> v) & 1:
                raise ValueError(f"duplicate edge {u} {v}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> "Graph":
        """Build from a symmetric boolean adjacency matrix."""
        matrix = np.asarray(matrix, dtype=bool)
        n = matrix.shape[0]
        packed = np.packbits(matrix, axis=1, bitorder="little")
        rows = [int.from_bytes(packed[i].tobytes(), "little") for i in range(n)]
        if matrix.diagonal().any() or not np.array_equal(matrix, matrix.T):
            raise ValueError("adjacency matrix must be symmetric with zero diagonal")
        return cls._trusted(n, rows)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    @property
    def m(self) -> int:
        return self._m

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        _check_vertex(self.n, v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> VertexSet:
        _check_vertex(self.n, v)
        return VertexSet(self.n, self.adj[v])

    def adjacency_matrix(self) -> np.ndarray:
        nbytes = (self.n + 7) // 8
        buf = b"".join(row.to_bytes(nbytes, "little") for row in self.adj)
        bits = np.unpackbits(np.frombuffer(buf, dtype=np.uint8).reshape(self.n, nbytes),
                             axis=1, bitorder="little")
        return bits[:, : self.n].astype(bool)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced by ``vertices``, relabelled in the given order."""
        vertices = list(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        edges = [(pos[u], pos[v]) for u in vertices for v in vertices
                 if pos[u] < pos[v] and self.has_edge(u, v)]
        return Graph.from_edges(len(vertices), edges)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Digraph:
    """Oriented graph: no loops and never both ``u->v`` and ``v->u``. Immutable."""

    __slots__ = ("n", "out_adj", "in_adj")

    def __init__(self, n: int, out_adj: Iterable[int]):
        out_adj = tuple(int(a) for a in out_adj)
        if n < 0 or len(out_adj) != n:
            raise ValueError("adjacency must have one row per vertex")
        in_adj = [0] * n
        for u, row in enumerate(out_adj):
            if row < 0 or row >> n:
                raise ValueError(f"row {u} has bits outside range({n})")
            if (row >> u) & 1:
                raise ValueError(f"self-loop at vertex {u}")
            for w in iter_bits(row):
                in_adj[w] |= 1 << u
        for u in range(n):
            both = out_adj[u] & in_adj[u]
            if both:
                w = both.bit_length() - 1
                raise ValueError(f"2-cycle between {u} and {w}")
        self.n = n
        self.out_adj = out_adj
        self.in_adj = tuple(in_adj)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        rows = [0] * n
        for u, v in arcs:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if (rows[u] >> v) & 1:
                raise ValueError(f"duplicate arc {u} {v}")
            rows[u] |= 1 << v
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> "Digraph":
        return cls(n, [0] * n)

    @classmethod
    def directed_cycle(cls, n: int) -> "Digraph":
        return cls.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def transitive_tournament(cls, n: int) -> "Digraph":
        return cls.from_arcs(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.out_adj)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, w) for u, row in enumerate(self.out_adj) for w in iter_bits(row)]

    def has_arc(self, u: int, v: int) -> bool:
        return (self.out_adj[u] >> v) & 1 == 1

    def out_degree(self, v: int) -> int:
        _check_vertex(self.n, v)
        return self.out_adj[v].bit_count()

    def in_degree(self, v: int) -> int:
        _check_vertex(self.n, v)
        return self.in_adj[v].bit_count()

    def out_degrees(self) -> list[int]:
        return [row.bit_count() for row in self.out_adj]

    def underlying(self) -> Graph:
        return Graph(self.n, [o | i for o, i in zip(self.out_adj, self.in_adj)])

    def out_array(self) -> np.ndarray:
        """Out-adjacency as ``uint64`` words; only valid for ``n <= 64``."""
        if self.n > 64:
            raise ValueError("out_array needs n <= 64")
        return np.array(self.out_adj, dtype=np.uint64)

    def induced(self, vertices) -> "Digraph":
        """Sub-digraph induced by a vertex set, keeping original labels.

        Vertices outside the set stay present but isolated.
        """
        keep = _as_mask(self.n, vertices)
        rows = [row & keep if (keep >> u) & 1 else 0 for u, row in enumerate(self.out_adj)]
        return Digraph(self.n, rows)

    def relabel(self, mapping) -> "Digraph":
        """Digraph on ``n`` vertices with arc ``mapping[u] -> mapping[v]`` per arc."""
        return Digraph.from_arcs(self.n, [(mapping[u], mapping[v]) for u, v in self.arcs()])

    def __eq__(self, other):
        return isinstance(other, Digraph) and self.n == other.n and self.out_adj == other.out_adj

    def __hash__(self):
        return hash((self.n, self.out_adj))

    def __repr__(self):
        return f"Digraph(n={self.n}, m={self.m})"


# -- neighbourhood operators -------------------------------------------------

def _n2_mask(D: Digraph, v: int) -> int:
    n1 = D.out_adj[v]
    reach = 0
    for u in iter_bits(n1):
        reach |= D.out_adj[u]
    return reach & ~n1 & ~(1 << v)


def out_neighborhood(D: Digraph, v: int) -> VertexSet:
    _check_vertex(D.n, v)
    return VertexSet(D.n, D.out_adj[v])


def in_neighborhood(D: Digraph, v: int) -> VertexSet:
    _check_vertex(D.n, v)
    return VertexSet(D.n, D.in_adj[v])


def second_out_neighborhood(D: Digraph, v: int) -> VertexSet:
    """Vertices at directed distance exactly two from ``v``."""
    _check_vertex(D.n, v)
    return VertexSet(D.n, _n2_mask(D, v))


def is_seymour_vertex(D: Digraph, v: int) -> bool:
    _check_vertex(D.n, v)
    return _n2_mask(D, v).bit_count() >= D.out_adj[v].bit_count()


def is_sullivan_vertex(D: Digraph, v: int) -> bool:
    """``|N2(v)| >= |N-(v)|``; the two sets may overlap and are counted separately."""
    _check_vertex(D.n, v)
    return _n2_mask(D, v).bit_count() >= D.in_adj[v].bit_count()


def seymour_vertices(D: Digraph) -> VertexSet:
    return VertexSet(D.n, mask_of(v for v in range(D.n) if is_seymour_vertex(D, v)))


def sullivan_vertices(D: Digraph) -> VertexSet:
    return VertexSet(D.n, mask_of(v for v in range(D.n) if is_sullivan_vertex(D, v)))


def qualifying_vertices(D: Digraph, predicate: str) -> VertexSet:
    if predicate == "seymour":
        return seymour_vertices(D)
    if predicate == "sullivan":
        return sullivan_vertices(D)
    raise ValueError(f"unknown predicate {predicate!r}")


def set_out_neighborhood(D: Digraph, A) -> VertexSet:
    a = _as_mask(D.n, A)
    reach = 0
    for u in iter_bits(a):
        reach |= D.out_adj[u]
    return VertexSet(D.n, reach & ~a)


# -- counting ----------------------------------------------------------------

def _disjoint_masks(n: int, A, B) -> tuple[int, int]:
    a, b = _as_mask(n, A), _as_mask(n, B)
    if a & b:
        raise ValueError("vertex sets overlap")
    return a, b


def directed_edge_count(D: Digraph, A, B) -> int:
    """Number of arcs from ``A`` to ``B``."""
    a, b = _disjoint_masks(D.n, A, B)
    return sum((D.out_adj[u] & b).bit_count() for u in iter_bits(a))


def undirected_edge_count(G: Graph, A, B) -> int:
    a, b = _disjoint_masks(G.n, A, B)
    return sum((G.adj[u] & b).bit_count() for u in iter_bits(a))


def internal_edge_count(G: Graph, A) -> int:
    a = _as_mask(G.n, A)
    return sum((G.adj[u] & a).bit_count() for u in iter_bits(a)) // 2


def strongly_connected(D: Digraph) -> bool:
    """Forward and backward reachability from vertex 0 both cover V."""
    n = D.n
    if n <= 1:
        return True
    full = (1 << n) - 1
    for rows in (D.out_adj, D.in_adj):
        seen = frontier = 1
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= rows[u]
            frontier = nxt & ~seen
            seen |= frontier
        if seen != full:
            return False
    return True


def min_out_degree(D: Digraph) -> tuple[int, int]:
    """Smallest out-degree and the lowest vertex attaining it."""
    if D.n == 0:
        raise ValueError("empty digraph")
    degs = D.out_degrees()
    d = min(degs)
    return d, degs.index(d)


def directed_two_path_count(D: Digraph, mode: str = "by-middle") -> int:
    """Number of directed 2-paths ``u->v->w`` with ``u != w``.

    ``by-middle`` sums ``d-(v) * d+(v)``; ``by-endpoints`` counts common
    vertices of ``N+(u)`` and ``N-(w)`` over ordered pairs ``u != w``.
    """
    if mode == "by-middle":
        total = 0
        for v in range(D.n):
            total += D.in_adj[v].bit_count() * D.out_adj[v].bit_count()
            # u == w would need both u->v and v->u
            total -= (D.in_adj[v] & D.out_adj[v]).bit_count()
        return total
    if mode == "by-endpoints":
        total = 0
        for u in range(D.n):
            ou = D.out_adj[u]
            if not ou:
                continue
            for w in range(D.n):
                if w != u:
                    total += (ou & D.in_adj[w]).bit_count()
        return total
    raise ValueError(f"unknown mode {mode!r}")
