"""Constructions on oriented graphs.

* good orderings and the orientation that points every non-prefix edge to
  the earlier vertex, copying a given digraph on the prefix;
* the blow-up of a directed cycle by copies of a digraph;
* the peeling process driven by Hall-type violator sets, and the lift test
  for Seymour vertices of the peeled part.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gnp import iter_induced_copies
from .graph import (Digraph, Graph, VertexSet, _as_mask, is_seymour_vertex, iter_bits,
                    min_out_degree, strongly_connected)

DEFAULT_BACKTRACKS = 1000
EXHAUSTIVE_MAX_N = 10


@dataclass(frozen=True)
class VertexOrdering:
    order: tuple[int, ...]
    h: int = 0
    back_degrees: tuple[int, ...] = ()

    @classmethod
    def of(cls, G: Graph, order, h: int = 0) -> "VertexOrdering":
        order = tuple(order)
        if sorted(order) != list(range(G.n)):
            raise ValueError("ordering is not a permutation of the vertices")
        if not 0 <= h <= G.n:
            raise ValueError("prefix length out of range")
        seen, back = 0, []
        for v in order:
            back.append((G.adj[v] & seen).bit_count())
            seen |= 1 << v
        return cls(order, h, tuple(back))

    def satisfies_halfback(self, start: int) -> bool:
        """``back_degree(i) >= i/2`` for 1-based positions ``i >= start``."""
        return all(2 * b >= i for i, b in enumerate(self.back_degrees, 1) if i >= start)

    def format(self) -> str:
        return " ".join([f"h={self.h}"] + [str(v) for v in self.order])

    @classmethod
    def parse(cls, G: Graph, line: str) -> "VertexOrdering":
        parts = line.split()
        if not parts or not parts[0].startswith("h="):
            raise ValueError("ordering line must start with h=<int>")
        return cls.of(G, [int(x) for x in parts[1:]], int(parts[0][2:]))


class _Budget(Exception):
    pass


def _extend(G: Graph, prefix: list[int], budget: list[int] | None, failed: set[int]) -> list[int] | None:
    """Extend ``prefix`` so every later 1-based position ``i`` has back-degree ``>= i/2``.

    Candidates go by decreasing back-degree, then id. Placed sets that
    cannot be completed are memoised in ``failed``; feasibility only depends
    on the placed set.
    """
    n = G.n
    placed = 0
    for v in prefix:
        placed |= 1 << v
    order = list(prefix)

    def rec(placed):
        i = len(order) + 1
        if i > n:
            return True
        if placed in failed:
            return False
        cands = []
        for v in range(n):
            if not (placed >> v) & 1:
                b = (G.adj[v] & placed).bit_count()
                if 2 * b >= i:
                    cands.append((-b, v))
        cands.sort()
        for _, v in cands:
            order.append(v)
            if rec(placed | (1 << v)):
                return True
            order.pop()
            if budget is not None:
                budget[0] -= 1
                if budget[0] < 0:
                    raise _Budget
        failed.add(placed)
        return False

    return order if rec(placed) else None


def _search(G: Graph, prefixes, h: int, max_backtracks: int, exhaustive: bool) -> VertexOrdering | None:
    if exhaustive and G.n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive mode is limited to n <= {EXHAUSTIVE_MAX_N}")
    budget = None if exhaustive else [max_backtracks]
    failed: set[int] = set()
    tried: set[int] = set()
    try:
        for prefix in prefixes:
            key = 0
            for v in prefix:
                key |= 1 << v
            if key in tried:
                continue
            tried.add(key)
            order = _extend(G, prefix, budget, failed)
            if order is not None:
                return VertexOrdering.of(G, order, h)
    except _Budget:
        return None
    return None


def find_good_ordering(G: Graph, H: Graph, max_backtracks: int = DEFAULT_BACKTRACKS,
                       exhaustive: bool = False) -> VertexOrdering | None:
    """Ordering whose first ``|H|`` vertices induce ``H`` (``order[j]`` is
    the image of H-vertex ``j``) and whose later positions ``i`` have at
    least ``i/2`` earlier neighbours.

    Tries induced copies in lexicographic order and extends greedily with
    backtracking. None after ``max_backtracks`` undone placements is not a
    proof of nonexistence; with ``exhaustive`` (``n <= 10``) it is.
    """
    if H.n > G.n:
        raise ValueError("H has more vertices than G")
    return _search(G, iter_induced_copies(G, H), H.n, max_backtracks, exhaustive)


def find_halfback_ordering(G: Graph, max_backtracks: int = DEFAULT_BACKTRACKS,
                           exhaustive: bool = False) -> VertexOrdering | None:
    """Ordering with back-degree ``>= i/2`` at every position ``i >= 2``.

    Position 1 is exempt since its back-degree is always 0.
    """
    if G.n == 0:
        return VertexOrdering((), 0, ())
    return _search(G, ([v] for v in range(G.n)), 0, max_backtracks, exhaustive)


def orient_without_seymour(G: Graph, ordering: VertexOrdering, D: Digraph) -> Digraph:
    """Copy ``D`` onto the ordering prefix and point every other edge at its earlier endpoint.

    ``D``'s vertex ``j`` maps to ``ordering.order[j]``. The Seymour vertices
    of the result are exactly the images of the Seymour vertices of ``D``.
    """
    order, h = ordering.order, ordering.h
    fresh = VertexOrdering.of(G, order, h)
    if D.n != h:
        raise ValueError(f"D has {D.n} vertices but the prefix has {h}")
    if not fresh.satisfies_halfback(h + 1):
        raise ValueError("ordering is not good: some position i > h has back-degree < i/2")
    under = D.underlying()
    for j in range(h):
        for k in range(j + 1, h):
            if under.has_edge(j, k) != G.has_edge(order[j], order[k]):
                raise ValueError(f"prefix does not induce D's underlying graph at ({j}, {k})")
    rank = {v: i for i, v in enumerate(order)}
    rows = [0] * G.n
    for u, v in G.edges():
        if rank[u] < h and rank[v] < h:
            a, b = rank[u], rank[v]
            if not D.has_arc(a, b):
                u, v = v, u
        elif rank[u] < rank[v]:
            u, v = v, u
        rows[u] |= 1 << v
    return Digraph(G.n, rows)


def blow_up(D0: Digraph, copies: int) -> Digraph:
    """Replace each vertex of a directed ``copies``-cycle by a copy of ``D0``.

    Copy ``i`` holds vertices ``i*n0 .. i*n0 + n0 - 1`` and sends an arc from
    each of its vertices to each vertex of copy ``(i + 1) % copies``.
    """
    if copies < 3:
        raise ValueError("need at least 3 copies (2 would create 2-cycles)")
    n0 = D0.n
    if n0 == 0:
        raise ValueError("D0 must have at least one vertex")
    block = (1 << n0) - 1
    rows = []
    for i in range(copies):
        nxt = block << (((i + 1) % copies) * n0)
        for v in range(n0):
            rows.append((D0.out_adj[v] << (i * n0)) | nxt)
    return Digraph(n0 * copies, rows)


# -- peeling ----------------------------------------------------------------------

def _max_matching(D: Digraph, xs: list[int], b: int) -> dict[int, int]:
    """Kuhn's augmenting paths; returns ``{x: matched b-vertex}``."""
    match_b: dict[int, int] = {}

    def augment(x, seen):
        for w in iter_bits(D.out_adj[x] & b):
            if w in seen:
                continue
            seen.add(w)
            if w not in match_b or augment(match_b[w], seen):
                match_b[w] = x
                return True
        return False

    for x in xs:
        augment(x, set())
    return {x: w for w, x in match_b.items()}


def find_hall_violator(D: Digraph, X, B) -> VertexSet | None:
    """Nonempty ``X' <= X`` with ``|N1(X') & B| < |X'|``, or None.

    Finds a maximum matching from ``X`` into out-neighbours in ``B``. If it
    saturates ``X`` no violator exists; otherwise the answer is the set of
    X-vertices reachable by alternating paths from the lowest unmatched one,
    whose neighbourhood in ``B`` is exactly one smaller than itself.
    """
    x, b = _as_mask(D.n, X), _as_mask(D.n, B)
    if x & b:
        raise ValueError("X and B overlap")
    xs = list(iter_bits(x))
    matched = _max_matching(D, xs, b)
    free = [v for v in xs if v not in matched]
    if not free:
        return None
    partner = {w: v for v, w in matched.items()}
    reached, stack, seen_b = 1 << free[0], [free[0]], 0
    while stack:
        v = stack.pop()
        for w in iter_bits(D.out_adj[v] & b & ~seen_b):
            seen_b |= 1 << w
            u = partner[w]
            if not (reached >> u) & 1:
                reached |= 1 << u
                stack.append(u)
    return VertexSet(D.n, reached)


@dataclass(frozen=True)
class PeelStep:
    A: VertexSet
    X: VertexSet
    B: VertexSet
    violator: VertexSet | None = None

    def sizes(self) -> tuple[int, int, int]:
        return len(self.A), len(self.X), len(self.B)


@dataclass
class PeelingState:
    """``steps[i]`` is partition ``i + 1``; the last is terminal.

    ``stop`` is ``"no-violator"`` or ``"x-empty"``.
    """

    origin: int
    steps: list[PeelStep] = field(default_factory=list)
    stop: str = ""
    strongly_connected: bool = False

    @property
    def t(self) -> int:
        """Index of the terminal partition; partitions are numbered from 1."""
        return len(self.steps)

    @property
    def A(self) -> VertexSet:
        return self.steps[-1].A

    @property
    def X(self) -> VertexSet:
        return self.steps[-1].X

    @property
    def B(self) -> VertexSet:
        return self.steps[-1].B

    def trace_lines(self) -> list[str]:
        lines = []
        for i, s in enumerate(self.steps, 1):
            a, x, b = s.sizes()
            members = " ".join(map(str, s.violator)) if s.violator is not None else "-"
            lines.append(f"{i} {a} {x} {b} {members}")
        return lines


def peel(D: Digraph) -> PeelingState:
    """Grow ``A`` from a minimum out-degree vertex by absorbing violator sets.

    Starts from ``A = {x} | N1(x)``, ``X = N2(x)`` and ``B`` the rest. While
    ``X`` is nonempty and holds a violator ``X'``: ``A |= X'``,
    ``X = (X - X') | (N1(X') & B)``, ``B -= N1(X')``.
    """
    if D.n == 0:
        raise ValueError("empty digraph")
    n = D.n
    _, x = min_out_degree(D)
    n1 = D.out_adj[x]
    reach = 0
    for u in iter_bits(n1):
        reach |= D.out_adj[u]
    a = n1 | (1 << x)
    xs = reach & ~a
    b = ((1 << n) - 1) & ~(a | xs)
    state = PeelingState(origin=x, strongly_connected=strongly_connected(D))
    while True:
        if not xs:
            state.steps.append(PeelStep(VertexSet(n, a), VertexSet(n, xs), VertexSet(n, b)))
            state.stop = "x-empty"
            return state
        viol = find_hall_violator(D, VertexSet(n, xs), VertexSet(n, b))
        state.steps.append(PeelStep(VertexSet(n, a), VertexSet(n, xs), VertexSet(n, b), viol))
        if viol is None:
            state.stop = "no-violator"
            return state
        out = 0
        for u in viol:
            out |= D.out_adj[u]
        hit = out & b
        a |= viol.mask
        xs = (xs & ~viol.mask) | hit
        b &= ~out


def lift_seymour(D: Digraph, state: PeelingState, z: int) -> bool:
    """True when ``z`` is Seymour in ``D[A]`` and ``|N1(N1(z) & X) & B| >= |N1(z) & X|``.

    Both together force ``z`` to be Seymour in ``D``.
    """
    a, xs, b = state.A.mask, state.X.mask, state.B.mask
    if not (a >> z) & 1:
        raise ValueError(f"vertex {z} is not in A")
    if xs and find_hall_violator(D, state.X, state.B) is not None:
        raise ValueError("peeling state is not terminal")
    if not is_seymour_vertex(D.induced(state.A), z):
        return False
    into_x = D.out_adj[z] & xs
    out = 0
    for u in iter_bits(into_x):
        out |= D.out_adj[u]
    return (out & b).bit_count() >= into_x.bit_count()


def seymour_vertices_of_core(D: Digraph, state: PeelingState) -> list[int]:
    """Vertices of ``A`` that are Seymour in ``D[A]``."""
    core = D.induced(state.A)
    return [z for z in state.A if is_seymour_vertex(core, z)]
