"""Exhaustive and adversarial search over orientations of a graph.

The exhaustive search walks the binary tree of edge directions depth first.
A branch is cut as soon as some vertex is certain to qualify in every
completion: once all edges at ``v`` are decided, ``N1(v)`` and ``N-(v)`` are
final, and the part of ``N2(v)`` already forced by decided arcs can only
grow. At a leaf the same test is exact.

The tree is split into ``2**k`` subtrees by fixing the first ``k`` edge
directions (``k = min(m, SPLIT_DEPTH)``), independent of the worker count,
so node counts and witnesses do not depend on ``threads``.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import _kernels
from .graph import Digraph, Graph, iter_bits
from .rng import stream

PREDICATES = {"seymour": (False, 0), "sullivan": (True, 0), "seymour-strict": (False, 1)}
SPLIT_DEPTH = 6
DEFAULT_EDGE_LIMIT = 30


def _predicate(name: str) -> tuple[bool, int]:
    try:
        return PREDICATES[name]
    except KeyError:
        raise ValueError(f"unknown predicate {name!r}") from None


@dataclass
class SearchConfig:
    """``node_budget`` 0 means unlimited; otherwise it caps each subtree at
    ``ceil(node_budget / subtrees)`` nodes."""

    edge_limit: int = DEFAULT_EDGE_LIMIT
    prune: bool = True
    force: bool = False
    threads: int | None = None
    node_budget: int = 0
    backend: str | None = None


@dataclass
class PartialOrientation:
    underlying: Graph
    edge_order: list[tuple[int, int]]
    directions: list[int | None] = field(default_factory=list)

    def __post_init__(self):
        if not self.directions:
            self.directions = [None] * len(self.edge_order)
        decided = [d is not None for d in self.directions]
        if any(decided[i + 1] and not decided[i] for i in range(len(decided) - 1)):
            raise ValueError("decided edges must form a prefix of the edge order")

    @property
    def decided(self) -> int:
        return sum(d is not None for d in self.directions)

    def to_digraph(self) -> Digraph:
        """Digraph of the decided arcs (undecided edges left out)."""
        rows = [0] * self.underlying.n
        for (u, v), d in zip(self.edge_order, self.directions):
            if d is None:
                break
            if d:
                u, v = v, u
            rows[u] |= 1 << v
        return Digraph(self.underlying.n, rows)


@dataclass
class SearchOutcome:
    verdict: str  # "all-have" | "counterexample-found" | "budget-exhausted"
    witness: Digraph | None
    nodes: int
    leaves: int
    pruned: int
    edge_order: list[tuple[int, int]] = field(default_factory=list)

    def __post_init__(self):
        if self.verdict == "counterexample-found" and self.witness is None:
            raise ValueError("counterexample-found needs a witness")


def search_edge_order(G: Graph) -> list[tuple[int, int]]:
    """Edges grouped by their lower-degree endpoint first.

    Vertices are visited by ascending degree (ties by id) and each
    contributes its not yet listed edges, so low-degree vertices become
    fully decided early.
    """
    degs = G.degrees()
    order, seen = [], set()
    for v in sorted(range(G.n), key=lambda x: (degs[x], x)):
        for w in sorted(iter_bits(G.adj[v]), key=lambda x: (degs[x], x)):
            e = (min(v, w), max(v, w))
            if e not in seen:
                seen.add(e)
                order.append(e)
    return order


def _dirs_to_digraph(n, edges, dirs) -> Digraph:
    rows = [0] * n
    for (u, v), d in zip(edges, dirs):
        if d:
            u, v = v, u
        rows[u] |= 1 << v
    return Digraph(n, rows)


def enumerate_orientations(G: Graph, predicate: str = "seymour",
                           config: SearchConfig | None = None) -> SearchOutcome:
    """Decide whether every orientation of ``G`` has a qualifying vertex."""
    config = config or SearchConfig()
    sullivan, slack = _predicate(predicate)
    edges = search_edge_order(G)
    m = len(edges)
    if m > config.edge_limit and not (config.force and config.prune):
        raise ValueError(f"{m} edges exceed the edge limit {config.edge_limit}")
    if m >= 63:
        raise ValueError("more than 62 edges cannot be addressed by orientation codes")
    if m == 0:
        # no arcs: every vertex has empty N1 and N-, so every vertex qualifies
        if slack == 0 or G.n == 0:
            return SearchOutcome("all-have", None, 1, 1, 0, edges)
        return SearchOutcome("counterexample-found", Digraph.empty(G.n), 1, 1, 0, edges)

    degrees = G.degrees()
    k = min(m, SPLIT_DEPTH)
    subtrees = 1 << k
    per_budget = -(-config.node_budget // subtrees) if config.node_budget > 0 else 0

    def run(prefix):
        return _kernels.search_subtree(G.n, edges, degrees, prefix, k, sullivan,
                                       config.prune, per_budget, config.backend, slack)

    threads = config.threads or os.cpu_count() or 1
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, range(subtrees)))
    else:
        results = [run(prefix) for prefix in range(subtrees)]

    nodes = sum(r[1] for r in results)
    leaves = sum(r[2] for r in results)
    pruned = sum(r[3] for r in results)
    for status, _, _, _, dirs in results:
        if status == _kernels.FOUND:
            witness = _dirs_to_digraph(G.n, edges, dirs)
            return SearchOutcome("counterexample-found", witness, nodes, leaves, pruned, edges)
    if any(r[0] == _kernels.BUDGET for r in results):
        return SearchOutcome("budget-exhausted", None, nodes, leaves, pruned, edges)
    return SearchOutcome("all-have", None, nodes, leaves, pruned, edges)


def exhaustive_without_count(G: Graph, predicate: str = "seymour", backend: str | None = None) -> tuple[int, int]:
    """Scan all ``2**m`` orientations without pruning.

    Returns the number of orientations with no qualifying vertex and the
    first such orientation code (-1 if none); codes follow ``G.edges()``.
    """
    sullivan, slack = _predicate(predicate)
    return _kernels.count_orientations_without(G.n, G.edges(), sullivan, backend=backend, slack=slack)


# -- local search -------------------------------------------------------------

def _count(n, out, inn, sullivan, slack) -> int:
    count = 0
    for v in range(n):
        n1 = out[v]
        reach = 0
        for u in iter_bits(n1):
            reach |= out[u]
        n2 = reach & ~n1 & ~(1 << v)
        ref = inn[v] if sullivan else n1
        count += n2.bit_count() >= ref.bit_count() + slack
    return count


def greedy_back_ordering(G: Graph) -> list[int]:
    """Repeatedly place the unplaced vertex with most placed neighbours (ties by id)."""
    placed, order = 0, []
    back = [0] * G.n
    remaining = set(range(G.n))
    while remaining:
        v = min(remaining, key=lambda x: (-back[x], x))
        remaining.discard(v)
        order.append(v)
        placed |= 1 << v
        for w in iter_bits(G.adj[v]):
            back[w] += 1
    return order


def adversarial_search(G: Graph, predicate: str = "seymour", budget: int = 1000,
                       seed: int = 0) -> tuple[Digraph, int]:
    """Hill-climb over single-edge flips to minimise the number of qualifying vertices.

    Starts from the orientation pointing every edge to the earlier vertex of
    :func:`greedy_back_ordering`. A flip is kept when it does not increase
    the count. After ``max(1, budget // 10)`` iterations without a new best,
    restarts from a uniformly random orientation. Returns the best
    orientation seen and its count; ``budget=0`` evaluates the start only.
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")
    sullivan, slack = _predicate(predicate)
    n = G.n
    edges = G.edges()
    rank = {v: i for i, v in enumerate(greedy_back_ordering(G))}
    dirs = [1 if rank[u] < rank[v] else 0 for u, v in edges]  # arc from later to earlier

    def build(dirs):
        out, inn = [0] * n, [0] * n
        for (u, v), d in zip(edges, dirs):
            if d:
                u, v = v, u
            out[u] |= 1 << v
            inn[v] |= 1 << u
        return out, inn

    out, inn = build(dirs)
    current = _count(n, out, inn, sullivan, slack)
    best, best_dirs = current, list(dirs)
    if not edges or budget == 0:
        return _dirs_to_digraph(n, edges, best_dirs), best
    rng = stream(seed, 0, "adversarial")
    patience = max(1, budget // 10)
    stale = 0
    for _ in range(budget):
        if best == 0:
            break
        i = int(rng.integers(len(edges)))
        u, v = edges[i]
        a, b = (v, u) if dirs[i] else (u, v)
        out[a] ^= 1 << b
        inn[b] ^= 1 << a
        out[b] ^= 1 << a
        inn[a] ^= 1 << b
        dirs[i] ^= 1
        cand = _count(n, out, inn, sullivan, slack)
        if cand <= current:
            current = cand
        else:
            out[a] ^= 1 << b
            inn[b] ^= 1 << a
            out[b] ^= 1 << a
            inn[a] ^= 1 << b
            dirs[i] ^= 1
        if current < best:
            best, best_dirs, stale = current, list(dirs), 0
        else:
            stale += 1
        if stale >= patience:
            dirs = (rng.random(len(edges)) < 0.5).astype(int).tolist()
            out, inn = build(dirs)
            current = _count(n, out, inn, sullivan, slack)
            if current < best:
                best, best_dirs = current, list(dirs)
            stale = 0
    return _dirs_to_digraph(n, edges, best_dirs), best


# -- ordering profile -----------------------------------------------------------

def out_degree_ordering(D: Digraph) -> list[int]:
    """Vertices by decreasing out-degree, ties by ascending id."""
    degs = D.out_degrees()
    return sorted(range(D.n), key=lambda v: (-degs[v], v))


def prefix_backedge_profile(D: Digraph) -> list[int]:
    """``|N1(x_i) & {x_1..x_(i-1)}|`` along :func:`out_degree_ordering`."""
    seen, profile = 0, []
    for v in out_degree_ordering(D):
        profile.append((D.out_adj[v] & seen).bit_count())
        seen |= 1 << v
    return profile
