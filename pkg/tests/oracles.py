"""Brute-force reference implementations on plain Python sets.

Nothing here imports the package; tests compare the library against these.
"""

import itertools
import math

import mpmath


def out_sets(n, arcs):
    out = {v: set() for v in range(n)}
    for u, v in arcs:
        out[u].add(v)
    return out


def in_sets(n, arcs):
    inn = {v: set() for v in range(n)}
    for u, v in arcs:
        inn[v].add(u)
    return inn


def second_out(out, v):
    reach = set()
    for u in out[v]:
        reach |= out[u]
    return reach - out[v] - {v}


def seymour(n, arcs):
    out = out_sets(n, arcs)
    return {v for v in range(n) if len(second_out(out, v)) >= len(out[v])}


def sullivan(n, arcs):
    out, inn = out_sets(n, arcs), in_sets(n, arcs)
    return {v for v in range(n) if len(second_out(out, v)) >= len(inn[v])}


def all_orientations(edges):
    for flips in itertools.product((0, 1), repeat=len(edges)):
        yield [(v, u) if f else (u, v) for (u, v), f in zip(edges, flips)]


def has_orientation_without(n, edges, pred):
    return any(not pred(n, arcs) for arcs in all_orientations(edges))


def two_paths_brute(n, arcs):
    arcset = set(arcs)
    return sum(1 for a in range(n) for b in range(n) for c in range(n)
               if (a, b) in arcset and (b, c) in arcset)


def reachable(n, arcs, s):
    out = out_sets(n, arcs)
    seen, stack = {s}, [s]
    while stack:
        for w in out[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def strongly_connected_brute(n, arcs):
    return all(len(reachable(n, arcs, s)) == n for s in range(n))


def hall_violator_exists(nbrs, X):
    """Some nonempty subset S of X with |N(S)| < |S|; ``nbrs[x]`` is a set."""
    X = sorted(X)
    for r in range(1, len(X) + 1):
        for S in itertools.combinations(X, r):
            if len(set().union(*(nbrs[x] for x in S))) < r:
                return True
    return False


def back_degrees(adj, order):
    pos = {v: i for i, v in enumerate(order)}
    return [sum(1 for w in adj[v] if pos[w] < pos[v]) for v in order]


def good_ordering_exists(n, adj, h_adj, h):
    """Brute force over all permutations: prefix induces H (as labelled by the
    prefix order) and position i > h (1-based) has back-degree >= i/2."""
    for order in itertools.permutations(range(n)):
        prefix = order[:h]
        if any((prefix[j] in adj[prefix[i]]) != (j in h_adj[i])
               for i in range(h) for j in range(h) if i != j):
            continue
        bd = back_degrees(adj, order)
        if all(bd[i - 1] >= i / 2 for i in range(h + 1, n + 1)):
            return True
    return False


def induced_copy_exists(n, adj, hn, h_adj):
    for phi in itertools.permutations(range(n), hn):
        if all((phi[j] in adj[phi[i]]) == (j in h_adj[i])
               for i in range(hn) for j in range(i + 1, hn)):
            return True
    return False


def mp_chernoff_upper(n, p, delta):
    mpmath.mp.dps = 50
    d = mpmath.mpf(delta)
    return (mpmath.e ** d / (1 + d) ** (1 + d)) ** (mpmath.mpf(n) * mpmath.mpf(p))


def mp_chernoff_two_sided(n, p, delta):
    mpmath.mp.dps = 50
    d = mpmath.mpf(delta)
    return 2 * mpmath.exp(-d * d * mpmath.mpf(n) * mpmath.mpf(p) / 3)


def rel_err(a, b):
    return abs(mpmath.mpf(a) - b) / abs(b)


def ceil_log(c, n):
    return math.ceil(c * math.log(n))
