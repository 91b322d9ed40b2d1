"""Hot loops of the orientation search.

Two kernels, each with a numba implementation and a fallback:

* ``count_orientations_without`` scans a range of orientation codes of a
  fixed edge list and counts orientations with no qualifying vertex. The
  fallback is vectorised numpy over chunks of codes.
* ``search_subtree`` runs the depth-first search over edge directions below
  a fixed prefix, with optional pruning. The fallback uses Python ints.

Orientation codes: bit ``i`` set means edge ``(eu[i], ev[i])`` is oriented
``ev[i] -> eu[i]``, clear means ``eu[i] -> ev[i]``. Numba and numpy paths
use ``uint64`` bitsets and need ``n <= 64``.

``slack`` raises the bar to ``|N2| >= |ref| + slack``; 0 gives the real
predicates, 1 a strict variant used to exercise the counterexample path.

Search status codes: 0 all orientations have a qualifying vertex, 1 an
orientation without one was found, 2 node budget exhausted.
"""

from __future__ import annotations

import numpy as np

from ._backend import HAVE_NUMBA

ALL_HAVE, FOUND, BUDGET = 0, 1, 2
WORD_BITS = 64


# -- numba -------------------------------------------------------------------

if HAVE_NUMBA:
    from numba import njit

    _ONE = np.uint64(1)

    @njit(cache=True, nogil=True)
    def _popcount_nb(x):
        x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
        x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
        x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
        return np.int64((x * np.uint64(0x0101010101010101)) >> np.uint64(56))

    @njit(cache=True, nogil=True)
    def _forced_nb(n, out, inn, dec, deg, sullivan, slack):
        # True when some fully-decided vertex already qualifies; its N1 / N-
        # are final and its known N2 can only grow.
        for v in range(n):
            if dec[v] != deg[v]:
                continue
            n1 = out[v]
            reach = np.uint64(0)
            for u in range(n):
                if (n1 >> np.uint64(u)) & _ONE:
                    reach |= out[u]
            n2 = reach & ~n1 & ~(_ONE << np.uint64(v))
            ref = inn[v] if sullivan else n1
            if _popcount_nb(n2) >= _popcount_nb(ref) + slack:
                return True
        return False

    @njit(cache=True, nogil=True)
    def _flip_nb(out, inn, dec, a, b, backward, sign):
        if backward:
            a, b = b, a
        out[a] ^= _ONE << np.uint64(b)
        inn[b] ^= _ONE << np.uint64(a)
        dec[a] += sign
        dec[b] += sign

    @njit(cache=True, nogil=True)
    def _batch_nb(n, eu, ev, start, stop, sullivan, slack):
        m = eu.shape[0]
        out = np.zeros(n, np.uint64)
        inn = np.zeros(n, np.uint64)
        dec = np.zeros(n, np.int64)
        bad = 0
        first = -1
        for code in range(start, stop):
            for v in range(n):
                out[v] = 0
                inn[v] = 0
            for i in range(m):
                a = eu[i]
                b = ev[i]
                if (code >> i) & 1:
                    a, b = b, a
                out[a] |= _ONE << np.uint64(b)
                inn[b] |= _ONE << np.uint64(a)
            # dec == deg everywhere, so the check is exact
            if not _forced_nb(n, out, inn, dec, dec, sullivan, slack):
                bad += 1
                if first < 0:
                    first = code
        return bad, first

    @njit(cache=True, nogil=True)
    def _dfs_nb(n, eu, ev, deg, prefix, k, sullivan, slack, prune, node_budget, witness):
        m = eu.shape[0]
        out = np.zeros(n, np.uint64)
        inn = np.zeros(n, np.uint64)
        dec = np.zeros(n, np.int64)
        dirs = np.zeros(m, np.int8)
        for i in range(k):
            d = (prefix >> i) & 1
            dirs[i] = d
            _flip_nb(out, inn, dec, eu[i], ev[i], d, 1)
        nodes = 0
        leaves = 0
        pruned = 0
        status = 0
        depth = k
        while True:
            if node_budget > 0 and nodes >= node_budget:
                status = 2
                break
            nodes += 1
            if depth == m:
                leaves += 1
                if not _forced_nb(n, out, inn, dec, deg, sullivan, slack):
                    status = 1
                    for i in range(m):
                        witness[i] = dirs[i]
                    break
            elif prune and _forced_nb(n, out, inn, dec, deg, sullivan, slack):
                pruned += 1
            else:
                dirs[depth] = 0
                _flip_nb(out, inn, dec, eu[depth], ev[depth], 0, 1)
                depth += 1
                continue
            advanced = False
            while depth > k:
                depth -= 1
                _flip_nb(out, inn, dec, eu[depth], ev[depth], dirs[depth], -1)
                if dirs[depth] == 0:
                    dirs[depth] = 1
                    _flip_nb(out, inn, dec, eu[depth], ev[depth], 1, 1)
                    depth += 1
                    advanced = True
                    break
            if not advanced:
                break
        return status, nodes, leaves, pruned


# -- numpy / Python fallbacks -------------------------------------------------

def _batch_np(n, eu, ev, start, stop, sullivan, slack, chunk=1 << 15):
    bad = 0
    first = -1
    zero = np.uint64(0)
    for lo in range(start, stop, chunk):
        codes = np.arange(lo, min(stop, lo + chunk), dtype=np.uint64)
        out = np.zeros((n, codes.size), np.uint64)
        inn = np.zeros((n, codes.size), np.uint64) if sullivan else None
        for i, (a, b) in enumerate(zip(eu.tolist(), ev.tolist())):
            back = ((codes >> np.uint64(i)) & np.uint64(1)).astype(bool)
            bit_a, bit_b = np.uint64(1 << a), np.uint64(1 << b)
            out[a] |= np.where(back, zero, bit_b)
            out[b] |= np.where(back, bit_a, zero)
            if sullivan:
                inn[b] |= np.where(back, zero, bit_a)
                inn[a] |= np.where(back, bit_b, zero)
        qualifies = np.zeros(codes.size, bool)
        for v in range(n):
            n1 = out[v]
            reach = np.zeros(codes.size, np.uint64)
            for u in range(n):
                has = ((n1 >> np.uint64(u)) & np.uint64(1)).astype(bool)
                reach |= np.where(has, out[u], zero)
            n2 = reach & ~n1 & ~np.uint64(1 << v)
            ref = inn[v] if sullivan else n1
            qualifies |= np.bitwise_count(n2).astype(np.int64) >= np.bitwise_count(ref).astype(np.int64) + slack
        missing = np.flatnonzero(~qualifies)
        if missing.size:
            if first < 0:
                first = int(codes[missing[0]])
            bad += int(missing.size)
    return bad, first


def _forced_py(n, out, inn, dec, deg, sullivan, slack):
    for v in range(n):
        if dec[v] != deg[v]:
            continue
        n1 = out[v]
        reach = 0
        x = n1
        while x:
            low = x & -x
            reach |= out[low.bit_length() - 1]
            x ^= low
        n2 = reach & ~n1 & ~(1 << v)
        ref = inn[v] if sullivan else n1
        if n2.bit_count() >= ref.bit_count() + slack:
            return True
    return False


def _dfs_py(n, eu, ev, deg, prefix, k, sullivan, slack, prune, node_budget, witness):
    m = len(eu)
    out = [0] * n
    inn = [0] * n
    dec = [0] * n
    dirs = [0] * m

    def flip(i, backward, sign):
        a, b = (ev[i], eu[i]) if backward else (eu[i], ev[i])
        out[a] ^= 1 << b
        inn[b] ^= 1 << a
        dec[a] += sign
        dec[b] += sign

    for i in range(k):
        dirs[i] = (prefix >> i) & 1
        flip(i, dirs[i], 1)
    nodes = leaves = pruned = 0
    status = ALL_HAVE
    depth = k
    while True:
        if node_budget > 0 and nodes >= node_budget:
            status = BUDGET
            break
        nodes += 1
        if depth == m:
            leaves += 1
            if not _forced_py(n, out, inn, dec, deg, sullivan, slack):
                status = FOUND
                witness[:] = dirs
                break
        elif prune and _forced_py(n, out, inn, dec, deg, sullivan, slack):
            pruned += 1
        else:
            dirs[depth] = 0
            flip(depth, 0, 1)
            depth += 1
            continue
        advanced = False
        while depth > k:
            depth -= 1
            flip(depth, dirs[depth], -1)
            if dirs[depth] == 0:
                dirs[depth] = 1
                flip(depth, 1, 1)
                depth += 1
                advanced = True
                break
        if not advanced:
            break
    return status, nodes, leaves, pruned


# -- dispatch -----------------------------------------------------------------

def _edge_arrays(edges):
    eu = np.array([e[0] for e in edges], dtype=np.int64)
    ev = np.array([e[1] for e in edges], dtype=np.int64)
    return eu, ev


def count_orientations_without(n, edges, sullivan=False, start=0, stop=None, backend=None,
                               slack=0):
    """Count orientation codes in ``[start, stop)`` with no qualifying vertex.

    Returns ``(count, first_code)``; ``first_code`` is -1 when none.
    """
    if n > WORD_BITS:
        raise ValueError(f"batch kernel needs n <= {WORD_BITS}")
    m = len(edges)
    if m >= 63:
        raise ValueError("too many edges for an orientation code")
    if stop is None:
        stop = 1 << m
    eu, ev = _edge_arrays(edges)
    backend = backend or ("numba" if HAVE_NUMBA else "numpy")
    if backend == "numba":
        bad, first = _batch_nb(n, eu, ev, start, stop, bool(sullivan), slack)
        return int(bad), int(first)
    return _batch_np(n, eu, ev, start, stop, bool(sullivan), slack)


def search_subtree(n, edges, degrees, prefix, k, sullivan=False, prune=True,
                   node_budget=0, backend=None, slack=0):
    """Depth-first search below the first ``k`` directions given by ``prefix``.

    Returns ``(status, nodes, leaves, pruned, witness_dirs)``; ``witness_dirs``
    is a list of 0/1 per edge when ``status == FOUND`` and otherwise None.
    """
    m = len(edges)
    if backend is None:
        backend = "numba" if HAVE_NUMBA and n <= WORD_BITS else "python"
    if backend == "numba":
        eu, ev = _edge_arrays(edges)
        witness = np.zeros(m, np.int8)
        status, nodes, leaves, pruned = _dfs_nb(
            n, eu, ev, np.asarray(degrees, dtype=np.int64), prefix, k,
            bool(sullivan), slack, bool(prune), node_budget, witness)
        w = [int(x) for x in witness] if status == FOUND else None
        return int(status), int(nodes), int(leaves), int(pruned), w
    eu = [e[0] for e in edges]
    ev = [e[1] for e in edges]
    witness = [0] * m
    status, nodes, leaves, pruned = _dfs_py(
        n, eu, ev, list(degrees), prefix, k, bool(sullivan), slack, bool(prune), node_budget, witness)
    return status, nodes, leaves, pruned, (witness if status == FOUND else None)
