import itertools
import os
import subprocess
import sys

import numpy as np
import pytest

import oracles
from secondnbr import _kernels
from secondnbr._backend import ENV_FLAG, HAVE_NUMBA
from secondnbr.graph import Graph

needs_numba = pytest.mark.skipif(not HAVE_NUMBA, reason="numba disabled")


def _oracle_count(n, edges, pred):
    bad, first = 0, -1
    for code, flips in enumerate(itertools.product((0, 1), repeat=len(edges))):
        # product is big-endian over edges; recompute the little-endian code
        code = sum(f << i for i, f in enumerate(flips))
        arcs = [(v, u) if f else (u, v) for (u, v), f in zip(edges, flips)]
        if not pred(n, arcs):
            bad += 1
            first = code if first < 0 else min(first, code)
    return bad, first


def _random_graph(rng, n, p):
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


@pytest.mark.parametrize("backend", [pytest.param("numba", marks=needs_numba), "numpy"])
def test_batch_counts_match_oracle(backend):
    rng = np.random.default_rng(11)
    for _ in range(25):
        G = _random_graph(rng, int(rng.integers(2, 6)), 0.6)
        edges = G.edges()
        for sullivan, slack, pred in [(False, 0, oracles.seymour), (True, 0, oracles.sullivan)]:
            got = _kernels.count_orientations_without(G.n, edges, sullivan, backend=backend)
            assert got == (0, -1)
        strict = lambda n, arcs: {v for v in range(n)
                                  if len(oracles.second_out(oracles.out_sets(n, arcs), v))
                                  >= len(oracles.out_sets(n, arcs)[v]) + 1}
        got = _kernels.count_orientations_without(G.n, edges, False, backend=backend, slack=1)
        assert got == _oracle_count(G.n, edges, strict)


@needs_numba
def test_batch_backends_agree_on_ranges():
    G = Graph.complete(5)
    edges = G.edges()
    for start, stop in [(0, 1024), (100, 357), (1000, 1024)]:
        a = _kernels.count_orientations_without(5, edges, False, start, stop, "numba", slack=1)
        b = _kernels.count_orientations_without(5, edges, False, start, stop, "numpy", slack=1)
        assert a == b


@needs_numba
@pytest.mark.parametrize("prune", [True, False])
@pytest.mark.parametrize("slack", [0, 1])
def test_search_backends_agree(prune, slack):
    rng = np.random.default_rng(3)
    for _ in range(20):
        G = _random_graph(rng, int(rng.integers(3, 8)), 0.5)
        edges = G.edges()
        if not edges:
            continue
        k = min(len(edges), 2)
        for prefix in range(1 << k):
            args = (G.n, edges, G.degrees(), prefix, k, False, prune, 0)
            a = _kernels.search_subtree(*args, backend="numba", slack=slack)
            b = _kernels.search_subtree(*args, backend="python", slack=slack)
            assert a[:4] == b[:4]
            assert (a[4] is None) == (b[4] is None)
            if a[4] is not None:
                assert list(a[4]) == list(b[4])


def test_search_node_budget():
    G = Graph.complete(5)
    status, nodes, *_ = _kernels.search_subtree(5, G.edges(), G.degrees(), 0, 0, prune=False,
                                                node_budget=10, backend="python")
    assert status == _kernels.BUDGET
    assert nodes <= 11


def test_env_flag_forces_numpy():
    env = dict(os.environ, **{ENV_FLAG: "1"})
    out = subprocess.run([sys.executable, "-c", "import secondnbr; print(secondnbr.backend_name())"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"


def test_large_n_rejected_by_word_kernels():
    with pytest.raises(ValueError):
        _kernels.count_orientations_without(65, [(0, 1)])
