import itertools

from hypothesis import given, settings, strategies as st

import oracles
from secondnbr.constructions import blow_up, find_hall_violator, peel
from secondnbr.gnp import SamplerConfig, random_orientation, sample_gnp
from secondnbr.graph import (Digraph, Graph, directed_edge_count, directed_two_path_count,
                             min_out_degree, seymour_vertices, strongly_connected,
                             sullivan_vertices)
from secondnbr.io import format_digraph, format_graph, parse_digraph, parse_graph
from secondnbr.search import SearchConfig, enumerate_orientations


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, c in zip(pairs, chosen) if c])


@st.composite
def digraphs(draw, max_n=8, min_n=0):
    G = draw(graphs(max_n))
    if G.n < min_n:
        G = Graph.empty(min_n)
    flips = draw(st.lists(st.booleans(), min_size=G.m, max_size=G.m))
    return Digraph.from_arcs(G.n, [(v, u) if f else (u, v) for (u, v), f in zip(G.edges(), flips)])


@given(graphs())
def test_graph_text_roundtrip(G):
    assert parse_graph(format_graph(G)) == G


@given(digraphs())
def test_digraph_text_roundtrip(D):
    assert parse_digraph(format_digraph(D)) == D


@given(digraphs())
def test_predicates_agree_with_oracle(D):
    arcs = D.arcs()
    assert seymour_vertices(D) == oracles.seymour(D.n, arcs)
    assert sullivan_vertices(D) == oracles.sullivan(D.n, arcs)


@given(digraphs())
def test_two_path_double_count(D):
    brute = oracles.two_paths_brute(D.n, D.arcs())
    assert directed_two_path_count(D, "by-middle") == directed_two_path_count(D, "by-endpoints") == brute


@given(digraphs())
def test_strong_connectivity_oracle(D):
    assert strongly_connected(D) == (D.n <= 1 or oracles.strongly_connected_brute(D.n, D.arcs()))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6), st.sampled_from(["seymour", "sullivan", "seymour-strict"]))
def test_pruning_does_not_change_verdict(G, predicate):
    a = enumerate_orientations(G, predicate, SearchConfig(prune=True, threads=1))
    b = enumerate_orientations(G, predicate, SearchConfig(prune=False, threads=1))
    assert a.verdict == b.verdict
    if b.verdict == "all-have":  # a found witness stops the walk early
        assert b.leaves == 2 ** G.m


@settings(deadline=None)
@given(digraphs(max_n=5, min_n=1), st.integers(3, 5))
def test_blow_up_invariants(D0, copies):
    D = blow_up(D0, copies)
    assert strongly_connected(D)
    assert min_out_degree(D)[0] == min_out_degree(D0)[0] + D0.n
    base = seymour_vertices(D0)
    assert seymour_vertices(D) == {v for v in range(D.n) if v % D0.n in base}


@given(digraphs(max_n=9, min_n=1))
def test_peeling_keeps_a_and_b_apart(D):
    state = peel(D)
    xs = [len(s.X) for s in state.steps]
    assert all(a > b for a, b in zip(xs, xs[1:]))
    assert all(directed_edge_count(D, s.A, s.B) == 0 for s in state.steps)


@given(st.integers(1, 6), st.integers(0, 6), st.data())
def test_violator_oracle(nx, nb, data):
    pairs = [(x, nx + b) for x in range(nx) for b in range(nb)]
    chosen = data.draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    arcs = [e for e, c in zip(pairs, chosen) if c]
    D = Digraph.from_arcs(nx + nb, arcs)
    nbrs = {x: {w for u, w in arcs if u == x} for x in range(nx)}
    viol = find_hall_violator(D, range(nx), range(nx, nx + nb))
    assert (viol is not None) == oracles.hall_violator_exists(nbrs, range(nx))


@given(st.integers(0, 30), st.floats(0, 1), st.integers(0, 2**64 - 1), st.integers(0, 5))
def test_sampling_is_a_pure_function_of_config(n, p, seed, trial):
    cfg = SamplerConfig(n, p, seed, trial)
    G = sample_gnp(cfg)
    assert G == sample_gnp(cfg)
    assert random_orientation(G, seed, trial).underlying() == G
