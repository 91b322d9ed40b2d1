import itertools
import math

import mpmath
import numpy as np
import pytest

import oracles
from secondnbr.gnp import (ClaimParameters, ClaimVerdict, SamplerConfig, SuiteConfig,
                           check_common_neighbors_bound, check_cross_density_band,
                           check_degree_band, check_degree_upper, check_halfback_extension,
                           check_internal_density, chernoff_two_sided, chernoff_upper,
                           codegree_matrix, degree_preset, find_induced_copy,
                           iter_induced_copies, monte_carlo_sets, parse_suite_config,
                           random_orientation, run_claim_suite, sample_disjoint_sets, sample_gnp)
from secondnbr.graph import Graph
from secondnbr.io import FormatError
from secondnbr.rng import stream


def test_sampler_pair_order_matches_stream():
    cfg = SamplerConfig(6, 0.4, 9, 2)
    G = sample_gnp(cfg)
    draws = stream(9, 2, "gnp").random(15)
    expected = [pair for pair, u in zip(itertools.combinations(range(6), 2), draws) if u < 0.4]
    assert G.edges() == expected


def test_sampler_extremes_and_determinism():
    assert sample_gnp(SamplerConfig(5, 0.0, 1)).m == 0
    assert sample_gnp(SamplerConfig(5, 1.0, 1)) == Graph.complete(5)
    assert sample_gnp(SamplerConfig(40, 0.3, 4)) == sample_gnp(SamplerConfig(40, 0.3, 4))
    assert sample_gnp(SamplerConfig(40, 0.3, 4)) != sample_gnp(SamplerConfig(40, 0.3, 4, 1))


@pytest.mark.parametrize("kw", [dict(n=-1, p=0.5, seed=0), dict(n=3, p=1.5, seed=0),
                                dict(n=3, p=0.5, seed=-2)])
def test_sampler_config_validation(kw):
    with pytest.raises(ValueError):
        SamplerConfig(**kw)


def test_random_orientation_covers_graph():
    G = sample_gnp(SamplerConfig(30, 0.5, 1))
    D = random_orientation(G, 1)
    assert D.underlying() == G
    assert D == random_orientation(G, 1)


def test_chernoff_spec_examples():
    # (e / 4)^10 and 2 e^{-2.5}, checked against 50-digit evaluation
    got = chernoff_upper(100, 0.1, 1)
    assert oracles.rel_err(got, (mpmath.e / 4) ** 10) < 1e-13
    got = chernoff_two_sided(100, 0.3, 0.5)
    assert oracles.rel_err(got, 2 * mpmath.exp(-2.5)) < 1e-13


def test_chernoff_domains():
    with pytest.raises(ValueError):
        chernoff_two_sided(10, 0.5, 1.0)
    with pytest.raises(ValueError):
        chernoff_upper(10, 0.5, 0.0)
    with pytest.raises(ValueError):
        chernoff_upper(10, 1.5, 0.5)


def test_claim_parameters():
    s = ClaimParameters.seymour(0.3, 5)
    assert math.isclose(s.delta, 0.1) and math.isclose(s.c_large, 2 * 5 / 0.3)
    assert math.isclose(ClaimParameters.sullivan(0.3, 5).delta, 0.06)
    with pytest.raises(ValueError):
        ClaimParameters(1.0, 0.1, 1, 1)


def test_failing_verdict_needs_witness():
    with pytest.raises(ValueError):
        ClaimVerdict("x", False, 1.0)


def test_degree_band_witness_is_worst_vertex():
    G = Graph.star(4)  # centre degree 4, leaves 1
    v = check_degree_band(G, high=2, claim="hi")
    assert not v.passed and v.witness == 0 and v.value == 4
    v = check_degree_band(G, low=2, claim="lo")
    assert not v.passed and v.witness == 1 and v.value == 1
    assert check_degree_upper(Graph.cycle(10), 0.2).passed
    assert not check_degree_upper(Graph.complete(10), 0.2).passed


def test_degree_presets():
    G = Graph.complete(10)
    assert degree_preset(G, "degree-concentration", p=0.5, delta=0.1).passed is False
    assert degree_preset(G, "degree-concentration", p=1.0, delta=0.1).passed
    assert degree_preset(G, "min-degree-dense", epsilon=0.2).passed
    assert degree_preset(G, "max-degree-sparse", p=0.1).passed is False
    with pytest.raises(ValueError):
        degree_preset(G, "nope")


def test_cross_density():
    G = Graph.complete(6)
    v = check_cross_density_band(G, [0, 1], [2, 3, 4], "cross-concentration", p=1.0, delta=0.1)
    assert v.passed and v.value == 1.0
    v = check_cross_density_band(G, [0, 1], [2, 3], "cross-gap", p=0.5, delta=0.1, epsilon=0.2)
    assert not v.passed and v.witness == ([0, 1], [2, 3])
    v = check_cross_density_band(G, [0, 1], [2, 3], "cross-gap", p=0.5, delta=0.1, epsilon=0.2,
                                 side="lower")
    assert v.passed and v.claim == "cross-gap-lower"
    with pytest.raises(ValueError):
        check_cross_density_band(G, [0, 1], [1, 2], "cross-gap", p=0.5, delta=0.1, epsilon=0.2)
    with pytest.raises(ValueError):
        check_cross_density_band(G, [], [1, 2], "cross-gap", p=0.5, delta=0.1, epsilon=0.2)


def test_internal_density():
    G = Graph.complete(9)
    assert check_internal_density(G, [0, 1, 2], "internal-sparse-lower", p=0.5).value == 3.0
    with pytest.raises(ValueError):
        check_internal_density(G, [0, 1], "internal-sparse-lower", p=0.5)
    v = check_internal_density(G, [0, 1, 2, 3], "internal-concentration", p=1.0, delta=0.1)
    assert v.passed
    with pytest.raises(ValueError):
        check_internal_density(G, [0], "internal-concentration", p=1.0, delta=0.5)


def test_codegree_matches_brute_force():
    G = sample_gnp(SamplerConfig(25, 0.4, 3))
    cod = codegree_matrix(G)
    for u, v in itertools.combinations(range(25), 2):
        assert cod[u, v] == (G.neighbors(u) & G.neighbors(v)).__len__()
    verdict = check_common_neighbors_bound(G, 0.4)
    assert not verdict.passed
    best = max(len(G.neighbors(u) & G.neighbors(v)) for u, v in itertools.combinations(range(25), 2))
    assert verdict.value == best
    u, v = verdict.witness
    assert len(G.neighbors(u) & G.neighbors(v)) == best


def test_codegree_sparse_path_agrees():
    G = sample_gnp(SamplerConfig(4500, 0.001, 1))
    cod = codegree_matrix(G)
    assert hasattr(cod, "tocoo")  # large sparse graphs take the scipy.sparse route
    rng = np.random.default_rng(0)
    for u, v in rng.integers(0, 4500, size=(200, 2)):
        if u != v:
            assert cod[u, v] == len(G.neighbors(int(u)) & G.neighbors(int(v)))
    verdict = check_common_neighbors_bound(G, 0.001, threshold_divisor=10)
    u, v = verdict.witness
    assert verdict.value == len(G.neighbors(u) & G.neighbors(v)) >= 1


def test_halfback_extension():
    G = Graph.path(4)
    assert check_halfback_extension(G, [0, 1]) == (True, 2)
    assert check_halfback_extension(Graph.cycle(4), [0, 2]) == (True, 1)
    assert check_halfback_extension(Graph.empty(3), [0]) == (False, None)
    with pytest.raises(ValueError):
        check_halfback_extension(G, [0, 1, 2, 3])


def test_induced_copy_examples():
    assert find_induced_copy(Graph.complete(4), Graph.complete(3)) == [0, 1, 2]
    phi = find_induced_copy(Graph.cycle(5), Graph.path(3))
    assert phi is not None
    C5 = Graph.cycle(5)
    assert C5.has_edge(phi[0], phi[1]) and C5.has_edge(phi[1], phi[2]) and not C5.has_edge(phi[0], phi[2])
    assert find_induced_copy(Graph.cycle(4), Graph.complete(3)) is None


def test_induced_copies_match_brute_force():
    rng = np.random.default_rng(8)
    for _ in range(40):
        n = int(rng.integers(3, 7))
        G = Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5])
        hn = int(rng.integers(1, 4))
        H = Graph.from_edges(hn, [e for e in itertools.combinations(range(hn), 2) if rng.random() < 0.5])
        adj = {v: set(G.neighbors(v)) for v in range(n)}
        h_adj = {v: set(H.neighbors(v)) for v in range(hn)}
        copies = list(iter_induced_copies(G, H))
        assert (len(copies) > 0) == oracles.induced_copy_exists(n, adj, hn, h_adj)
        assert copies == sorted(copies)


def test_disjoint_sets_and_monte_carlo():
    rng = stream(1, 0, "t")
    A, B = sample_disjoint_sets(20, (5, 7), rng)
    assert len(A) == 5 and len(B) == 7 and A.isdisjoint(B)
    with pytest.raises(ValueError):
        sample_disjoint_sets(5, (3, 3), rng)
    G = Graph.complete(20)
    res = monte_carlo_sets(G, lambda g, a, b: check_cross_density_band(
        g, a, b, "cross-concentration", p=1.0, delta=0.1), (4, 4), 10, rng)
    assert res.passes == res.samples == 10 and res.rate == 1.0 and res.first_failure is None


def test_suite_config_parse():
    cfg = parse_suite_config("n=50\np=0.3 # dense\nseed=4\nC=2\npresets=degree-upper, cross-gap-lower\n")
    assert cfg.n == 50 and cfg.c_small == 2.0 and cfg.presets == ["degree-upper", "cross-gap-lower"]
    with pytest.raises(FormatError) as exc:
        parse_suite_config("n=5\np=0.1\nseed=1\nbogus=3\n", "s.cfg")
    assert exc.value.line == 4
    with pytest.raises(FormatError):
        parse_suite_config("n=5\n")
    with pytest.raises(FormatError):
        parse_suite_config("n=5\np=0.1\nseed=1\npresets=what\n")


def test_claim_suite_records():
    cfg = SuiteConfig(n=60, p=0.3, seed=2, trials=2, c_small=1.0,
                      presets=["degree-upper", "cross-gap-lower", "codegree",
                               "internal-concentration", "halfback-extension"], sets=5)
    recs = list(run_claim_suite(cfg))
    assert [(r["trial"], r["claim"]) for r in recs] == [(t, c) for t in range(2) for c in cfg.presets]
    assert recs == list(run_claim_suite(cfg))
    for r in recs:
        assert r["pass"] or r["witness"] is not None


def test_cross_presets_need_c():
    with pytest.raises(ValueError):
        list(run_claim_suite(SuiteConfig(n=10, p=0.3, seed=1, presets=["cross-gap"])))
