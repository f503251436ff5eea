import math
import statistics

import pytest

from trisample import (
    DoulionEstimator,
    EdgeEvent,
    Graph,
    TriestEstimator,
    dynamic_edge_deletion_stream,
    er_graph,
    exact_triangles,
    permutation_stream,
)

from helpers import complete_graph_edges


def drive(est, events):
    for ev in events:
        est.process(ev)
    return est


def test_doulion_validation():
    with pytest.raises(ValueError):
        DoulionEstimator(-0.1)
    with pytest.raises(ValueError):
        DoulionEstimator(1.1)


def test_doulion_p_one_mirrors_graph_exactly():
    base = er_graph(30, 0.3, seed=1)
    events = dynamic_edge_deletion_stream(list(base.edges()), p_e=0.05, p_d=0.3, seed=2)
    est = drive(DoulionEstimator(1.0, seed=3), events)
    g = Graph()
    for ev in events:
        if ev.beta == 1:
            g.add_edge(ev.u, ev.v)
        else:
            g.delete_edge(ev.u, ev.v)
    assert est.sample == g
    assert est.estimate() == exact_triangles(g)


def test_doulion_p_zero_always_zero():
    events = permutation_stream(complete_graph_edges(5), seed=4)
    est = drive(DoulionEstimator(0.0, seed=5), events)
    assert est.estimate() == 0.0
    assert est.edges_sampled == 0


def test_doulion_triangle_stream_unbiased():
    events_base = complete_graph_edges(3)
    finals = []
    n = 10_000
    for seed in range(n):
        est = drive(DoulionEstimator(0.5, seed=seed), permutation_stream(events_base, seed=seed))
        finals.append(est.estimate())
    mean = statistics.fmean(finals)
    se = statistics.stdev(finals) / math.sqrt(n)
    assert abs(mean - 1.0) <= 3 * se


def test_doulion_incremental_count_matches_recount():
    base = er_graph(40, 0.3, seed=6)
    events = dynamic_edge_deletion_stream(list(base.edges()), p_e=0.05, p_d=0.25, seed=7)
    est = DoulionEstimator(0.6, seed=8)
    for i, ev in enumerate(events, start=1):
        est.process(ev)
        if i % 1000 == 0 or i == len(events):
            assert est.tri_in_sample == exact_triangles(est.sample)


def test_doulion_deletion_of_unsampled_edge_noop():
    est = DoulionEstimator(0.0, seed=9)
    est.process(EdgeEvent(1, 2, 1))
    est.process(EdgeEvent(1, 2, -1))
    est.process(EdgeEvent(3, 4, -1))
    assert est.tri_in_sample == 0
    assert est.sample.edge_count == 0


def test_triest_validation():
    with pytest.raises(ValueError):
        TriestEstimator(0)


def test_triest_capacity_covers_stream_is_exact():
    base = er_graph(25, 0.4, seed=10)
    edges = list(base.edges())
    events = permutation_stream(edges, seed=11)
    est = drive(TriestEstimator(len(edges), seed=12), events)
    assert est.edges_sampled == len(edges)
    assert est.estimate() == exact_triangles(base)


def test_triest_capacity_covers_dynamic_stream_is_exact():
    base = er_graph(25, 0.4, seed=13)
    events = dynamic_edge_deletion_stream(list(base.edges()), p_e=0.05, p_d=0.3, seed=14)
    est = drive(TriestEstimator(len(list(base.edges())), seed=15), events)
    g = Graph()
    for ev in events:
        if ev.beta == 1:
            g.add_edge(ev.u, ev.v)
        else:
            g.delete_edge(ev.u, ev.v)
    assert est.estimate() == exact_triangles(g)
    assert est.sample == g


def test_triest_capacity_one_never_counts():
    events = permutation_stream(complete_graph_edges(6), seed=16)
    est = drive(TriestEstimator(1, seed=17), events)
    assert est.tau == 0
    assert est.estimate() == 0.0


def test_triest_reduces_to_classic_reservoir_without_deletions():
    # every prefix edge should sit in the reservoir with equal probability
    edges = [(0, i) for i in range(1, 21)]  # star: no triangles, pure sampling
    events = [EdgeEvent(u, v, 1) for u, v in edges]
    m = 5
    counts = {e: 0 for e in edges}
    n = 10_000
    for seed in range(n):
        est = drive(TriestEstimator(m, seed=seed), events)
        for e in est._edges:
            counts[e] += 1
    expected = n * m / len(edges)
    sigma = math.sqrt(n * (m / len(edges)) * (1 - m / len(edges)))
    for e, c in counts.items():
        assert abs(c - expected) <= 4 * sigma, (e, c)


def test_triest_unbiased_on_addition_stream():
    base = er_graph(22, 0.45, seed=18)
    edges = list(base.edges())
    truth = exact_triangles(base)
    m = math.ceil(len(edges) / 2)
    finals = []
    n = 4000
    for seed in range(n):
        est = drive(TriestEstimator(m, seed=seed), permutation_stream(edges, seed=seed + n))
        finals.append(est.estimate())
    mean = statistics.fmean(finals)
    se = statistics.stdev(finals) / math.sqrt(n)
    assert abs(mean - truth) <= 3 * se


def test_triest_tau_matches_sample_recount_on_dynamic_stream():
    base = er_graph(40, 0.3, seed=19)
    events = dynamic_edge_deletion_stream(list(base.edges()), p_e=0.05, p_d=0.25, seed=20)
    est = TriestEstimator(60, seed=21)
    for i, ev in enumerate(events, start=1):
        est.process(ev)
        if i % 1000 == 0 or i == len(events):
            assert est.tau == exact_triangles(est.sample)
            assert est.edges_sampled <= 60


def test_triest_estimate_scaling_formula():
    est = TriestEstimator(5, seed=22)
    for u, v in complete_graph_edges(5):  # 10 edges through a size-5 reservoir
        est.process(EdgeEvent(u, v, 1))
    s = est.live_edges
    assert s == 10
    rho = (s * (s - 1) * (s - 2)) / (5 * 4 * 3)
    assert est.estimate() == pytest.approx(est.tau * rho)


def test_triest_deletion_of_absent_edge_noop():
    est = TriestEstimator(4, seed=23)
    est.process(EdgeEvent(1, 2, 1))
    before = (est.tau, est.c_bad, est.c_good, est.edges_sampled)
    est.process(EdgeEvent(8, 9, -1))
    assert (est.tau, est.c_bad, est.c_good, est.edges_sampled) == before


def test_triest_random_pairing_counters_stay_nonnegative():
    base = er_graph(20, 0.5, seed=25)
    events = dynamic_edge_deletion_stream(list(base.edges()), p_e=0.3, p_d=0.4, seed=26)
    est = TriestEstimator(10, seed=27)
    for ev in events:
        est.process(ev)
        assert est.c_bad >= 0 and est.c_good >= 0
        assert est.edges_sampled <= 10
