"""Synthetic graphs: Erdős–Rényi seeds and preferential-attachment growth."""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .oracle import exact_triangles
from .seeding import derive_seed


@dataclass(frozen=True)
class BaConfig:
    """Growth recipe: an ER seed graph, then one node per step attaching
    ``edges_per_new_node`` distinct edges, target picked with probability
    proportional to degree**gamma."""

    n_total: int
    seed_nodes: int
    seed_edge_prob: float
    edges_per_new_node: int
    gamma: float
    seed: int = 0

    def __post_init__(self):
        if self.edges_per_new_node < 1:
            raise ValueError("edges_per_new_node must be >= 1")
        if self.seed_nodes < self.edges_per_new_node:
            raise ValueError("seed graph smaller than the per-node attachment count")
        if self.n_total < self.seed_nodes:
            raise ValueError("n_total must be >= seed_nodes")
        if not 0.0 <= self.seed_edge_prob <= 1.0:
            raise ValueError(f"seed_edge_prob must be in [0, 1], got {self.seed_edge_prob}")
        if self.gamma < 0.0:
            raise ValueError(f"gamma must be non-negative, got {self.gamma}")


# Desk-scale reference recipes for the six study graphs; the per-node
# attachment counts are inferred from (|E| - seed edges) / (|V| - 100).
BA_PRESETS = {
    "ba1": BaConfig(20000, 100, 0.1, 10, 1.5),
    "ba2": BaConfig(20000, 100, 0.1, 20, 1.5),
    "ba3": BaConfig(20000, 100, 0.1, 50, 1.5),
    "ba4": BaConfig(20000, 100, 0.1, 74, 1.0),
    "ba5": BaConfig(20000, 100, 0.1, 38, 1.5),
    "ba6": BaConfig(20000, 100, 0.1, 30, 2.0),
}


def er_graph(n: int, edge_prob: float, seed: int) -> Graph:
    """G(n, p): nodes 0..n-1, every unordered pair present independently
    with probability ``edge_prob``.  O(n^2) draws, intended for seeds and
    test corpora rather than huge graphs."""
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError(f"edge_prob must be in [0, 1], got {edge_prob}")
    rng = random.Random(seed)
    g = Graph()
    for u in range(n):
        g.add_node(u)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < edge_prob:
                g.add_edge(u, v)
    return g


def _pick_from_cum(cum: np.ndarray, rng) -> int:
    """Index drawn via cumulative-weight inversion; zero-weight entries are
    never selected."""
    r = rng.random() * cum[-1]
    idx = int(np.searchsorted(cum, r, side="right"))
    if idx == len(cum):  # float rounding pushed r onto the total
        idx -= 1
        while idx > 0 and cum[idx] == cum[idx - 1]:
            idx -= 1
    return idx


def weighted_choice(weights, rng) -> int:
    """Index drawn with probability proportional to its non-negative weight
    (cumulative-weight inversion)."""
    cum = np.cumsum(np.asarray(weights, dtype=float))
    if len(cum) == 0 or cum[-1] <= 0.0:
        raise ValueError("total weight must be positive")
    return _pick_from_cum(cum, rng)


def _attachment_targets(degrees: np.ndarray, gamma: float, k: int, rng) -> list[int]:
    """Pick ``k`` distinct indices with probability proportional to
    degree**gamma, weights frozen for the whole batch.

    Rejection on within-batch repeats keeps each pick exactly proportional
    among the not-yet-picked; if rejection stalls (weight concentrated on
    picked nodes) the cumulative weights are rebuilt without them.  When
    every remaining weight is zero the pick falls back to uniform.
    """
    m = len(degrees)
    if m < k:
        raise ValueError(f"cannot attach {k} edges among {m} existing nodes")
    w = np.power(degrees, gamma)  # 0**0 == 1, so gamma=0 is uniform
    cum = np.cumsum(w)
    total = float(cum[-1])
    picked: list[int] = []
    chosen: set[int] = set()
    attempts_left = 200 * k + 200
    while len(picked) < k:
        if total <= 0.0:
            idx = rng.randrange(m)
            if idx in chosen:
                continue
        else:
            if attempts_left <= 0:
                w[list(chosen)] = 0.0
                cum = np.cumsum(w)
                total = float(cum[-1])
                attempts_left = 200 * k + 200
                continue
            idx = _pick_from_cum(cum, rng)
            attempts_left -= 1
            if idx in chosen:
                continue
        picked.append(int(idx))
        chosen.add(int(idx))
    return picked


def ba_graph(cfg: BaConfig) -> Graph:
    """Grow a preferential-attachment graph from an ER seed.

    Selection weights are the existing degrees (frozen at each batch start)
    raised to ``cfg.gamma``; a new node's targets are distinct, so the
    result is simple with exactly seed edges plus
    (n_total - seed_nodes) * edges_per_new_node grown edges.
    """
    g = er_graph(cfg.seed_nodes, cfg.seed_edge_prob, derive_seed(cfg.seed, "er-seed"))
    rng = random.Random(derive_seed(cfg.seed, "attach"))
    k = cfg.edges_per_new_node
    degrees = np.zeros(cfg.n_total, dtype=np.float64)
    for u in range(cfg.seed_nodes):
        degrees[u] = g.degree(u)
    for new in range(cfg.seed_nodes, cfg.n_total):
        targets = _attachment_targets(degrees[:new], cfg.gamma, k, rng)
        g.add_node(new)
        for t in targets:
            g.add_edge(new, t)
        degrees[targets] += 1.0
        degrees[new] = float(k)
    return g


@dataclass(frozen=True)
class GraphStats:
    nodes: int
    edges: int
    triangles: int
    clustering: float


def graph_stats(g: Graph) -> GraphStats:
    """Node/edge/triangle counts plus the global clustering coefficient
    3 * triangles / wedges, where wedges = sum over nodes of C(d, 2)."""
    tri = exact_triangles(g)
    wedges = 0
    for u in g.nodes():
        d = g.degree(u)
        wedges += d * (d - 1) // 2
    eta = 3.0 * tri / wedges if wedges else 0.0
    return GraphStats(g.node_count, g.edge_count, tri, eta)
