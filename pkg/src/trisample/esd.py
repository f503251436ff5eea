"""Per-event edge-sampling estimator of the global triangle count.

Each stream event is inspected with probability ``alpha`` after its effect
has been applied to the graph store.  For a sampled edge, both endpoint
neighborhoods are probed for a node closing a triangle, and the running
estimate moves by the inverse of the probability of the observed
(edge, node) tuple, weighted because the same triangle is observable from
both endpoints.  Sampled edges are discarded immediately: the estimator
holds no subgraph, needs O(d) transient space for the neighborhood it
inspects, and costs O(log d) per sampled edge.
"""

from __future__ import annotations

import random

OMEGA_DYNAMIC = 0.5  # a new triangle is observable via 2 tuples of its closing edge
OMEGA_STATIC = 1.0 / 6.0  # full-edge streams expose all 3 edges, 2 tuples each


class EsdEstimator:
    """Running triangle estimate over a fully dynamic edge stream.

    ``alpha`` is fixed at construction (the inverse-probability scale
    factors assume it never changes).  ``mode`` is "dynamic" for add/delete
    streams or "static" for a one-pass random-order stream over a fixed
    graph's edges.  One ``rng.random()`` coin is drawn per event and each
    neighbor probe consumes exactly one ``rng.randrange()`` value, so runs
    replay deterministically from the seed.
    """

    def __init__(self, alpha: float, mode: str = "dynamic", seed: int = 0, rng=None):
        if not 0.0 < alpha <= 1.0:
            raise ValueError(f"alpha must be in (0, 1], got {alpha}")
        if mode not in ("dynamic", "static"):
            raise ValueError(f"mode must be 'dynamic' or 'static', got {mode!r}")
        self._alpha = alpha
        self.mode = mode
        self.omega = OMEGA_DYNAMIC if mode == "dynamic" else OMEGA_STATIC
        self.t_est = 0.0
        self.rng = rng if rng is not None else random.Random(seed)
        self.edges_sampled = 0

    @property
    def alpha(self) -> float:
        """Sampling fraction; read-only because mid-stream changes would
        corrupt the inverse-probability weighting."""
        return self._alpha

    def estimate(self) -> float:
        """Current running estimate.  May dip below zero transiently after
        deletion updates; clamping would bias it."""
        return self.t_est

    def process_event(self, ev, g) -> None:
        """Consume one stream event.  ``g`` must already reflect it: the
        edge inserted for beta=+1, removed for beta=-1."""
        if self.mode != "dynamic":
            raise ValueError("process_event requires dynamic mode")
        if self.rng.random() <= self._alpha:
            present = g.has_edge(ev.u, ev.v)
            if ev.beta == 1 and not present:
                raise ValueError(f"addition ({ev.u}, {ev.v}) was not applied to the graph")
            if ev.beta == -1 and present:
                raise ValueError(f"deletion ({ev.u}, {ev.v}) was not applied to the graph")
            self.edges_sampled += 1
            self.update_count(ev.u, ev.v, ev.beta, g)
            self.update_count(ev.v, ev.u, ev.beta, g)

    def update_count(self, u: int, v: int, beta: int, g) -> None:
        """Probe Γ(u) for a node closing a triangle with (u, v) and move the
        estimate by the inverse probability of the observed tuple.

        For additions the probe excludes v (tuple probability
        alpha/(d(u)-1)); for deletions v already left Γ(u) and the probe
        spans all of it (probability alpha/d(u)).  Degrees are post-event.
        """
        d = g.degree(u)
        if beta == 1:
            if d > 1:
                a = g.random_neighbor(u, self.rng, exclude=v)
                if g.has_edge(a, v):
                    self.t_est += self.omega * (d - 1) / self._alpha
        else:
            if d > 0:
                a = g.random_neighbor(u, self.rng)
                if g.has_edge(a, v):
                    self.t_est -= self.omega * d / self._alpha

    def process_static(self, edge, g) -> None:
        """Static variant: ``g`` is the whole graph and the stream delivers
        each of its edges exactly once, in random order.  Sampled edges take
        the addition branch with the static weight."""
        if self.mode != "static":
            raise ValueError("process_static requires static mode")
        u, v = edge
        if not g.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) is not in the graph")
        if self.rng.random() <= self._alpha:
            self.edges_sampled += 1
            self.update_count(u, v, 1, g)
            self.update_count(v, u, 1, g)
