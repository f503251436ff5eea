"""Comparison estimators: probabilistic sparsification and a fixed-size
edge reservoir with random pairing for deletions.

Both maintain their own sampled subgraph and never query the main graph
store; they see only the event stream.
"""

from __future__ import annotations

import random

from .graph import Graph
from .oracle import triangles_of_edge


class DoulionEstimator:
    """Sparsifier: keeps each arriving edge with probability ``p`` and
    counts triangles inside the sample.

    A triangle survives sparsification with probability p^3, so the sample
    count rescales by p^-3.  The count is maintained incrementally on every
    sample mutation, which makes the estimate queryable mid-stream while
    ending at exactly the value a batch recount would give.
    """

    def __init__(self, p: float, seed: int = 0, rng=None):
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"p must be in [0, 1], got {p}")
        self.p = p
        self.rng = rng if rng is not None else random.Random(seed)
        self.sample = Graph()
        self.tri_in_sample = 0
        self.edges_sampled = 0

    def process(self, ev) -> None:
        if ev.beta == 1:
            if self.rng.random() < self.p and self.sample.add_edge(ev.u, ev.v):
                # the new edge cannot be its own common neighbor, so
                # counting after the insert is exact
                self.tri_in_sample += triangles_of_edge(self.sample, ev.u, ev.v)
                self.edges_sampled += 1
        else:
            if self.sample.has_edge(ev.u, ev.v):
                self.tri_in_sample -= triangles_of_edge(self.sample, ev.u, ev.v)
                self.sample.delete_edge(ev.u, ev.v)

    def estimate(self) -> float:
        if self.p == 0.0:
            return 0.0
        return self.tri_in_sample / self.p**3


class TriestEstimator:
    """Fixed-capacity edge reservoir with random pairing for deletions.

    Additions fill the reservoir, then replace a uniform member with
    probability capacity/t.  Deleting a reservoir edge frees a slot and
    leaves a "bad" debt that a future insertion compensates; deletions of
    unsampled edges leave "good" debts that swallow future insertions.  The
    weighted triangle counter tau follows every reservoir mutation, and the
    estimate rescales tau by the cubic over-counting factor of sampling
    triangles from s live edges through min(capacity, s) slots.
    """

    def __init__(self, capacity: int, seed: int = 0, rng=None):
        if capacity < 1:
            raise ValueError(f"capacity must be >= 1, got {capacity}")
        self.capacity = capacity
        self.rng = rng if rng is not None else random.Random(seed)
        self.sample = Graph()
        self._edges: list[tuple[int, int]] = []  # reservoir slots
        self._slot: dict[tuple[int, int], int] = {}
        self._live: set[tuple[int, int]] = set()  # current true-graph edges
        self.tau = 0
        self.t_add = 0
        self.c_bad = 0  # uncompensated deletions of reservoir edges
        self.c_good = 0  # uncompensated deletions of unsampled edges

    @property
    def edges_sampled(self) -> int:
        return len(self._edges)

    @property
    def live_edges(self) -> int:
        """Size of the true graph as tracked from the event stream."""
        return len(self._live)

    def process(self, ev) -> None:
        e = (ev.u, ev.v) if ev.u < ev.v else (ev.v, ev.u)
        if ev.beta == 1:
            if e in self._live:
                return  # malformed duplicate addition: ignore
            self._live.add(e)
            self.t_add += 1
            if self.c_bad + self.c_good == 0:
                if len(self._edges) < self.capacity:
                    self._insert(e)
                elif self.rng.random() < self.capacity / self.t_add:
                    self._replace(self.rng.randrange(self.capacity), e)
            else:
                if self.rng.random() < self.c_bad / (self.c_bad + self.c_good):
                    self._insert(e)
                    self.c_bad -= 1
                else:
                    self.c_good -= 1
        else:
            if e not in self._live:
                return  # absent from both the graph and the reservoir: no-op
            self._live.discard(e)
            if e in self._slot:
                self._remove(e)
                self.c_bad += 1
            else:
                self.c_good += 1

    def estimate(self) -> float:
        s = len(self._live)
        m = min(self.capacity, s)
        if m < 3:
            return float(self.tau)
        rho = max(1.0, s * (s - 1) * (s - 2) / (m * (m - 1) * (m - 2)))
        return self.tau * rho

    # ------------------------------------------------------------------
    # reservoir plumbing; tau counts triangles whose three edges are all in
    # the sample, adjusted by the new/old edge's common-neighbor count

    def _insert(self, e: tuple[int, int]) -> None:
        self._slot[e] = len(self._edges)
        self._edges.append(e)
        self.sample.add_edge(*e)
        self.tau += triangles_of_edge(self.sample, *e)

    def _remove(self, e: tuple[int, int]) -> None:
        self.tau -= triangles_of_edge(self.sample, *e)
        self.sample.delete_edge(*e)
        idx = self._slot.pop(e)
        last = self._edges.pop()
        if last != e:
            self._edges[idx] = last
            self._slot[last] = idx

    def _replace(self, idx: int, e: tuple[int, int]) -> None:
        old = self._edges[idx]
        self.tau -= triangles_of_edge(self.sample, *old)
        self.sample.delete_edge(*old)
        del self._slot[old]
        self._edges[idx] = e
        self._slot[e] = idx
        self.sample.add_edge(*e)
        self.tau += triangles_of_edge(self.sample, *e)
