"""Edge-event model and stream generators for dynamic-graph experiments.

A stream is an ordered sequence of ((u, v), beta) events, beta=+1 for an
addition and beta=-1 for a deletion.  Generators are pure functions of
their inputs and seed: the same arguments produce byte-identical streams,
and generated streams are consistent by construction (they never add a
present edge nor delete an absent one).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

from .graph import read_edge_list


@dataclass(frozen=True, slots=True)
class EdgeEvent:
    """One stream element: edge (u, v) added (beta=+1) or deleted (beta=-1)."""

    u: int
    v: int
    beta: int

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError(f"self-loop event on node {self.u}")
        if self.beta not in (1, -1):
            raise ValueError(f"beta must be +1 or -1, got {self.beta}")


def _canonical(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _check_simple(edges) -> list[tuple[int, int]]:
    """Canonicalize an edge list, rejecting self-loops and duplicates."""
    out = []
    seen = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) in edge list")
        e = _canonical(u, v)
        if e in seen:
            raise ValueError(f"duplicate edge {e} in edge list")
        seen.add(e)
        out.append(e)
    return out


def _check_prob(name: str, p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"{name} must be in [0, 1], got {p}")


def permutation_stream(edges, seed: int) -> list[EdgeEvent]:
    """Addition-only stream: every input edge exactly once, in a uniformly
    random order determined by ``seed``."""
    pool = _check_simple(edges)
    random.Random(seed).shuffle(pool)
    return [EdgeEvent(u, v, 1) for u, v in pool]


def dynamic_edge_deletion_stream(edges, p_e: float, p_d: float, seed: int) -> list[EdgeEvent]:
    """Permuted additions with interleaved edge-deletion events.

    After each addition, with probability ``p_e`` a deletion event runs:
    every edge currently present is deleted independently with probability
    ``p_d``, emitted in ascending (u, v) order.  Each original edge arrives
    exactly once, so deleted edges stay deleted.
    """
    _check_prob("p_e", p_e)
    _check_prob("p_d", p_d)
    pool = _check_simple(edges)
    rng = random.Random(seed)
    rng.shuffle(pool)
    events = []
    present: set[tuple[int, int]] = set()
    for u, v in pool:
        events.append(EdgeEvent(u, v, 1))
        present.add((u, v))
        if rng.random() < p_e:
            for e in sorted(present):
                if rng.random() < p_d:
                    events.append(EdgeEvent(e[0], e[1], -1))
                    present.discard(e)
    return events


def dynamic_node_deletion_stream(edges, p_e: float, p_d: float, seed: int) -> list[EdgeEvent]:
    """Permuted additions with interleaved node-deletion events.

    After each addition, with probability ``p_e`` a deletion event runs:
    each node currently having at least one incident edge is marked
    independently with probability ``p_d`` (visited in ascending id order),
    then every present edge touching a marked node is deleted, in ascending
    (u, v) order.  An edge shared by two marked nodes is emitted once.
    """
    _check_prob("p_e", p_e)
    _check_prob("p_d", p_d)
    pool = _check_simple(edges)
    rng = random.Random(seed)
    rng.shuffle(pool)
    events = []
    present: set[tuple[int, int]] = set()
    deg: dict[int, int] = {}
    for u, v in pool:
        events.append(EdgeEvent(u, v, 1))
        present.add((u, v))
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        if rng.random() < p_e:
            marked = {node for node in sorted(deg) if rng.random() < p_d}
            if not marked:
                continue
            for e in sorted(present):
                a, b = e
                if a in marked or b in marked:
                    events.append(EdgeEvent(a, b, -1))
                    present.discard(e)
                    for x in (a, b):
                        deg[x] -= 1
                        if deg[x] == 0:
                            del deg[x]
    return events


def snapshot_diffs(snapshots) -> list[list[EdgeEvent]]:
    """Per-transition event chunks between consecutive snapshots.

    Chunk i transforms snapshot i-1 (the empty graph for i=0) into snapshot
    i: deletions first, then additions, each ascending by (u, v).  Snapshots
    must be simple edge lists.
    """
    chunks = []
    prev: set[tuple[int, int]] = set()
    for snap in snapshots:
        cur = set(_check_simple(snap))
        chunk = [EdgeEvent(u, v, -1) for u, v in sorted(prev - cur)]
        chunk += [EdgeEvent(u, v, 1) for u, v in sorted(cur - prev)]
        chunks.append(chunk)
        prev = cur
    return chunks


def snapshot_diff_stream(snapshots) -> list[EdgeEvent]:
    """Flattened snapshot transitions; replaying from an empty graph
    reconstructs every snapshot at its chunk boundary."""
    return [ev for chunk in snapshot_diffs(snapshots) for ev in chunk]


def write_stream_file(events, path) -> None:
    """One event per line: "u v +1" or "u v -1"."""
    with open(path, "w", encoding="utf-8") as fh:
        for ev in events:
            fh.write(f"{ev.u} {ev.v} {ev.beta:+d}\n")


def read_stream_file(path) -> list[EdgeEvent]:
    """Parse a stream file written by ``write_stream_file``.

    Blank lines and '#' comments are ignored; anything else must be
    "u v +1" or "u v -1".
    """
    events = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3 or parts[2] not in ("+1", "-1"):
                raise ValueError(f"{path}:{lineno}: expected 'u v +1|-1', got {raw.rstrip()!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: node ids must be unsigned integers") from None
            if u < 0 or v < 0:
                raise ValueError(f"{path}:{lineno}: node ids must be unsigned integers")
            events.append(EdgeEvent(u, v, 1 if parts[2] == "+1" else -1))
    return events


def read_snapshot_dir(path) -> list[list[tuple[int, int]]]:
    """Read a directory of edge-list files as an ordered snapshot chain,
    consumed in lexicographic filename order."""
    files = sorted(p for p in Path(path).iterdir() if p.is_file())
    if not files:
        raise ValueError(f"no snapshot files in {path}")
    return [read_edge_list(p) for p in files]


_SPEC_KINDS = ("permutation", "edge-deletion", "node-deletion", "snapshot-diff", "file")


@dataclass
class StreamSpec:
    """Recipe for producing an event sequence.

    kind selects the generator: "permutation", "edge-deletion" and
    "node-deletion" need ``edges`` (the latter two also ``p_e``/``p_d``),
    "snapshot-diff" needs ``snapshots`` and "file" needs ``path``.  The two
    file-backed kinds ignore the realize seed.
    """

    kind: str
    edges: list | None = None
    snapshots: list | None = None
    path: str | None = None
    p_e: float = 0.0
    p_d: float = 0.0

    def __post_init__(self):
        if self.kind not in _SPEC_KINDS:
            raise ValueError(f"unknown stream kind {self.kind!r}")
        if self.kind in ("permutation", "edge-deletion", "node-deletion") and self.edges is None:
            raise ValueError(f"stream kind {self.kind!r} requires edges")
        if self.kind == "snapshot-diff" and self.snapshots is None:
            raise ValueError("snapshot-diff stream requires snapshots")
        if self.kind == "file" and self.path is None:
            raise ValueError("file stream requires a path")
        _check_prob("p_e", self.p_e)
        _check_prob("p_d", self.p_d)

    def realize(self, seed: int) -> list[EdgeEvent]:
        if self.kind == "permutation":
            return permutation_stream(self.edges, seed)
        if self.kind == "edge-deletion":
            return dynamic_edge_deletion_stream(self.edges, self.p_e, self.p_d, seed)
        if self.kind == "node-deletion":
            return dynamic_node_deletion_stream(self.edges, self.p_e, self.p_d, seed)
        if self.kind == "snapshot-diff":
            return snapshot_diff_stream(self.snapshots)
        return read_stream_file(self.path)
