"""Dynamic undirected simple graph backed by sorted adjacency arrays.

This is the authoritative dataset in a streaming setup: mutations arrive
as edge additions and deletions, and analytics code answers neighborhood
queries against the current state.  Neighbor lists are kept sorted so a
membership test costs O(log d) and intersections run in linear time;
inserting or removing a neighbor costs O(d).

Single-writer model: mutations must be serialized by the caller.  Reads
between mutations are safe; ``neighbors`` returns a snapshot that stays
valid across later mutations.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from typing import Iterable, Iterator, Optional, Sequence


class Graph:
    """Mutable undirected simple graph with sorted neighbor lists."""

    __slots__ = ("_adj", "_edge_count")

    def __init__(self):
        self._adj: dict[int, list[int]] = {}
        self._edge_count = 0

    # ------------------------------------------------------------------
    # queries

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def node_count(self) -> int:
        """Known nodes, including ones whose neighborhoods emptied out."""
        return len(self._adj)

    def nodes(self):
        """View of all known node ids."""
        return self._adj.keys()

    def neighbors(self, u: int) -> tuple:
        """Snapshot of the neighbors of ``u``, sorted ascending.

        Unknown nodes have no neighbors.  The returned tuple is not
        invalidated by later mutations.
        """
        return tuple(self._adj.get(u, ()))

    def adjacency(self, u: int) -> Sequence[int]:
        """Live sorted neighbor sequence of ``u`` (empty if unknown).

        Shared with the graph internals: treat as read-only and do not
        hold across mutations.  Hot paths use this to avoid copying.
        """
        return self._adj.get(u, ())

    def degree(self, u: int) -> int:
        return len(self._adj.get(u, ()))

    def has_edge(self, u: int, v: int) -> bool:
        """O(log d) membership test over the smaller neighbor list."""
        if u == v:
            return False
        a = self._adj.get(u)
        b = self._adj.get(v)
        if not a or not b:
            return False
        nbrs, target = (a, v) if len(a) <= len(b) else (b, u)
        i = bisect_left(nbrs, target)
        return i < len(nbrs) and nbrs[i] == target

    def random_neighbor(self, u: int, rng, exclude: Optional[int] = None) -> Optional[int]:
        """Uniform draw from Γ(u), optionally excluding one node.

        Consumes exactly one ``rng.randrange`` call per draw so replays are
        deterministic.  Returns None when the candidate set is empty.
        """
        nbrs = self._adj.get(u)
        if not nbrs:
            return None
        n = len(nbrs)
        if exclude is None:
            return nbrs[rng.randrange(n)]
        i = bisect_left(nbrs, exclude)
        if i < n and nbrs[i] == exclude:
            if n == 1:
                return None
            j = rng.randrange(n - 1)
            return nbrs[j] if j < i else nbrs[j + 1]
        return nbrs[rng.randrange(n)]

    # ------------------------------------------------------------------
    # mutations

    def add_node(self, u: int) -> None:
        """Ensure ``u`` exists in the adjacency map (no edges implied)."""
        self._adj.setdefault(u, [])

    def add_edge(self, u: int, v: int) -> bool:
        """Insert undirected edge (u, v).

        Returns False without touching the graph on a self-loop or an
        already-present edge.
        """
        if u == v or self.has_edge(u, v):
            return False
        insort(self._adj.setdefault(u, []), v)
        insort(self._adj.setdefault(v, []), u)
        self._edge_count += 1
        return True

    def delete_edge(self, u: int, v: int) -> bool:
        """Remove undirected edge (u, v); False when absent.

        Endpoints stay in the adjacency map even at degree zero, since
        deletion-heavy streams revisit the same nodes; ``compact`` drops
        them explicitly.
        """
        if not self.has_edge(u, v):
            return False
        a = self._adj[u]
        del a[bisect_left(a, v)]
        b = self._adj[v]
        del b[bisect_left(b, u)]
        self._edge_count -= 1
        return True

    def compact(self) -> None:
        """Drop nodes whose neighbor lists are empty."""
        self._adj = {u: nbrs for u, nbrs in self._adj.items() if nbrs}

    # ------------------------------------------------------------------
    # iteration / construction

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each undirected edge once, as (smaller id, larger id)."""
        for u, nbrs in self._adj.items():
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def copy(self) -> "Graph":
        g = Graph()
        g._adj = {u: list(nbrs) for u, nbrs in self._adj.items()}
        g._edge_count = self._edge_count
        return g

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from edge pairs; duplicates and self-loops are
        silently dropped."""
        g = cls()
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def __eq__(self, other):
        # degree-0 entries behave like unknown nodes, so ignore them
        if not isinstance(other, Graph):
            return NotImplemented
        mine = {u: nbrs for u, nbrs in self._adj.items() if nbrs}
        theirs = {u: nbrs for u, nbrs in other._adj.items() if nbrs}
        return mine == theirs

    def __repr__(self):
        return f"Graph(nodes={self.node_count}, edges={self._edge_count})"


def read_edge_list(path) -> list[tuple[int, int]]:
    """Parse an edge-list file: one "u v" pair per line.

    Blank lines and lines starting with '#' or '%' are ignored.  Node ids
    must be unsigned decimal integers and self-loops are rejected.
    """
    edges = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line[0] in "#%":
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'u v', got {raw.rstrip()!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: node ids must be unsigned integers") from None
            if u < 0 or v < 0:
                raise ValueError(f"{path}:{lineno}: node ids must be unsigned integers")
            if u == v:
                raise ValueError(f"{path}:{lineno}: self-loop on node {u}")
            edges.append((u, v))
    return edges


def write_edge_list(edges_or_graph, path) -> None:
    """Write edges one per line as "u v".

    A Graph is emitted in sorted canonical order; a plain edge sequence is
    written as given, so read(write(x)) round-trips exactly.
    """
    if isinstance(edges_or_graph, Graph):
        rows = sorted(edges_or_graph.edges())
    else:
        rows = list(edges_or_graph)
    with open(path, "w", encoding="utf-8") as fh:
        for u, v in rows:
            fh.write(f"{u} {v}\n")
