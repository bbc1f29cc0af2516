"""Simple undirected graphs with stable edge ids, degeneracy machinery,
and the low-degree / special edge selections used by the colorers.

Vertices are dense integers 0..n-1.  Edge ids are dense integers assigned
in insertion order and survive remove/restore round trips, so a coloring
can be stored as a flat array indexed by edge id.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import EmptyGraph, GraphError, NotKDegenerate, UnknownEdge


class Graph:
    """Simple undirected graph.  No self-loops, no parallel edges.

    Mutable only through ``remove_edge`` / ``restore_edge``; everything
    else is read-only after construction.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        self.n = n
        self._endpoints: list[tuple[int, int]] = []
        self._active: list[bool] = []
        self._adj: list[dict[int, int]] = [dict() for _ in range(n)]
        for u, v in edges:
            self._add_edge(u, v)

    def _add_edge(self, u: int, v: int) -> int:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge ({u},{v}) out of range for n={self.n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u} rejected")
        if v in self._adj[u]:
            raise GraphError(f"parallel edge ({u},{v}) rejected")
        eid = len(self._endpoints)
        self._endpoints.append((u, v))
        self._active.append(True)
        self._adj[u][v] = eid
        self._adj[v][u] = eid
        return eid

    # -- queries ---------------------------------------------------------

    @property
    def m(self) -> int:
        return sum(self._active)

    @property
    def num_edge_slots(self) -> int:
        """Total edge ids ever assigned, including removed ones."""
        return len(self._endpoints)

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield (edge id, u, v) for active edges, in edge-id order."""
        for eid, (u, v) in enumerate(self._endpoints):
            if self._active[eid]:
                yield eid, u, v

    def endpoints(self, eid: int) -> tuple[int, int]:
        if not (0 <= eid < len(self._endpoints)):
            raise UnknownEdge(eid)
        return self._endpoints[eid]

    def has_edge_id(self, eid: int) -> bool:
        return 0 <= eid < len(self._endpoints) and self._active[eid]

    def edge_between(self, u: int, v: int) -> Optional[int]:
        return self._adj[u].get(v)

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighbors(self, v: int) -> list[int]:
        return list(self._adj[v])

    def incident(self, v: int) -> list[tuple[int, int]]:
        """(neighbor, edge id) pairs for v, in insertion order."""
        return list(self._adj[v].items())

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.endpoints(eid)
        if v == u:
            return w
        if v == w:
            return u
        raise UnknownEdge(f"vertex {v} not an endpoint of edge {eid}")

    # -- mutation --------------------------------------------------------

    def remove_edge(self, eid: int) -> None:
        if not self.has_edge_id(eid):
            raise UnknownEdge(eid)
        u, v = self._endpoints[eid]
        del self._adj[u][v]
        del self._adj[v][u]
        self._active[eid] = False

    def restore_edge(self, eid: int) -> None:
        if not (0 <= eid < len(self._endpoints)) or self._active[eid]:
            raise UnknownEdge(eid)
        u, v = self._endpoints[eid]
        self._adj[u][v] = eid
        self._adj[v][u] = eid
        self._active[eid] = True

    def copy(self) -> "Graph":
        g = Graph(self.n)
        g._endpoints = list(self._endpoints)
        g._active = list(self._active)
        g._adj = [dict(a) for a in self._adj]
        return g

    # -- equality is structural and order-insensitive ---------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self._endpoints == other._endpoints
            and self._active == other._active
            and self._adj == other._adj
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass
class DegeneracyDecomposition:
    """Elimination order with back-degree bounded by ``degeneracy``."""

    order: list[int]
    degeneracy: int


def degeneracy(g: Graph) -> tuple[int, DegeneracyDecomposition]:
    """Exact degeneracy via repeated minimum-degree removal.

    Ties break toward the smallest vertex id so the elimination order is
    deterministic.
    """
    deg = {v: g.degree(v) for v in g.vertices()}
    heap = [(d, v) for v, d in deg.items()]
    heapq.heapify(heap)
    removed = set()
    order = []
    k = 0
    adj = {v: g.neighbors(v) for v in g.vertices()}
    while heap:
        d, v = heapq.heappop(heap)
        if v in removed or d != deg[v]:
            continue
        removed.add(v)
        order.append(v)
        k = max(k, d)
        for w in adj[v]:
            if w not in removed:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return k, DegeneracyDecomposition(order=order, degeneracy=k)


def is_k_degenerate(g: Graph, k: int) -> bool:
    return degeneracy(g)[0] <= k


def find_low_degree_edge(g: Graph, k: int) -> tuple[int, int]:
    """Edge (x, y) with deg(x) <= k; smallest x, then smallest y."""
    if g.m == 0:
        raise EmptyGraph("graph has no edges")
    for x in g.vertices():
        if 0 < g.degree(x) <= k:
            return x, min(g.neighbors(x))
    raise NotKDegenerate(f"no non-isolated vertex of degree <= {k}")


def find_special_edge(g: Graph, k: int) -> tuple[int, int]:
    """Edge (x, y) where deg(x) <= k, at most k neighbors of y have degree
    greater than k, and x has minimum degree among y's neighbors.

    Existence is guaranteed for k-degenerate inputs; exhausting the scan
    therefore signals an invalid input.  Scans y in ascending id order and
    breaks ties for x by (degree, id).
    """
    if g.m == 0:
        raise EmptyGraph("graph has no edges")
    for y in g.vertices():
        nbrs = g.neighbors(y)
        if not nbrs:
            continue
        high = sum(1 for z in nbrs if g.degree(z) > k)
        if high > k:
            continue
        x = min(nbrs, key=lambda z: (g.degree(z), z))
        if g.degree(x) <= k:
            return x, y
    raise NotKDegenerate(f"no special edge for k={k}; input not {k}-degenerate?")


# -- edge-list text format ------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: one ``u v`` pair per line, '#' comments,
    blank lines ignored, vertex count inferred as max id + 1.
    """
    edges = []
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}")
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: vertex ids must be non-negative")
        edges.append((u, v))
        max_id = max(max_id, u, v)
    return Graph(max_id + 1, edges)


def format_edge_list(g: Graph) -> str:
    """Serialize active edges one per line in edge-id order."""
    lines = [f"{u} {v}" for _, u, v in g.edges()]
    return "\n".join(lines) + ("\n" if lines else "")
