"""Partial edge colorings and the bichromatic-path machinery.

A partial edge coloring maps edge ids to colors 1..p (or none).  Properness
is enforced on every assignment, which keeps a per-vertex color index (at
most one incident edge per color per vertex) and makes alternating-path
traversal deterministic: from any vertex there is at most one way to
continue with a given color.

Terminology used throughout: the incident color set of a vertex x is the
set of colors on x's colored edges; for an edge uv the blocking set seen
from u is the incident set of v minus uv's own color.  A color is a
candidate for an uncolored edge when neither endpoint sees it; a candidate
is valid when assigning it creates no bichromatic cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (
    EdgeAlreadyColored,
    ImproperColoring,
    NotACandidate,
    PropernessViolation,
    UncoloredEdge,
    UnknownEdge,
)
from .graph import Graph


@dataclass
class BichromaticPath:
    """Maximal alternating path for a color pair; vertices are distinct."""

    vertices: list[int]
    edges: list[int]
    colors: tuple[int, int]

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]


@dataclass
class BichromaticCycle:
    """Even cycle alternating between two colors (an acyclicity violation)."""

    vertices: list[int]
    edges: list[int]
    colors: tuple[int, int]


@dataclass
class ColoringReport:
    """Result of verifying a (partial) coloring."""

    proper: bool
    acyclic: bool
    colors_used: int
    cycle: Optional[BichromaticCycle] = None
    improper_vertex: Optional[int] = None
    total: Optional[bool] = None
    bound: Optional[int] = None
    bound_ok: Optional[bool] = None

    @property
    def ok(self) -> bool:
        checks = [self.proper, self.acyclic]
        if self.total is not None:
            checks.append(self.total)
        if self.bound_ok is not None:
            checks.append(self.bound_ok)
        return all(checks)


class PartialEdgeColoring:
    def __init__(self, graph: Graph, palette: int):
        if palette < 0:
            raise ValueError(f"palette size must be non-negative, got {palette}")
        self.graph = graph
        self.palette = palette
        self._assignment: list[Optional[int]] = [None] * graph.num_edge_slots
        # _index[v][color] = edge id of v's incident edge with that color
        self._index: list[dict[int, int]] = [dict() for _ in range(graph.n)]

    # -- basic queries -----------------------------------------------------

    def color_of(self, eid: int) -> Optional[int]:
        if not (0 <= eid < len(self._assignment)):
            raise UnknownEdge(eid)
        return self._assignment[eid]

    def is_colored(self, eid: int) -> bool:
        return self.color_of(eid) is not None

    def incident_colors(self, v: int) -> set[int]:
        """The incident color set of v (F_v in the usual notation)."""
        return set(self._index[v])

    def incident_colors_minus_edge(self, v: int, eid: int) -> set[int]:
        """Colors at v excluding edge eid's own color (F_uv for uv = eid)."""
        colors = set(self._index[v])
        c = self._assignment[eid]
        if c is not None and self._index[v].get(c) == eid:
            colors.discard(c)
        return colors

    def edge_with_color(self, v: int, color: int) -> Optional[int]:
        return self._index[v].get(color)

    def used_colors(self) -> set[int]:
        return {c for c in self._assignment if c is not None}

    def colored_count(self) -> int:
        return sum(1 for c in self._assignment if c is not None)

    def is_total(self) -> bool:
        return all(self._assignment[eid] is not None for eid, _, _ in self.graph.edges())

    # -- mutation ----------------------------------------------------------

    def _check_color(self, color: int) -> None:
        if not (1 <= color <= self.palette):
            raise ValueError(f"color {color} outside palette 1..{self.palette}")

    def assign(self, eid: int, color: int) -> None:
        if not self.graph.has_edge_id(eid):
            raise UnknownEdge(eid)
        self._check_color(color)
        if self._assignment[eid] is not None:
            raise EdgeAlreadyColored(f"edge {eid} already colored")
        u, v = self.graph.endpoints(eid)
        if color in self._index[u] or color in self._index[v]:
            raise PropernessViolation(
                f"color {color} already incident on an endpoint of edge {eid}"
            )
        self._assignment[eid] = color
        self._index[u][color] = eid
        self._index[v][color] = eid

    def unassign(self, eid: int) -> int:
        if not self.graph.has_edge_id(eid):
            raise UnknownEdge(eid)
        color = self._assignment[eid]
        if color is None:
            raise UncoloredEdge(f"edge {eid} is not colored")
        u, v = self.graph.endpoints(eid)
        del self._index[u][color]
        del self._index[v][color]
        self._assignment[eid] = None
        return color

    def recolor(self, eid: int, color: int) -> int:
        """Unassign + assign in one step; returns the previous color."""
        old = self.unassign(eid)
        try:
            self.assign(eid, color)
        except PropernessViolation:
            self.assign(eid, old)
            raise
        return old

    def copy(self) -> "PartialEdgeColoring":
        c = PartialEdgeColoring(self.graph, self.palette)
        c._assignment = list(self._assignment)
        c._index = [dict(row) for row in self._index]
        return c

    def rebuild_index(self) -> list[dict[int, int]]:
        """Index recomputed from the raw assignment (consistency oracle)."""
        index: list[dict[int, int]] = [dict() for _ in range(self.graph.n)]
        for eid, u, v in self.graph.edges():
            c = self._assignment[eid]
            if c is None:
                continue
            for w in (u, v):
                if c in index[w]:
                    index[w][c] = min(index[w][c], eid)
                else:
                    index[w][c] = eid
        return index

    # -- candidates and validity -------------------------------------------

    def candidate_colors(self, eid: int) -> set[int]:
        """Palette colors absent from both endpoints of the uncolored edge."""
        if not self.graph.has_edge_id(eid):
            raise UnknownEdge(eid)
        if self._assignment[eid] is not None:
            raise EdgeAlreadyColored(f"edge {eid} already colored")
        u, v = self.graph.endpoints(eid)
        blocked = self.incident_colors(u) | self.incident_colors(v)
        return {c for c in range(1, self.palette + 1) if c not in blocked}

    def _walk(self, start: int, first: int, second: int):
        """Follow the alternating path from ``start`` whose first edge is
        colored ``first``.  Returns (vertices, edges, closed) where closed
        means the walk returned to ``start`` (a bichromatic cycle).
        """
        vertices = [start]
        edges: list[int] = []
        seen = {start}
        v = start
        want = first
        while True:
            eid = self._index[v].get(want)
            if eid is None:
                return vertices, edges, False
            w = self.graph.other_end(eid, v)
            if w == start:
                vertices.append(w)
                edges.append(eid)
                return vertices, edges, True
            if w in seen:
                raise ImproperColoring(
                    f"alternating walk revisited vertex {w}; index corrupt?"
                )
            vertices.append(w)
            edges.append(eid)
            seen.add(w)
            v = w
            want = second if want == first else first

    def maximal_bichromatic_path(
        self, v: int, alpha: int, beta: int
    ) -> Optional[BichromaticPath | BichromaticCycle]:
        """The unique maximal {alpha,beta}-alternating path through v, or a
        BichromaticCycle if v lies on one, or None if v has neither color.
        """
        if alpha == beta:
            raise ValueError("need two distinct colors")
        has_a = alpha in self._index[v]
        has_b = beta in self._index[v]
        if not has_a and not has_b:
            return None
        if has_a:
            verts_a, edges_a, closed = self._walk(v, alpha, beta)
            if closed:
                return BichromaticCycle(verts_a, edges_a, (alpha, beta))
        else:
            verts_a, edges_a = [v], []
        if has_b:
            verts_b, edges_b, closed = self._walk(v, beta, alpha)
            if closed:
                return BichromaticCycle(verts_b, edges_b, (alpha, beta))
        else:
            verts_b, edges_b = [v], []
        # Orient the path to begin at the far end of the alpha-side walk.
        vertices = list(reversed(verts_a[1:])) + verts_b
        edges = list(reversed(edges_a)) + edges_b
        return BichromaticPath(vertices, edges, (alpha, beta))

    def exists_critical_path(self, alpha: int, beta: int, u: int, v: int) -> bool:
        """True iff the maximal (alpha,beta)-path starting at u with an
        alpha edge ends at v, arriving on an alpha edge.

        This is the asymmetric test that decides whether assigning beta to
        the edge uv would close an (alpha,beta)-cycle.
        """
        if alpha == beta:
            raise ValueError("need two distinct colors")
        if alpha not in self._index[u]:
            return False
        vertices, edges, closed = self._walk(u, alpha, beta)
        if closed:
            return False
        # A maximal path can only *start* at u if it cannot be extended past
        # u: either u lacks a beta edge or that edge folds back into the path.
        back = self._index[u].get(beta)
        if back is not None and self.graph.other_end(back, u) not in vertices:
            return False
        return vertices[-1] == v and len(edges) % 2 == 1

    def is_valid_color(self, eid: int, gamma: int) -> bool:
        """Candidate gamma is valid iff no color common to both endpoints
        anchors a critical path between them (the exact cycle criterion).
        """
        if gamma not in self.candidate_colors(eid):
            raise NotACandidate(f"color {gamma} is not a candidate for edge {eid}")
        u, v = self.graph.endpoints(eid)
        common = self.incident_colors(u) & self.incident_colors(v)
        for eta in sorted(common):
            if self.exists_critical_path(eta, gamma, u, v):
                return False
        return True

    def smallest_valid_color(self, eid: int) -> Optional[int]:
        for gamma in sorted(self.candidate_colors(eid)):
            if self.is_valid_color(eid, gamma):
                return gamma
        return None

    # -- color exchange ------------------------------------------------------

    def _reindex_vertex(self, v: int) -> None:
        row: dict[int, int] = {}
        for _, eid in self.graph.incident(v):
            c = self._assignment[eid]
            if c is None:
                continue
            row[c] = min(row[c], eid) if c in row else eid
        self._index[v] = row

    def color_exchange(self, u: int, a: int, b: int) -> tuple[bool, bool]:
        """Swap the colors of edges ua and ub; returns (proper, valid).

        The swap is always performed, even when improper; the caller can
        revert with a second exchange.  While improper, the per-vertex index
        keeps the smallest edge id per color, so only a reverting exchange
        is safe to run next.
        """
        ea = self.graph.edge_between(u, a)
        eb = self.graph.edge_between(u, b)
        if ea is None or eb is None:
            raise UnknownEdge(f"no edge {u}-{a} or {u}-{b}")
        ca, cb = self._assignment[ea], self._assignment[eb]
        if ca is None or cb is None:
            raise UncoloredEdge("color exchange needs both edges colored")
        self._assignment[ea] = cb
        self._assignment[eb] = ca
        for w in (u, a, b):
            self._reindex_vertex(w)
        proper_at_a = all(
            self._assignment[eid] != cb
            for _, eid in self.graph.incident(a)
            if eid != ea
        )
        proper_at_b = all(
            self._assignment[eid] != ca
            for _, eid in self.graph.incident(b)
            if eid != eb
        )
        proper = proper_at_a and proper_at_b
        valid = proper and is_acyclic(self.graph, self).acyclic
        return proper, valid


# -- whole-coloring verification ---------------------------------------------


def _find_cycle(adj: dict[int, list[tuple[int, int]]], u: int, v: int, eid: int):
    """Path from u to v in the forest ``adj``, closed with edge eid."""
    parent: dict[int, tuple[Optional[int], Optional[int]]] = {u: (None, None)}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            break
        for y, e in adj.get(x, ()):
            if y not in parent:
                parent[y] = (x, e)
                stack.append(y)
    vertices = [v]
    edges = []
    x = v
    while parent[x][0] is not None:
        px, pe = parent[x]
        vertices.append(px)
        edges.append(pe)
        x = px
    vertices.reverse()
    edges.reverse()
    vertices.append(u)  # close the cycle back at u via eid
    edges.append(eid)
    return vertices, edges


def is_acyclic(g: Graph, coloring: PartialEdgeColoring) -> ColoringReport:
    """Check properness and bichromatic acyclicity of a partial coloring.

    Uncolored edges are ignored.  Only color pairs that actually co-occur
    at some vertex are examined; for each such pair a union-find over the
    two color classes finds any alternating cycle, which is returned as a
    witness.
    """
    proper = True
    improper_vertex = None
    for v in g.vertices():
        seen: set[int] = set()
        for _, eid in g.incident(v):
            c = coloring.color_of(eid)
            if c is None:
                continue
            if c in seen:
                proper = False
                improper_vertex = v
                break
            seen.add(c)
        if not proper:
            break

    edges_by_color: dict[int, list[int]] = {}
    for eid, _, _ in g.edges():
        c = coloring.color_of(eid)
        if c is not None:
            edges_by_color.setdefault(c, []).append(eid)

    pairs: set[tuple[int, int]] = set()
    for v in g.vertices():
        colors = sorted(
            {
                coloring.color_of(eid)
                for _, eid in g.incident(v)
                if coloring.color_of(eid) is not None
            }
        )
        for i in range(len(colors)):
            for j in range(i + 1, len(colors)):
                pairs.add((colors[i], colors[j]))

    for a, b in sorted(pairs):
        eids = edges_by_color.get(a, []) + edges_by_color.get(b, [])
        parent: dict[int, int] = {}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        adj: dict[int, list[tuple[int, int]]] = {}
        degree_in_pair: dict[int, int] = {}
        for eid in sorted(eids):
            u, v = g.endpoints(eid)
            for w in (u, v):
                parent.setdefault(w, w)
                degree_in_pair[w] = degree_in_pair.get(w, 0) + 1
                if proper and degree_in_pair[w] > 2:
                    raise ImproperColoring(
                        f"vertex {w} has degree > 2 in color pair ({a},{b})"
                    )
            ru, rv = find(u), find(v)
            if ru == rv:
                vertices, cyc_edges = _find_cycle(adj, u, v, eid)
                cycle = BichromaticCycle(vertices, cyc_edges, (a, b))
                return ColoringReport(
                    proper=proper,
                    acyclic=False,
                    colors_used=len(edges_by_color),
                    cycle=cycle,
                    improper_vertex=improper_vertex,
                )
            parent[ru] = rv
            adj.setdefault(u, []).append((v, eid))
            adj.setdefault(v, []).append((u, eid))

    return ColoringReport(
        proper=proper,
        acyclic=True,
        colors_used=len(edges_by_color),
        improper_vertex=improper_vertex,
    )


# -- JSON-facing serialization -------------------------------------------------

SCHEMA_VERSION = 1


def coloring_to_dict(g: Graph, coloring: PartialEdgeColoring) -> dict:
    """JSON form: {"schema": 1, "palette": p, "edges": [[u, v, color], ...]}
    with color 0 meaning uncolored, edges in edge-id order.
    """
    edges = []
    for eid, u, v in g.edges():
        c = coloring.color_of(eid)
        edges.append([u, v, 0 if c is None else c])
    return {"schema": SCHEMA_VERSION, "palette": coloring.palette, "edges": edges}


def coloring_from_dict(data: dict) -> tuple[Graph, PartialEdgeColoring]:
    """Rebuild (graph, coloring) from the JSON form.

    Properness is NOT enforced here: verification must be able to load a
    corrupted file and report on it, so colors go through a raw rebuild.
    """
    palette = int(data["palette"])
    rows = data["edges"]
    max_id = -1
    pairs = []
    cols = []
    for row in rows:
        u, v, c = int(row[0]), int(row[1]), int(row[2])
        pairs.append((u, v))
        cols.append(c)
        max_id = max(max_id, u, v)
    g = Graph(max_id + 1, pairs)
    coloring = PartialEdgeColoring(g, palette)
    for eid, c in enumerate(cols):
        if c != 0:
            coloring._assignment[eid] = c
    coloring._index = coloring.rebuild_index()
    return g, coloring
