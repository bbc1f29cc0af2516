"""Shared builders and independent oracles for the test suite.

The helpers here deliberately avoid the code paths they are used to check:
candidate sets come from a direct properness filter, critical paths from a
brute-force enumeration of alternating simple paths, and random colorings
are grown with assign + full acyclicity recheck rather than is_valid_color.
"""

from __future__ import annotations

import itertools
import random

from acyclic_coloring import Graph, PartialEdgeColoring, is_acyclic


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def colored(g: Graph, assignments: dict[int, int], palette: int) -> PartialEdgeColoring:
    c = PartialEdgeColoring(g, palette)
    for eid, col in assignments.items():
        c.assign(eid, col)
    return c


def brute_force_candidates(g: Graph, c: PartialEdgeColoring, eid: int) -> set[int]:
    """Colors assignable to eid without a properness violation, found by
    trying each one against the raw incident edges."""
    u, v = g.endpoints(eid)
    out = set()
    for gamma in range(1, c.palette + 1):
        clash = False
        for w in (u, v):
            for _, other in g.incident(w):
                if other != eid and c.color_of(other) == gamma:
                    clash = True
        if not clash:
            out.add(gamma)
    return out


def enumerate_critical_path(
    g: Graph, c: PartialEdgeColoring, alpha: int, beta: int, u: int, v: int
) -> bool:
    """Brute-force: does a maximal (alpha,beta)-path starting at u with an
    alpha edge end at v with an alpha edge?  Enumerates every alternating
    simple path by DFS over the raw adjacency.
    """

    def edges_with(w: int, color: int, used: set[int]) -> list[int]:
        return [
            eid
            for _, eid in g.incident(w)
            if eid not in used and c.color_of(eid) == color
        ]

    found = False

    def dfs(w: int, want: int, visited: list[int], used: set[int], last_color: int):
        nonlocal found
        if found:
            return
        nexts = [
            eid
            for eid in edges_with(w, want, used)
            if g.other_end(eid, w) not in visited
        ]
        if not nexts:
            # Maximal at the far end (no continuing edge, or it folds back
            # into the path); also require maximality on the u side.
            start_back = [
                eid
                for _, eid in g.incident(u)
                if c.color_of(eid) == beta and g.other_end(eid, u) not in visited
            ]
            if w == v and last_color == alpha and not start_back:
                found = True
            return
        for eid in nexts:
            nxt = g.other_end(eid, w)
            dfs(
                nxt,
                alpha if want == beta else beta,
                visited + [nxt],
                used | {eid},
                want,
            )

    for _, eid in g.incident(u):
        if c.color_of(eid) == alpha:
            w = g.other_end(eid, u)
            dfs(w, beta, [u, w], {eid}, alpha)
    return found


def random_proper_acyclic(
    g: Graph, palette: int, rng: random.Random, fill: float = 0.6
) -> PartialEdgeColoring:
    """Grow a random proper acyclic partial coloring using only assign and
    the full acyclicity recheck (independent of the validity predicate)."""
    c = PartialEdgeColoring(g, palette)
    eids = [e for e, _, _ in g.edges()]
    rng.shuffle(eids)
    for eid in eids[: int(len(eids) * fill) + 1]:
        cands = sorted(c.candidate_colors(eid))
        rng.shuffle(cands)
        for gamma in cands:
            c.assign(eid, gamma)
            if is_acyclic(g, c).acyclic:
                break
            c.unassign(eid)
    return c


def connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def labeled_connected_graphs(n: int):
    """Every connected labeled simple graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1, 1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph(n, edges)
        if connected(g):
            yield g
