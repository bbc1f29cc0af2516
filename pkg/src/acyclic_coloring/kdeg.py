"""Acyclic edge colorer for k-degenerate graphs with k >= 4.

Uses ceil((k+1)/2 * max_degree) + 1 colors.  The graph is peeled to the
empty edge set by repeatedly removing an edge with a low-degree endpoint;
edges are then restored in reverse order and the coloring is extended one
edge at a time.  Each extension first tries plain valid colors; when every
candidate is blocked it recolors at most two edges at the low-degree
endpoint to unblock a once-occurring candidate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import PartialEdgeColoring, is_acyclic
from .errors import ExtensionFailed, KTooSmall, NotKDegenerate
from .graph import Graph, degeneracy, find_low_degree_edge


def palette_size_k(k: int, max_degree: int) -> int:
    """ceil((k+1)/2 * max_degree) + 1, in exact integer arithmetic."""
    if k < 4:
        raise KTooSmall(f"large-k colorer requires k >= 4, got {k}")
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    return ((k + 1) * max_degree + 1) // 2 + 1


@dataclass
class KdegContext:
    """Extension state around the uncolored edge xy (x is the low-degree
    endpoint).  S holds the neighbors of x whose x-edge color also appears
    at y; candidate colors occurring exactly once among edge incidences at
    x's other neighbors form c_star, the recoloring currency.
    """

    x: int
    y: int
    s_vertices: list[int]
    e_star: set[int]
    colors_seen: set[int]
    c_prime: set[int]
    c_dprime: set[int]
    c_star: set[int]
    carriers: list[int] = field(default_factory=list)


def build_context(g: Graph, c: PartialEdgeColoring, x: int, y: int) -> KdegContext:
    fx = c.incident_colors(x)
    fy = c.incident_colors(y)
    nbrs_x = [u for u in g.neighbors(x) if u != y]
    s_vertices = sorted(
        u for u in nbrs_x if c.color_of(g.edge_between(x, u)) in fy
    )
    e_star: set[int] = set()
    for v in s_vertices + [x, y]:
        for _, eid in g.incident(v):
            e_star.add(eid)
    colors_seen = set()
    for eid in e_star:
        col = c.color_of(eid)
        if col is not None:
            colors_seen.add(col)
    c_prime = {col for col in range(1, c.palette + 1) if col not in fx and col not in fy}
    c_dprime = fx | fy
    # Occurrences are counted per (neighbor-of-x, incident edge) pair, so an
    # edge joining two neighbors of x counts twice.  Exactly-once colors are
    # then pinned to a single neighbor, which the recoloring branches rely on.
    counts: dict[int, int] = {}
    for u in nbrs_x:
        for _, eid in g.incident(u):
            col = c.color_of(eid)
            if col is not None:
                counts[col] = counts.get(col, 0) + 1
    c_star = {col for col in c_prime if counts.get(col, 0) == 1}
    carriers = sorted(
        u
        for u in s_vertices
        if c_star & c.incident_colors_minus_edge(u, g.edge_between(x, u))
    )
    return KdegContext(
        x=x,
        y=y,
        s_vertices=s_vertices,
        e_star=e_star,
        colors_seen=colors_seen,
        c_prime=c_prime,
        c_dprime=c_dprime,
        c_star=c_star,
        carriers=carriers,
    )


def _bump(stats: dict | None, key: str) -> None:
    if stats is not None:
        stats[key] = stats.get(key, 0) + 1


def _verify_step(g: Graph, c: PartialEdgeColoring, where: str) -> None:
    report = is_acyclic(g, c)
    if not (report.proper and report.acyclic):
        raise ExtensionFailed(f"intermediate state broken after {where}")


def extend_edge_kdeg(
    g: Graph,
    c: PartialEdgeColoring,
    x: int,
    y: int,
    k: int,
    check_steps: bool = False,
    stats: dict | None = None,
) -> str:
    """Color the edge xy, recoloring at most two other edges at x.

    Requires deg(x) <= k and an acyclic coloring of all other edges.
    Returns the branch taken: "direct", "two-carrier" or "one-carrier".
    """
    eid_xy = g.edge_between(x, y)
    if eid_xy is None:
        raise ValueError(f"no edge {x}-{y}")
    if g.degree(x) > k:
        raise ValueError(f"deg({x}) = {g.degree(x)} > k = {k}")

    gamma = c.smallest_valid_color(eid_xy)
    if gamma is not None:
        c.assign(eid_xy, gamma)
        _bump(stats, "kdeg-direct")
        return "direct"

    ctx = build_context(g, c, x, y)

    if len(ctx.carriers) >= 2:
        _bump(stats, "kdeg-two-carrier")
        for x1 in ctx.carriers:
            for x2 in ctx.carriers:
                if x1 == x2:
                    continue
                e1 = g.edge_between(x, x1)
                e2 = g.edge_between(x, x2)
                alpha = c.color_of(e1)
                cols1 = sorted(ctx.c_star & c.incident_colors_minus_edge(x1, e1))
                cols2 = sorted(ctx.c_star & c.incident_colors_minus_edge(x2, e2))
                for gamma in cols1:
                    for eta in cols2:
                        if eta == gamma:
                            continue
                        # Guards before mutating: the recolor must stay proper
                        # and the path that blocked gamma must end at y.
                        if gamma in c.incident_colors_minus_edge(x2, e2):
                            continue
                        if not c.exists_critical_path(alpha, gamma, x, y):
                            continue
                        old = c.recolor(e2, gamma)
                        if check_steps:
                            _verify_step(g, c, "two-carrier recolor")
                        if eta in c.candidate_colors(eid_xy) and c.is_valid_color(
                            eid_xy, eta
                        ):
                            c.assign(eid_xy, eta)
                            return "two-carrier"
                        c.recolor(e2, old)
        raise ExtensionFailed(
            "two-carrier branch exhausted", _diagnostics(g, c, x, y, ctx)
        )

    if len(ctx.carriers) == 1:
        _bump(stats, "kdeg-one-carrier")
        x_prime = ctx.carriers[0]
        e_xp = g.edge_between(x, x_prime)
        zeta = c.color_of(e_xp)
        f_xp = c.incident_colors_minus_edge(x_prime, e_xp)
        others = sorted(u for u in g.neighbors(x) if u not in (y, x_prime))
        c_star_sorted = sorted(ctx.c_star)
        for gamma in sorted(ctx.c_prime - f_xp):
            spots = [
                u for u in others if gamma in c.incident_colors_minus_edge(u, g.edge_between(x, u))
            ]
            if not 1 <= len(spots) <= 2 or len(spots) > len(c_star_sorted):
                continue
            replacements = c_star_sorted[: len(spots)]
            ok = True
            for u, new_col in zip(spots, replacements):
                e_u = g.edge_between(x, u)
                if new_col in c.incident_colors_minus_edge(u, e_u):
                    ok = False
                    break
                if not c.exists_critical_path(zeta, new_col, x, y):
                    ok = False
                    break
            if not ok:
                continue
            olds = []
            for u, new_col in zip(spots, replacements):
                e_u = g.edge_between(x, u)
                olds.append((e_u, c.recolor(e_u, new_col)))
            if check_steps:
                _verify_step(g, c, "one-carrier recolor")
            if gamma in c.candidate_colors(eid_xy) and c.is_valid_color(eid_xy, gamma):
                c.assign(eid_xy, gamma)
                return "one-carrier"
            for e_u, old in reversed(olds):
                c.recolor(e_u, old)
        raise ExtensionFailed(
            "one-carrier branch exhausted", _diagnostics(g, c, x, y, ctx)
        )

    raise ExtensionFailed("no carrier vertex found", _diagnostics(g, c, x, y, ctx))


def _diagnostics(g: Graph, c: PartialEdgeColoring, x: int, y: int, ctx) -> dict:
    return {
        "edge": (x, y),
        "palette": c.palette,
        "edges": [(u, v, c.color_of(eid)) for eid, u, v in g.edges()],
        "context": ctx,
    }


def color_graph_kdeg(
    g: Graph, k: int, check_steps: bool = False, stats: dict | None = None
) -> PartialEdgeColoring:
    """Total acyclic coloring of a k-degenerate graph, k >= 4, within
    palette_size_k(k, max_degree) colors.
    """
    if k < 4:
        raise KTooSmall(f"large-k colorer requires k >= 4, got {k}")
    d, _ = degeneracy(g)
    if d > k:
        raise NotKDegenerate(f"graph has degeneracy {d} > k = {k}")
    palette = palette_size_k(k, g.max_degree()) if g.m > 0 else 0
    work = g.copy()
    stack: list[tuple[int, int, int]] = []
    while work.m > 0:
        x, y = find_low_degree_edge(work, k)
        eid = work.edge_between(x, y)
        stack.append((eid, x, y))
        work.remove_edge(eid)
    coloring = PartialEdgeColoring(work, palette)
    for eid, x, y in reversed(stack):
        work.restore_edge(eid)
        extend_edge_kdeg(work, coloring, x, y, k, check_steps=check_steps, stats=stats)
    return coloring
