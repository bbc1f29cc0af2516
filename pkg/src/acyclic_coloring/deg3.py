"""Acyclic edge colorer for 3-degenerate graphs within max_degree + 5 colors.

Peels the graph with the special-edge rule (low-degree endpoint x, at most
three high-degree neighbors at y, x of minimum degree in N(y)) and extends
the coloring edge by edge through a case tree keyed on deg(x):

  deg(x) = 1  assign the smallest color missing at y;
  deg(x) = 2  one recoloring of x's other edge is enough;
  deg(x) = 3  scan the colors absent at both endpoints, then fall back to
              "freeing" a color at y (moving one low-degree y-edge onto a
              reserve color) and, if that also fails, recoloring one x-edge
              to reduce to an easier case.

Every mutation is guarded: preconditions are rechecked on the live state
and failed attempts are undone, so the search only commits moves that
provably keep the coloring acyclic.  Exhausting a case raises
ExtensionFailed with the offending state, which the bound proof rules out
for valid inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coloring import PartialEdgeColoring, is_acyclic
from .errors import ExtensionFailed, NotKDegenerate
from .graph import Graph, degeneracy, find_special_edge


class Not3Degenerate(NotKDegenerate):
    """Input graph has degeneracy greater than 3."""


@dataclass
class Deg3Context:
    """Extension state around the special edge xy.

    s_colors are the colors y sees on edges toward its low-degree
    neighbors; r_colors are absent at both x and y; s_prime are the
    non-freeable members of s_colors (at most 2 on valid inputs); t_colors
    are the colors outside F_x, (F_y minus S) and S', the pool the deg-3
    fallback draws from (at least max_degree - 1 on valid inputs).
    """

    x: int
    y: int
    n_prime: list[int]
    n_dprime: list[int]
    s_colors: set[int]
    s_edge: dict[int, int]
    r_colors: list[int]
    s_prime: set[int]
    freeable: dict[int, int]
    t_colors: list[int]


def _bump(stats: dict | None, key: str) -> None:
    if stats is not None:
        stats[key] = stats.get(key, 0) + 1


def _verify_step(g: Graph, c: PartialEdgeColoring, where: str) -> None:
    report = is_acyclic(g, c)
    if not (report.proper and report.acyclic):
        raise ExtensionFailed(f"intermediate state broken after {where}")


def _neighbor_split(g: Graph, c: PartialEdgeColoring, x: int, y: int):
    """N'(y), N''(y), S and the color -> y-edge map, ignoring x."""
    nbrs = [z for z in g.neighbors(y) if z != x]
    n_prime = sorted(z for z in nbrs if g.degree(z) <= 3)
    n_dprime = sorted(z for z in nbrs if g.degree(z) > 3)
    s_colors = set()
    s_edge: dict[int, int] = {}
    for z in n_prime:
        eid = g.edge_between(y, z)
        col = c.color_of(eid)
        if col is not None:
            s_colors.add(col)
            s_edge[col] = eid
    return n_prime, n_dprime, s_colors, s_edge


def is_freeable(
    g: Graph,
    c: PartialEdgeColoring,
    y: int,
    y_prime: int,
    r_colors,
) -> Optional[int]:
    """Smallest reserve color that the edge yy' can be recolored to without
    breaking properness or creating a bichromatic cycle; None if blocked.
    The coloring is left untouched.
    """
    eid = g.edge_between(y, y_prime)
    sigma = c.unassign(eid)
    try:
        candidates = c.candidate_colors(eid)
        for rho in sorted(r_colors):
            if rho in candidates and c.is_valid_color(eid, rho):
                return rho
        return None
    finally:
        c.assign(eid, sigma)


def build_context(g: Graph, c: PartialEdgeColoring, x: int, y: int) -> Deg3Context:
    """Full deg-3 extension context, including the freeable-color split."""
    fx = c.incident_colors(x)
    fy = c.incident_colors(y)
    n_prime, n_dprime, s_colors, s_edge = _neighbor_split(g, c, x, y)
    r_colors = sorted(
        col for col in range(1, c.palette + 1) if col not in fx and col not in fy
    )
    s_prime: set[int] = set()
    freeable: dict[int, int] = {}
    for sigma in sorted(s_colors):
        rho = is_freeable(g, c, y, g.other_end(s_edge[sigma], y), r_colors)
        if rho is None:
            s_prime.add(sigma)
        else:
            freeable[sigma] = rho
    excluded = fx | (fy - s_colors) | s_prime
    t_colors = sorted(
        col for col in range(1, c.palette + 1) if col not in excluded
    )
    return Deg3Context(
        x=x,
        y=y,
        n_prime=n_prime,
        n_dprime=n_dprime,
        s_colors=s_colors,
        s_edge=s_edge,
        r_colors=r_colors,
        s_prime=s_prime,
        freeable=freeable,
        t_colors=t_colors,
    )


def _diagnostics(g: Graph, c: PartialEdgeColoring, x: int, y: int, note: str) -> dict:
    return {
        "edge": (x, y),
        "palette": c.palette,
        "note": note,
        "edges": [(u, v, c.color_of(eid)) for eid, u, v in g.edges()],
    }


def _assign_checked(
    g: Graph, c: PartialEdgeColoring, eid: int, color: int, note: str
) -> None:
    """Assign a color the case analysis proved valid, verifying it anyway."""
    x, y = g.endpoints(eid)
    if color not in c.candidate_colors(eid) or not c.is_valid_color(eid, color):
        raise ExtensionFailed(
            f"{note}: color {color} not valid despite case guarantee",
            _diagnostics(g, c, x, y, note),
        )
    c.assign(eid, color)


def _smallest_outside(palette: int, blocked: set[int]) -> Optional[int]:
    for col in range(1, palette + 1):
        if col not in blocked:
            return col
    return None


def extend_edge_3deg(
    g: Graph,
    c: PartialEdgeColoring,
    x: int,
    y: int,
    check_steps: bool = False,
    stats: dict | None = None,
) -> str:
    """Color the special edge xy, preserving acyclicity.

    Returns the branch that completed the extension.  Recolors at most two
    other edges plus one freeing move.
    """
    eid_xy = g.edge_between(x, y)
    if eid_xy is None:
        raise ValueError(f"no edge {x}-{y}")
    dx = g.degree(x)
    if dx > 3:
        raise ValueError(f"deg({x}) = {dx} > 3; not a special edge")
    palette = c.palette
    max_degree = palette - 5

    if dx == 1:
        col = _smallest_outside(palette, c.incident_colors(y))
        if col is None:
            raise ExtensionFailed("pendant: palette exhausted", _diagnostics(g, c, x, y, "pendant"))
        _assign_checked(g, c, eid_xy, col, "pendant")
        _bump(stats, "deg3-pendant")
        return "pendant"

    for _round in range(8):
        if dx == 2:
            branch = _extend_deg2(g, c, x, y, eid_xy, check_steps, stats)
        else:
            branch = _extend_deg3(g, c, x, y, eid_xy, max_degree, check_steps, stats)
        if branch is not None:
            return branch
    raise ExtensionFailed(
        "case reductions did not terminate", _diagnostics(g, c, x, y, "loop")
    )


def _extend_deg2(g, c, x, y, eid_xy, check_steps, stats) -> Optional[str]:
    """deg(x) = 2: either the x'-edge color is harmless at y, or one
    recoloring of xx' makes it so.  Returns None to re-enter the dispatcher.
    """
    x_prime = next(u for u in g.neighbors(x) if u != y)
    e_xp = g.edge_between(x, x_prime)
    alpha = c.color_of(e_xp)
    fy = c.incident_colors(y)

    if alpha not in fy:
        # No color is common to both endpoints, so any candidate is valid.
        col = _smallest_outside(c.palette, fy | {alpha})
        if col is None:
            raise ExtensionFailed(
                "deg2-disjoint: palette exhausted",
                _diagnostics(g, c, x, y, "deg2-disjoint"),
            )
        _assign_checked(g, c, eid_xy, col, "deg2-disjoint")
        _bump(stats, "deg3-deg2-disjoint")
        return "deg2-disjoint"

    _, _, s_colors, _ = _neighbor_split(g, c, x, y)

    if alpha in s_colors:
        # alpha sits on a low-degree y-neighbor y', so at most two colors
        # beyond F_y can anchor a critical path; avoid them all.
        e_ya = c.edge_with_color(y, alpha)
        y_prime = g.other_end(e_ya, y)
        blocked = fy | c.incident_colors_minus_edge(y_prime, e_ya)
        col = _smallest_outside(c.palette, blocked)
        if col is None:
            raise ExtensionFailed(
                "deg2-in-s: palette exhausted", _diagnostics(g, c, x, y, "deg2-in-s")
            )
        _assign_checked(g, c, eid_xy, col, "deg2-in-s")
        _bump(stats, "deg3-deg2-in-s")
        return "deg2-in-s"

    # alpha in F_y but outside S: move xx' onto a color that is either
    # absent at y or lands in S, then redo the analysis.
    f_xp = c.incident_colors_minus_edge(x_prime, e_xp)
    blocked = f_xp | (fy - s_colors)
    beta = _smallest_outside(c.palette, blocked)
    if beta is None:
        raise ExtensionFailed(
            "deg2-recolor: palette exhausted", _diagnostics(g, c, x, y, "deg2-recolor")
        )
    c.recolor(e_xp, beta)
    if check_steps:
        _verify_step(g, c, "deg2 recolor")
    _bump(stats, "deg3-deg2-recolor")
    return None


def _extend_deg3(g, c, x, y, eid_xy, max_degree, check_steps, stats) -> Optional[str]:
    """deg(x) = 3 case tree.  Returns None to re-enter the dispatcher after
    a reduction step.
    """
    x1, x2 = sorted(u for u in g.neighbors(x) if u != y)
    e1, e2 = g.edge_between(x, x1), g.edge_between(x, x2)
    alpha, beta = c.color_of(e1), c.color_of(e2)
    fx = c.incident_colors(x)
    fy = c.incident_colors(y)

    # Phase 1: scan every color absent at both endpoints.
    for gamma in range(1, c.palette + 1):
        if gamma in fx or gamma in fy:
            continue
        if c.is_valid_color(eid_xy, gamma):
            c.assign(eid_xy, gamma)
            _bump(stats, "deg3-reserve-scan")
            return "reserve-scan"

    n_prime, n_dprime, s_colors, s_edge = _neighbor_split(g, c, x, y)
    if len(n_dprime) > 3:
        raise ExtensionFailed(
            f"special-edge invariant broken: {len(n_dprime)} high-degree neighbors",
            _diagnostics(g, c, x, y, "n-dprime"),
        )
    bad = [z for z in n_prime if g.degree(z) != 3]
    if bad:
        raise ExtensionFailed(
            f"min-degree choice broken: low neighbors {bad} of degree != 3",
            _diagnostics(g, c, x, y, "n-prime-degree"),
        )
    fy_minus_s = fy - s_colors

    if not ({alpha, beta} & fy_minus_s):
        # Both x-side colors are harmless (in S or absent at y): the exact
        # blocked set is F_x, F_y plus the side colors at the matching
        # low-degree y-neighbors.  The reserve scan above should already
        # have succeeded; kept for the reduction re-entries.
        blocked = fx | fy
        for theta in (alpha, beta):
            if theta in s_colors:
                e_ym = c.edge_with_color(y, theta)
                blocked |= c.incident_colors_minus_edge(g.other_end(e_ym, y), e_ym)
        col = _smallest_outside(c.palette, blocked)
        if col is None:
            raise ExtensionFailed(
                "deg3 harmless-pair: palette exhausted",
                _diagnostics(g, c, x, y, "harmless-pair"),
            )
        _assign_checked(g, c, eid_xy, col, "deg3-harmless-pair")
        _bump(stats, "deg3-harmless-pair")
        return "harmless-pair"

    # Phase 2: freeable machinery.
    ctx = build_context(g, c, x, y)
    _bump(stats, "deg3-invariant-checks")
    if len(ctx.s_prime) > 2:
        raise ExtensionFailed(
            f"invariant violated: {len(ctx.s_prime)} non-freeable colors",
            _diagnostics(g, c, x, y, "s-prime"),
        )
    if len(ctx.t_colors) < max_degree - 1:
        raise ExtensionFailed(
            f"invariant violated: |T| = {len(ctx.t_colors)} < {max_degree - 1}",
            _diagnostics(g, c, x, y, "t-size"),
        )

    # Scan T: reserve colors were already rejected, so only freeable
    # S-colors are left to try.  Free one tentatively and keep it if the
    # freed color is then valid for xy.
    for zeta in ctx.t_colors:
        if zeta not in ctx.freeable:
            continue
        e_yz = ctx.s_edge[zeta]
        c.recolor(e_yz, ctx.freeable[zeta])
        if check_steps:
            _verify_step(g, c, "freeing move")
        if zeta in c.candidate_colors(eid_xy) and c.is_valid_color(eid_xy, zeta):
            c.assign(eid_xy, zeta)
            _bump(stats, "deg3-freed")
            return "freed"
        c.recolor(e_yz, zeta)

    in_fy = [col in fy for col in (alpha, beta)]
    if in_fy == [True, False] or in_fy == [False, True]:
        return _reduce_one_common(
            g, c, x, y, eid_xy, (x1, alpha, x2, beta) if in_fy[0] else (x2, beta, x1, alpha),
            s_colors, fy_minus_s, ctx, check_steps, stats,
        )
    # Both x-side colors occur at y.
    orderings = []
    for a_vert, a_col, b_vert, b_col in (
        (x2, beta, x1, alpha),
        (x1, alpha, x2, beta),
    ):
        if b_col not in s_colors:
            orderings.append((a_vert, a_col, b_vert, b_col))
    if not orderings:
        raise ExtensionFailed(
            "both x-side colors in S contradicts case entry",
            _diagnostics(g, c, x, y, "ordering"),
        )
    for ordering in orderings:
        if _reduce_two_common(
            g, c, x, y, eid_xy, ordering, s_colors, fy_minus_s, ctx, check_steps, stats
        ):
            return None  # reduced to the one-common shape; re-enter
    raise ExtensionFailed(
        "deg3 two-common reductions exhausted", _diagnostics(g, c, x, y, "two-common")
    )


def _reduce_one_common(
    g, c, x, y, eid_xy, roles, s_colors, fy_minus_s, ctx, check_steps, stats
) -> Optional[str]:
    """Exactly one x-side color occurs at y.  All pool colors are blocked
    through it, which forces the other side color off the blocking
    neighbor; recolor that x-edge and redo the analysis.
    """
    a_vert, a_col, b_vert, b_col = roles
    e_a = g.edge_between(x, a_vert)
    f_xa = c.incident_colors_minus_edge(a_vert, e_a)
    if b_col in f_xa:
        raise ExtensionFailed(
            "one-common: second color present at blocking neighbor "
            "contradicts the exhausted T scan",
            _diagnostics(g, c, x, y, "one-common"),
        )
    blocked = f_xa | {b_col} | fy_minus_s
    gamma = _smallest_outside(c.palette, blocked)
    if gamma is None:
        raise ExtensionFailed(
            "one-common: palette exhausted", _diagnostics(g, c, x, y, "one-common-pool")
        )
    c.recolor(e_a, gamma)
    if check_steps:
        _verify_step(g, c, "one-common recolor")
    _bump(stats, "deg3-one-common-recolor")
    if gamma not in s_colors:
        # gamma avoids F_y entirely, so no color is common to x and y.
        fy_now = c.incident_colors(y)
        fx_now = c.incident_colors(x)
        col = _smallest_outside(c.palette, fy_now | fx_now)
        if col is None:
            raise ExtensionFailed(
                "one-common: palette exhausted after recolor",
                _diagnostics(g, c, x, y, "one-common-direct"),
            )
        _assign_checked(g, c, eid_xy, col, "one-common-direct")
        _bump(stats, "deg3-one-common-direct")
        return "one-common"
    return None  # gamma lies in S: re-enter, the harmless-pair case applies


def _reduce_two_common(
    g, c, x, y, eid_xy, roles, s_colors, fy_minus_s, ctx, check_steps, stats
) -> bool:
    """Both x-side colors occur at y; b_col is outside S.  Move the a-side
    edge onto a freed pool color (when b_col blocks at a_vert this needs
    the forced critical path), reducing to the one-common shape.  Returns
    True once a reduction was committed, False if this ordering has no
    witness.
    """
    a_vert, a_col, b_vert, b_col = roles
    e_a = g.edge_between(x, a_vert)
    f_xa = c.incident_colors_minus_edge(a_vert, e_a)

    if b_col in f_xa:
        for eta in ctx.t_colors:
            if eta in f_xa:
                continue
            freed_edge = None
            if eta in s_colors:
                if eta not in ctx.freeable:
                    continue
                freed_edge = ctx.s_edge[eta]
                c.recolor(freed_edge, ctx.freeable[eta])
                if check_steps:
                    _verify_step(g, c, "two-common freeing")
            # The recolor of e_a to eta is cycle-free only because the
            # (b_col, eta) path from x ends at y; verify on the live state.
            if (
                eta not in c.incident_colors_minus_edge(a_vert, e_a)
                and c.exists_critical_path(b_col, eta, x, y)
            ):
                c.recolor(e_a, eta)
                if check_steps:
                    _verify_step(g, c, "two-common recolor")
                _bump(stats, "deg3-two-common-recolor")
                return True
            if freed_edge is not None:
                c.recolor(freed_edge, eta)
        return False

    blocked = f_xa | {b_col} | fy_minus_s | ctx.s_prime | {a_col}
    gamma = _smallest_outside(c.palette, blocked)
    if gamma is None:
        return False
    if gamma in s_colors:
        if gamma not in ctx.freeable:
            return False
        c.recolor(ctx.s_edge[gamma], ctx.freeable[gamma])
        if check_steps:
            _verify_step(g, c, "two-common freeing")
    c.recolor(e_a, gamma)
    if check_steps:
        _verify_step(g, c, "two-common recolor")
    _bump(stats, "deg3-two-common-recolor")
    return True


def color_graph_3deg(
    g: Graph, check_steps: bool = False, stats: dict | None = None
) -> PartialEdgeColoring:
    """Total acyclic coloring of a 3-degenerate graph with max_degree + 5
    colors.  The palette is always max_degree + 5; the verifier reports how
    many colors were actually used.
    """
    d, _ = degeneracy(g)
    if d > 3:
        raise Not3Degenerate(f"graph has degeneracy {d} > 3")
    palette = g.max_degree() + 5
    work = g.copy()
    stack: list[tuple[int, int, int]] = []
    while work.m > 0:
        x, y = find_special_edge(work, 3)
        eid = work.edge_between(x, y)
        stack.append((eid, x, y))
        work.remove_edge(eid)
    coloring = PartialEdgeColoring(work, palette)
    for eid, x, y in reversed(stack):
        work.restore_edge(eid)
        extend_edge_3deg(work, coloring, x, y, check_steps=check_steps, stats=stats)
    return coloring
