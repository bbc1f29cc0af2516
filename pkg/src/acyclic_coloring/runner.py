"""Algorithm selection and one-shot color-and-verify runs, shared by the
HTTP service, the bench harness and the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coloring import ColoringReport, PartialEdgeColoring
from .deg3 import Not3Degenerate, color_graph_3deg
from .errors import NotKDegenerate
from .graph import Graph, degeneracy
from .kdeg import color_graph_kdeg, palette_size_k
from .oracle import verify_coloring

ALGORITHMS = ("auto", "kdeg", "deg3")


@dataclass
class ColorRun:
    coloring: PartialEdgeColoring
    algorithm: str
    k: Optional[int]
    palette: int
    degeneracy: int
    report: Optional[ColoringReport]


def choose_algorithm(g: Graph, algorithm: str = "auto", k: Optional[int] = None):
    """Resolve (algorithm, effective k).  auto picks deg3 for degeneracy <= 3
    and kdeg with k = degeneracy otherwise; an explicit k below the input's
    degeneracy is rejected; kdeg with k <= 3 is routed to deg3.
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    d, _ = degeneracy(g)
    if k is not None and k < d:
        raise NotKDegenerate(f"explicit k={k} below input degeneracy {d}")
    if algorithm == "auto":
        if d <= 3:
            return "deg3", None, d
        return "kdeg", max(4, d), d
    if algorithm == "deg3":
        if d > 3:
            raise Not3Degenerate(f"graph has degeneracy {d} > 3")
        return "deg3", None, d
    k_eff = k if k is not None else max(4, d)
    if k_eff <= 3:
        if d > 3:
            raise Not3Degenerate(f"graph has degeneracy {d} > 3")
        return "deg3", None, d
    return "kdeg", k_eff, d


def run_color(
    g: Graph,
    algorithm: str = "auto",
    k: Optional[int] = None,
    verify: bool = True,
    check_steps: bool = False,
    stats: Optional[dict] = None,
) -> ColorRun:
    algo, k_eff, d = choose_algorithm(g, algorithm, k)
    if algo == "deg3":
        coloring = color_graph_3deg(g, check_steps=check_steps, stats=stats)
    else:
        coloring = color_graph_kdeg(g, k_eff, check_steps=check_steps, stats=stats)
    report = verify_coloring(g, coloring, coloring.palette) if verify else None
    return ColorRun(
        coloring=coloring,
        algorithm=algo,
        k=k_eff,
        palette=coloring.palette,
        degeneracy=d,
        report=report,
    )


def guaranteed_palette(g: Graph, algorithm: str, k: Optional[int]) -> int:
    """Palette size the chosen algorithm is guaranteed to succeed with."""
    if algorithm == "deg3":
        return g.max_degree() + 5
    return palette_size_k(k, g.max_degree())
