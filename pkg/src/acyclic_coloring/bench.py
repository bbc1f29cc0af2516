"""Seeded benchmark corpus: color every instance, verify, and cross-check
against the exact oracle on the small ones.
"""

from __future__ import annotations

import time
from typing import Optional

from .generate import (
    complete,
    cycle,
    path,
    random_k_degenerate,
    star,
    subcubic_random,
    wheel,
)
from .graph import Graph
from .oracle import exact_acyclic_chromatic_index
from .runner import run_color

CSV_HEADER = (
    "family,n,k,max_degree,degeneracy,algorithm,palette,colors_used,"
    "oracle_exact,verified,wall_time_s"
)


def default_corpus(seed: int = 0, max_n: int = 24) -> list[tuple[str, Optional[int], Graph]]:
    """(family label, k or None, graph) triples; deterministic given seed."""
    out: list[tuple[str, Optional[int], Graph]] = []
    for n in (4, 6, max_n):
        out.append(("path", None, path(n)))
    for n in (4, 6, min(12, max_n)):
        out.append(("cycle", None, cycle(n)))
    for n in (5, 9, max_n):
        out.append(("star", None, star(n)))
    for n in (5, 8, min(20, max_n)):
        out.append(("wheel", None, wheel(n)))
    for n in (4, 5):
        out.append(("complete", None, complete(n)))
    for i, k in enumerate((2, 3, 4, 6)):
        for j, n in enumerate((8, max_n)):
            out.append(("random-kdeg", k, random_k_degenerate(n, k, seed + 97 * i + j)))
    for j, n in enumerate((10, max_n)):
        out.append(("subcubic-random", None, subcubic_random(n, seed + 7 * j)))
    return out


def run_bench(seed: int = 0, max_n: int = 24, oracle_max_n: int = 7) -> list[dict]:
    rows = []
    for family, k, g in default_corpus(seed=seed, max_n=max_n):
        t0 = time.perf_counter()
        run = run_color(g, algorithm="auto", verify=True)
        elapsed = time.perf_counter() - t0
        oracle_exact = None
        if g.n <= oracle_max_n:
            oracle_exact = exact_acyclic_chromatic_index(
                g, g.max_degree() + 5
            ).exact_index
        rows.append(
            {
                "family": family,
                "n": g.n,
                "k": k,
                "max_degree": g.max_degree(),
                "degeneracy": run.degeneracy,
                "algorithm": run.algorithm,
                "palette": run.palette,
                "colors_used": run.report.colors_used,
                "oracle_exact": oracle_exact,
                "verified": run.report.ok,
                "wall_time_s": round(elapsed, 6),
            }
        )
    return rows


def rows_to_csv(rows: list[dict]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        oracle = "" if r["oracle_exact"] is None else str(r["oracle_exact"])
        k = "" if r["k"] is None else str(r["k"])
        lines.append(
            f"{r['family']},{r['n']},{k},{r['max_degree']},{r['degeneracy']},"
            f"{r['algorithm']},{r['palette']},{r['colors_used']},{oracle},"
            f"{str(r['verified']).lower()},{r['wall_time_s']}"
        )
    return "\n".join(lines) + "\n"
