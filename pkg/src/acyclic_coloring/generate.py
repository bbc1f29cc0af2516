"""Seeded graph generators: random k-degenerate graphs and named families.

The RNG is Python's Mersenne Twister (random.Random); given the same spec
the edge set is identical down to insertion order, so serialized outputs
are byte-stable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BadSpec
from .graph import Graph

FAMILIES = (
    "random-kdeg",
    "path",
    "cycle",
    "star",
    "complete",
    "wheel",
    "subcubic-random",
)


@dataclass
class GenSpec:
    family: str
    n: int
    k: int = 1
    seed: int = 0


def random_k_degenerate(n: int, k: int, seed: int) -> Graph:
    """Add vertices one at a time; vertex i picks uniformly between 0 and
    min(k, i) earlier neighbors without replacement.  The result is
    k-degenerate by construction (insertion order is an elimination order
    read backwards).
    """
    if n < 1 or k < 1:
        raise BadSpec(f"need n >= 1 and k >= 1, got n={n} k={k}")
    rng = random.Random(seed)
    edges = []
    for i in range(1, n):
        d = rng.randint(0, min(k, i))
        for j in sorted(rng.sample(range(i), d)):
            edges.append((j, i))
    return Graph(n, edges)


def path(n: int) -> Graph:
    if n < 1:
        raise BadSpec(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadSpec(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    if n < 1:
        raise BadSpec(f"star needs n >= 1, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise BadSpec(f"complete graph needs n >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def wheel(n: int) -> Graph:
    """Hub 0 joined to the rim cycle 1..n-1."""
    if n < 4:
        raise BadSpec(f"wheel needs n >= 4, got {n}")
    rim = [(i, i + 1 if i + 1 < n else 1) for i in range(1, n)]
    spokes = [(0, i) for i in range(1, n)]
    return Graph(n, rim + spokes)


def subcubic_random(n: int, seed: int) -> Graph:
    """Random simple graph with max degree <= 3 (hence 3-degenerate)."""
    if n < 1:
        raise BadSpec(f"subcubic-random needs n >= 1, got {n}")
    rng = random.Random(seed)
    g = Graph(n)
    deg = [0] * n
    adj = [set() for _ in range(n)]
    edges = []
    for _ in range(3 * n):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v or v in adj[u] or deg[u] >= 3 or deg[v] >= 3:
            continue
        adj[u].add(v)
        adj[v].add(u)
        deg[u] += 1
        deg[v] += 1
        edges.append((u, v))
    return Graph(n, edges)


def build(spec: GenSpec) -> Graph:
    """Dispatch a GenSpec to its family constructor."""
    if spec.family == "random-kdeg":
        return random_k_degenerate(spec.n, spec.k, spec.seed)
    if spec.family == "path":
        return path(spec.n)
    if spec.family == "cycle":
        return cycle(spec.n)
    if spec.family == "star":
        return star(spec.n)
    if spec.family == "complete":
        return complete(spec.n)
    if spec.family == "wheel":
        return wheel(spec.n)
    if spec.family == "subcubic-random":
        return subcubic_random(spec.n, spec.seed)
    raise BadSpec(f"unknown family {spec.family!r}; known: {', '.join(FAMILIES)}")
