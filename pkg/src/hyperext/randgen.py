"""Seeded random generators for property sweeps.

Every stream is fully determined by its ``random.Random`` instance, so a
single integer seed reproduces a whole run byte for byte.
"""

from __future__ import annotations

import random
from itertools import combinations

from .core import ColoredFamily, Hypergraph
from .extremal import binom


def random_hypergraph(
    rng: random.Random, n: int, r: int, density: float | None = None
) -> Hypergraph:
    """Each r-set kept independently; density drawn uniformly if omitted."""
    if density is None:
        density = rng.random()
    masks = []
    for c in combinations(range(n), r):
        if rng.random() < density:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
    masks.sort()
    return Hypergraph._make(n, r, tuple(masks))


def random_family_above_edge_threshold(
    rng: random.Random, n: int, r: int, k: int
) -> ColoredFamily:
    """k colors, each with more than (k-1) C(n-1, r-1) random edges.

    This is the edge-count hypothesis under which a rainbow matching is
    guaranteed for n >= rk.
    """
    threshold = (k - 1) * binom(n - 1, r - 1)
    universe = []
    for c in combinations(range(n), r):
        m = 0
        for v in c:
            m |= 1 << v
        universe.append(m)
    if threshold >= len(universe):
        raise ValueError(
            f"edge threshold {threshold} not satisfiable with C({n},{r}) edges"
        )
    members = []
    for _ in range(k):
        size = rng.randint(threshold + 1, len(universe))
        masks = rng.sample(universe, size)
        masks.sort()
        members.append(Hypergraph._make(n, r, tuple(masks)))
    return ColoredFamily(n, r, tuple(members))
