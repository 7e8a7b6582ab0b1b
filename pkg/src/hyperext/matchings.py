"""Matching number, rainbow matchings, and the greedy constructions.

The matching number is computed by exhaustive branch and bound: branch
on every edge through the lowest-indexed covered vertex versus
discarding that vertex, pruning with floor(covered/r) plus the current
depth.  Exactness is non-negotiable; exceeding the node budget raises
instead of approximating.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ColoredFamily, Hypergraph, neighborhood


class BudgetExceededError(RuntimeError):
    """A search exceeded its configured node budget."""


@dataclass(frozen=True)
class Matching:
    """A list of pairwise-disjoint edges, as vertex masks."""

    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class RainbowMatching:
    """One edge per color, pairwise disjoint: pairs (color index, edge mask)."""

    picks: tuple[tuple[int, int], ...]


def is_valid_matching(h: Hypergraph, m: Matching) -> bool:
    used = 0
    for e in m.edges:
        if e not in h.edge_set or e & used:
            return False
        used |= e
    return True


def is_valid_rainbow_matching(fam: ColoredFamily, rm: RainbowMatching) -> bool:
    colors = sorted(c for c, _ in rm.picks)
    if colors != list(range(1, fam.k + 1)):
        return False
    used = 0
    for color, e in rm.picks:
        if e not in fam.members[color - 1].edge_set or e & used:
            return False
        used |= e
    return True


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int | None):
        self.left = limit

    def spend(self) -> None:
        if self.left is None:
            return
        self.left -= 1
        if self.left < 0:
            raise BudgetExceededError("matching search node budget exceeded")


def matching_number(
    h: Hypergraph, node_budget: int | None = None
) -> tuple[int, Matching]:
    """Exact ν(h) and a maximum matching witnessing it."""
    budget = _Budget(node_budget)
    best: list[int] = []
    cur: list[int] = []
    r = h.r

    def rec(avail: list[int]) -> None:
        budget.spend()
        nonlocal best
        if len(cur) > len(best):
            best = cur.copy()
        if not avail:
            return
        cover = 0
        for e in avail:
            cover |= e
        if len(cur) + min(len(avail), cover.bit_count() // r) <= len(best):
            return
        vbit = cover & -cover
        for e in avail:
            if e & vbit:
                cur.append(e)
                rec([f for f in avail if not f & e])
                cur.pop()
        rec([f for f in avail if not f & vbit])

    rec(list(h.edges))
    return len(best), Matching(tuple(best))


def _exists_matching(avail: list[int], need: int, r: int, budget: _Budget) -> bool:
    """True iff ``need`` pairwise-disjoint edges can be picked from ``avail``."""
    budget.spend()
    if need <= 0:
        return True
    if len(avail) < need:
        return False
    cover = 0
    for e in avail:
        cover |= e
    if cover.bit_count() // r < need:
        return False
    vbit = cover & -cover
    for e in avail:
        if e & vbit:
            if _exists_matching([f for f in avail if not f & e], need - 1, r, budget):
                return True
    return _exists_matching([f for f in avail if not f & vbit], need, r, budget)


def has_matching_at_most(
    h: Hypergraph, k: int, node_budget: int | None = None
) -> bool:
    """True iff ν(h) <= k; stops as soon as k+1 disjoint edges are found."""
    if k < 0:
        return not h.edges
    return not _exists_matching(list(h.edges), k + 1, h.r, _Budget(node_budget))


def find_rainbow_matching(fam: ColoredFamily) -> RainbowMatching | None:
    """Exhaustive backtracking; colors tried in ascending edge-count order."""
    order = sorted(range(fam.k), key=lambda i: (len(fam.members[i].edges), i))
    picks: list[tuple[int, int]] = []

    def rec(pos: int, used: int) -> bool:
        if pos == fam.k:
            return True
        ci = order[pos]
        for e in fam.members[ci].edges:
            if not e & used:
                picks.append((ci + 1, e))
                if rec(pos + 1, used | e):
                    return True
                picks.pop()
        return False

    if rec(0, 0):
        picks.sort()
        return RainbowMatching(tuple(picks))
    return None


def greedy_matching_from_high_degree_vertices(
    h: Hypergraph, vertices: list[int]
) -> Matching | None:
    """Greedy step i: first edge through v_i avoiding earlier edges and later v_j.

    ``vertices`` are distinct 1-indexed labels.  Succeeds whenever the
    degree hypothesis deg(v_i) > 2(k-1) C(n-2, r-2) holds (with rk <= n);
    may return None otherwise.
    """
    if len(set(vertices)) != len(vertices):
        raise ValueError("vertices must be distinct")
    chosen: list[int] = []
    used = 0
    for i, v in enumerate(vertices):
        vbit = 1 << (v - 1)
        later = 0
        for w in vertices[i + 1 :]:
            later |= 1 << (w - 1)
        pick = None
        for e in h.edges:
            if e & vbit and not e & used and not e & later:
                pick = e
                break
        if pick is None:
            return None
        chosen.append(pick)
        used |= pick
    return Matching(tuple(chosen))


def greedy_matching_from_disjoint_tuples(
    h: Hypergraph, tuples: list[int]
) -> Matching | None:
    """Greedy step i: first B_i in N(A_i) avoiding every A_j and earlier B_j.

    ``tuples`` are pairwise-disjoint a-set masks with a < r; a large
    enough common degree of the A_i guarantees success.  Returns the
    matching {A_i ∪ B_i} on success.
    """
    all_a = 0
    for a_mask in tuples:
        if a_mask & all_a:
            raise ValueError("tuples must be pairwise disjoint")
        if a_mask.bit_count() >= h.r:
            raise ValueError("each tuple must have fewer than r vertices")
        all_a |= a_mask
    chosen: list[int] = []
    used_b = 0
    for a_mask in tuples:
        pick = None
        for b in neighborhood(h, a_mask):
            if not b & all_a and not b & used_b:
                pick = b
                break
        if pick is None:
            return None
        chosen.append(a_mask | pick)
        used_b |= pick
    return Matching(tuple(chosen))
