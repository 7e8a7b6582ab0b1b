"""Desk-scale exhaustive verification of the extremal statements.

The search space is reduced to stable hypergraphs: shifting never
decreases clique counts and never increases the matching number, so the
maximum of K_s^r over all r-graphs with ν <= k is attained on a stable
one.  A slow full-enumeration mode over every edge subset exists as a
meta-check of that reduction at tiny sizes.
"""

from __future__ import annotations

import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .cliques import count_cliques, enumerate_cliques
from .core import ColoredFamily, Hypergraph, serialize
from .extremal import (
    ExtremalParams,
    binom,
    build_extremal_family,
    closed_form_clique_count,
    rainbow_hypothesis_check,
    theorem_bound,
)
from .matchings import find_rainbow_matching, has_matching_at_most
from .randgen import random_family_above_edge_threshold
from .shifting import enumerate_stable

CONFIRMED = "confirmed"
BOUND_NOT_YET_ACTIVE = "bound-not-yet-active"
COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class VerificationReport:
    cell: dict
    regime: str | None
    claimed_bound: int
    observed_max: int
    witness: Hypergraph | None
    status: str
    nodes: int
    millis: int

    def to_json_line(self, *, omit_timing: bool = False) -> str:
        obj = {
            "schema": "hyperext/1",
            "cell": self.cell,
            "regime": self.regime,
            "claimed_bound": str(self.claimed_bound),
            "observed_max": str(self.observed_max),
            "status": self.status,
            "witness": serialize(self.witness) if self.witness else None,
            "nodes": self.nodes,
            "millis": 0 if omit_timing else self.millis,
        }
        return json.dumps(obj, separators=(",", ":"))


def stable_with_matching_at_most(n: int, r: int, k: int, **kw):
    """All stable r-graphs on [n] with ν <= k, via pruned downset search."""
    return enumerate_stable(n, r, lambda h: has_matching_at_most(h, k), **kw)


def _all_hypergraphs(n: int, r: int):
    """Every r-graph on [n]; only for tiny C(n, r)."""
    universe = []
    for c in combinations(range(n), r):
        m = 0
        for v in c:
            m |= 1 << v
        universe.append(m)
    universe.sort()
    m_count = len(universe)
    if m_count > 20:
        raise ValueError(
            f"full enumeration over 2^{m_count} edge subsets refused (max 2^20)"
        )
    for bits in range(1 << m_count):
        edges = tuple(universe[i] for i in range(m_count) if bits >> i & 1)
        yield Hypergraph._make(n, r, edges)


def _regime_threshold(params: ExtremalParams) -> float:
    k, r, s = params.k, params.r, params.s
    regime = params.regime
    if regime == "I":
        return 4 * (math.e * r) ** (s - r + 2) * k
    if regime == "II":
        a = params.a
        return 4 * r * r * k * (math.e * r / (a - 1)) ** (s - r + a)
    return r * k + r - 1


def verify_extremal_cell(
    n: int,
    k: int,
    r: int,
    s: int,
    *,
    full_enumeration: bool = False,
    leaf_budget: int | None = None,
) -> VerificationReport:
    """Max of K_s^r over (stable) r-graphs with ν <= k versus the bound.

    In regime III the second-maximum gap is verified as well: a gap
    violation is reported as a counterexample.
    """
    start = time.monotonic()
    params = ExtremalParams(n=n, k=k, r=r, s=s)
    bound, regime, gap_bound = theorem_bound(params)

    observed = -1
    witness: Hypergraph | None = None
    second_best = 0
    nodes = 0
    if full_enumeration:
        candidates = (
            h for h in _all_hypergraphs(n, r) if has_matching_at_most(h, k)
        )
    else:
        candidates = stable_with_matching_at_most(n, r, k, leaf_budget=leaf_budget)
    for h in candidates:
        nodes += 1
        val = count_cliques(h, s).total
        if val > observed:
            observed = val
            witness = h
        if val < bound and val > second_best:
            second_best = val

    gap_ok = True
    if regime == "III" and gap_bound is not None and n >= r * k + r - 1:
        gap_ok = second_best <= gap_bound

    if not gap_ok:
        status = COUNTEREXAMPLE
    elif observed == bound:
        status = CONFIRMED
    elif observed > bound:
        threshold = _regime_threshold(params)
        status = COUNTEREXAMPLE if n >= threshold else BOUND_NOT_YET_ACTIVE
    else:
        status = BOUND_NOT_YET_ACTIVE

    millis = int((time.monotonic() - start) * 1000)
    return VerificationReport(
        cell={"n": n, "k": k, "r": r, "s": s},
        regime=regime,
        claimed_bound=bound,
        observed_max=observed,
        witness=witness,
        status=status,
        nodes=nodes,
        millis=millis,
    )


def verify_rainbow_cell(
    n: int, k: int, r: int, t: int, trials: int, seed: int = 0
) -> VerificationReport:
    """Random hypothesis-passing families must contain a rainbow matching;
    the boundary family (every color the level-1 extremal family on k-1)
    must not, confirming strictness of the hypothesis."""
    start = time.monotonic()
    rng = random.Random(seed)
    expected = trials + 1
    good = 0
    nodes = 0
    for _ in range(trials):
        fam = random_family_above_edge_threshold(rng, n, r, k)
        nodes += 1
        if all(rainbow_hypothesis_check(fam, t)) and find_rainbow_matching(fam):
            good += 1
    # boundary: all colors equal to the head-(k-1) family
    if k >= 2:
        boundary_member = build_extremal_family(n, k - 1, r, 1)
    else:
        boundary_member = Hypergraph._make(n, r, ())
    boundary = ColoredFamily(n, r, (boundary_member,) * k)
    nodes += 1
    if find_rainbow_matching(boundary) is None:
        good += 1
    status = CONFIRMED if good == expected else COUNTEREXAMPLE
    millis = int((time.monotonic() - start) * 1000)
    return VerificationReport(
        cell={"n": n, "k": k, "r": r, "t": t, "trials": trials, "seed": seed},
        regime=None,
        claimed_bound=expected,
        observed_max=good,
        witness=None,
        status=status,
        nodes=nodes,
        millis=millis,
    )


def verify_proposition_3_2(
    n: int, k: int, r: int, s: int, *, leaf_budget: int | None = None
) -> VerificationReport:
    """Stable, ν <= k, every edge in an s-clique => every edge has at
    least a = floor((s-r)/k)+1 vertices in [rk+a-1]."""
    start = time.monotonic()
    if not k + r <= s <= r * k + r - 1:
        raise ValueError(f"need k+r <= s <= rk+r-1, got s={s}, k={k}, r={r}")
    a = (s - r) // k + 1
    head_mask = (1 << (r * k + a - 1)) - 1
    violations = 0
    nodes = 0
    witness = None
    for h in stable_with_matching_at_most(n, r, k, leaf_budget=leaf_budget):
        nodes += 1
        if not h.edges:
            continue
        cliques = list(enumerate_cliques(h, s))
        if not all(any(c & e == e for c in cliques) for e in h.edges):
            continue  # precondition filter: some edge lies in no s-clique
        for e in h.edges:
            if (e & head_mask).bit_count() < a:
                violations += 1
                if witness is None:
                    witness = h
    status = CONFIRMED if violations == 0 else COUNTEREXAMPLE
    millis = int((time.monotonic() - start) * 1000)
    return VerificationReport(
        cell={"n": n, "k": k, "r": r, "s": s},
        regime=None,
        claimed_bound=0,
        observed_max=violations,
        witness=witness,
        status=status,
        nodes=nodes,
        millis=millis,
    )


def _cell_worker(cell: tuple[int, int, int, int]) -> VerificationReport:
    n, k, r, s = cell
    return verify_extremal_cell(n, k, r, s)


def run_extremal_sweep(
    cells: list[tuple[int, int, int, int]], jobs: int = 1
) -> list[VerificationReport]:
    """Run independent cells, results ordered by cell key regardless of
    completion order."""
    ordered = sorted(set(cells))
    if jobs <= 1:
        return [_cell_worker(c) for c in ordered]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_cell_worker, ordered))
