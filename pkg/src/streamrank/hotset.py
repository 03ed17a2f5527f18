"""Hot-vertex selection.

The vertices whose scores get recomputed on an approximate query form
three disjoint tiers:

  tier r      vertices whose out-degree changed by more than the ratio
              threshold since the previous measurement point (new
              vertices always qualify);
  tier n      vertices within a fixed hop radius of tier r;
  tier delta  vertices reached by a score-sensitive frontier expansion
              seeded at tier n, where each candidate's admissible hop
              depth shrinks with its degree and grows with its score.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .compute import RankVector
from .errors import ConfigError
from .graph import DegreeSnapshot, DynamicGraph


@dataclass(frozen=True)
class HotSetParams:
    update_ratio: float  # r
    neighborhood: int  # n
    delta: float

    def __post_init__(self) -> None:
        if self.update_ratio < 0:
            raise ConfigError("update ratio threshold must be >= 0")
        if self.neighborhood < 0:
            raise ConfigError("neighborhood diameter must be >= 0")
        if self.delta <= 0:
            raise ConfigError("delta bound must be > 0")


@dataclass(frozen=True)
class HotSet:
    k_r: frozenset[int]
    k_n: frozenset[int]
    k_delta: frozenset[int]

    @property
    def all(self) -> frozenset[int]:
        return self.k_r | self.k_n | self.k_delta

    def __len__(self) -> int:
        return len(self.k_r) + len(self.k_n) + len(self.k_delta)


def select_k_r(g: DynamicGraph, prev: DegreeSnapshot, r: float) -> set[int]:
    """Vertices whose relative out-degree change exceeds r, plus new ones.

    A vertex absent from the snapshot is new and always included.  A
    known vertex whose previous degree was zero is included iff it now
    has edges (the change ratio is effectively infinite); zero before
    and zero now is no change.
    """
    hot: set[int] = set()
    prev_deg = prev.degrees
    for u in g.vertices:
        d_prev = prev_deg.get(u)
        if d_prev is None:
            hot.add(u)
        elif d_prev == 0:
            if g.out_degree(u) > 0:
                hot.add(u)
        elif abs(g.out_degree(u) / d_prev - 1.0) > r:
            hot.add(u)
    return hot


def select_k_n(g: DynamicGraph, k_r: set[int], n: int) -> set[int]:
    """Vertices within n out-hops of the r tier, excluding the tier itself."""
    if n == 0 or not k_r:
        return set()
    reached = g.bfs_out(k_r, n)
    return set(reached) - k_r


def delta_hops(score: float, out_degree: int, avg_degree: float, delta: float) -> float:
    """Admissible hop depth before a vertex's influence dilutes below delta.

    A score propagates with attenuation ~1/avg_degree per hop; this
    returns the real-valued hop count at which the propagated fraction
    of `score` drops to delta.  Degenerate inputs (avg degree <= 1,
    dangling vertex, non-positive score) yield 0: no expansion.
    """
    if avg_degree <= 1.0 or out_degree <= 0 or score <= 0.0 or delta <= 0.0:
        return 0.0
    return math.log(avg_degree * score / (delta * out_degree)) / math.log(avg_degree)


def select_k_delta(
    g: DynamicGraph,
    k_r: set[int],
    k_n: set[int],
    ranks: RankVector,
    avg_degree: float,
    delta: float,
    seed_from_k_r: bool = False,
) -> set[int]:
    """Score-bounded frontier expansion seeded at the n tier.

    A candidate first reached at hop h is admitted iff h <= its
    delta_hops budget; the frontier only advances through admitted
    vertices.  Rejected candidates stay rejected (their budget is fixed
    while later paths can only be longer).

    seed_from_k_r additionally seeds the expansion from the r tier;
    with n = 0 the n tier is empty and the expansion would otherwise
    never start.
    """
    seeds = set(k_n)
    if seed_from_k_r:
        seeds |= k_r
    if not seeds:
        return set()
    blocked = k_r | k_n
    scores = ranks.scores
    included: set[int] = set()
    visited = set(seeds)
    frontier = sorted(seeds)
    hop = 0
    while frontier:
        hop += 1
        nxt: list[int] = []
        for u in frontier:
            for v in g.out_neighbors(u):
                if v in visited:
                    continue
                visited.add(v)
                if v in blocked:
                    continue
                budget = delta_hops(scores[v], g.out_degree(v), avg_degree, delta)
                if hop <= budget:
                    included.add(v)
                    nxt.append(v)
        frontier = nxt
    return included


def select_hot_set(
    g: DynamicGraph,
    prev: DegreeSnapshot,
    ranks: RankVector,
    params: HotSetParams,
    avg_degree: float | None = None,
    seed_delta_from_k_r: bool = False,
) -> HotSet:
    """Compose the three tiers in order: r, then n, then delta."""
    if avg_degree is None:
        avg_degree = g.average_out_degree()
    k_r = select_k_r(g, prev, params.update_ratio)
    k_n = select_k_n(g, k_r, params.neighborhood)
    k_delta = select_k_delta(
        g, k_r, k_n, ranks, avg_degree, params.delta, seed_from_k_r=seed_delta_from_k_r
    )
    return HotSet(frozenset(k_r), frozenset(k_n), frozenset(k_delta))
