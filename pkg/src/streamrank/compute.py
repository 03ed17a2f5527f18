"""Vertex-centric rank kernels (exact and summarized).

Both kernels run synchronous Jacobi-style iterations: every update in
round k reads only round k-1 scores.  Per-vertex message summation is
in ascending source-id order, and per-edge contributions are formed as
score * (1 / d_out) in both kernels, so the summarized kernel with all
vertices hot reproduces the exact kernel bit for bit.

Dangling vertices emit nothing; their lost mass is not redistributed.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import chain
from typing import TYPE_CHECKING, Iterable

from .errors import IntegrityError
from .graph import DynamicGraph

if TYPE_CHECKING:
    from .summary import SummaryGraph


@dataclass
class RankVector:
    """Per-vertex scores labeled with the measurement point they answer."""

    scores: dict[int, float]
    measured_at: int = 0

    def copy(self) -> "RankVector":
        return RankVector(dict(self.scores), self.measured_at)


@dataclass(frozen=True)
class ComputeConfig:
    beta: float = 0.85
    iterations: int = 30

    def __post_init__(self) -> None:
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError("beta must be in [0, 1]")
        if self.iterations < 1:
            raise ValueError("iterations must be positive")


class PageRankAggregation:
    """Folds incoming messages into (1 - beta) + beta * sum.

    The seam for other random-walk style aggregations: anything with an
    apply(messages) -> float method can replace it in the kernels.
    Summation follows the order of the incoming iterable.
    """

    __slots__ = ("beta",)

    def __init__(self, beta: float):
        self.beta = beta

    def apply(self, messages: Iterable[float]) -> float:
        total = 0.0
        for m in messages:
            total += m
        return (1.0 - self.beta) + self.beta * total


def pagerank_exact(
    g: DynamicGraph,
    cfg: ComputeConfig,
    warm: RankVector | None = None,
    aggregation: PageRankAggregation | None = None,
    measured_at: int = 0,
) -> RankVector:
    """Fixed-iteration power method over the full graph.

    Cold starts initialize every score to 1.0.  A warm start must cover
    every vertex.
    """
    agg = aggregation if aggregation is not None else PageRankAggregation(cfg.beta)
    verts = sorted(g.vertices)
    if warm is None:
        scores = {v: 1.0 for v in verts}
    else:
        try:
            scores = {v: warm.scores[v] for v in verts}
        except KeyError as exc:
            raise IntegrityError(f"warm start missing vertex {exc.args[0]}") from None
    inv_deg = {u: 1.0 / len(g.out_neighbors(u)) for u in verts if g.out_degree(u) > 0}
    in_neighbors = g.in_neighbors
    for _ in range(cfg.iterations):
        scores = {
            v: agg.apply(scores[u] * inv_deg[u] for u in in_neighbors(v))
            for v in verts
        }
    return RankVector(scores, measured_at)


def pagerank_summarized(
    s: "SummaryGraph",
    warm: RankVector,
    cfg: ComputeConfig,
    aggregation: PageRankAggregation | None = None,
    measured_at: int = 0,
) -> RankVector:
    """Iterate only over hot vertices against frozen boundary inflow.

    Hot scores warm-start from `warm`; every non-hot vertex keeps its
    frozen score.  Returns a full rank vector (hot merged over frozen).
    """
    agg = aggregation if aggregation is not None else PageRankAggregation(cfg.beta)
    hot_sorted = sorted(s.hot)
    try:
        scores = {v: warm.scores[v] for v in hot_sorted}
    except KeyError as exc:
        raise IntegrityError(f"hot vertex {exc.args[0]} missing from warm start") from None

    # group intra edges per target, sources ascending (builder order)
    intra_in: dict[int, list[tuple[int, float]]] = {v: [] for v in hot_sorted}
    for u, v, val in s.intra_edges:
        intra_in[v].append((u, val))
    inflow = s.boundary_inflow

    for _ in range(cfg.iterations):
        scores = {
            v: agg.apply(
                chain(
                    (inflow.get(v, 0.0),),
                    (scores[u] * val for u, val in intra_in[v]),
                )
            )
            for v in hot_sorted
        }

    merged = dict(s.frozen_scores)
    merged.update(scores)
    return RankVector(merged, measured_at)


def rank_descending(rv: RankVector) -> list[int]:
    """Vertices by score descending; ties break toward smaller ids."""
    return sorted(rv.scores, key=lambda v: (-rv.scores[v], v))
