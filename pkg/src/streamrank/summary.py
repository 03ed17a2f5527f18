"""Summary graph construction: hot vertices plus one aggregate vertex.

Every non-hot vertex is collapsed into a single aggregate.  Edges
between hot vertices survive with weight 1/d_out(source), where d_out
is the degree in the FULL graph (edges leaving the hot set are dropped
from the summary but still dilute their source's emissions).  Edges
from non-hot sources into hot targets are pre-aggregated per target
into a constant inflow, valid for as long as non-hot scores stay
frozen.  Edges entirely outside the hot set vanish.
"""
from __future__ import annotations

from dataclasses import dataclass

from .compute import RankVector
from .errors import IntegrityError
from .graph import DynamicGraph


@dataclass(frozen=True)
class SummaryGraph:
    hot: frozenset[int]
    # (source, target, 1/d_out(source)), target-major, sources ascending
    intra_edges: list[tuple[int, int, float]]
    # target -> sum of frozen_score(source)/d_out(source) over non-hot sources
    boundary_inflow: dict[int, float]
    # how many (non-hot source, hot target) edges fed boundary_inflow
    boundary_pair_count: int
    # total inflow mass of the aggregate vertex
    aggregate_mass: float
    # scores of every non-hot vertex, constant during a summarized run
    frozen_scores: dict[int, float]


def build_summary(g: DynamicGraph, hot: set[int], ranks: RankVector) -> SummaryGraph:
    """Classify every in-edge of the hot set and freeze the rest.

    Pure function: iteration is target-major in ascending id order with
    ascending sources, so edge lists and float accumulations are
    reproducible.
    """
    scores = ranks.scores
    for v in hot:
        if not g.has_vertex(v):
            raise IntegrityError(f"hot vertex {v} not in graph")
    for v in g.vertices:
        if v not in scores:
            raise IntegrityError(f"vertex {v} missing from rank vector")

    intra: list[tuple[int, int, float]] = []
    inflow: dict[int, float] = {}
    pairs = 0
    for z in sorted(hot):
        acc = 0.0
        seen_boundary = False
        for w in g.in_neighbors(z):
            if w in hot:
                intra.append((w, z, 1.0 / g.out_degree(w)))
            else:
                acc += scores[w] / g.out_degree(w)
                pairs += 1
                seen_boundary = True
        if seen_boundary:
            inflow[z] = acc

    mass = 0.0
    for z in sorted(inflow):
        mass += inflow[z]

    frozen = {v: scores[v] for v in g.vertices if v not in hot}
    return SummaryGraph(
        hot=frozenset(hot),
        intra_edges=intra,
        boundary_inflow=inflow,
        boundary_pair_count=pairs,
        aggregate_mass=mass,
        frozen_scores=frozen,
    )


def summary_edge_count(s: SummaryGraph) -> int:
    """Edges the summarized computation still touches."""
    return len(s.intra_edges) + s.boundary_pair_count
