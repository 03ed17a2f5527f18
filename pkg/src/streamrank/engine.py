"""Query-driven execution loop over a stream of edge updates.

Updates are buffered as they arrive and folded into the graph only when
a query shows up.  Each query then picks one of three strategies:

  repeat-last-answer   nothing changed since the last answer;
  compute-exact        full-graph kernel run;
  compute-approximate  hot-set selection, summary build, summarized run.

The loop owns all mutable state and is strictly single-threaded; replay
of the same inputs is bitwise deterministic (timings aside).
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .compute import ComputeConfig, RankVector, pagerank_exact, pagerank_summarized
from .errors import ConfigError
from .graph import DynamicGraph
from .hotset import HotSetParams, select_hot_set
from .streamio import ADD, QUERY, REMOVE, StreamEvent
from .summary import build_summary, summary_edge_count

REPEAT_LAST_ANSWER = "repeat-last-answer"
COMPUTE_APPROXIMATE = "compute-approximate"
COMPUTE_EXACT = "compute-exact"

MODE_ALWAYS_EXACT = "exact"
MODE_ALWAYS_APPROXIMATE = "approximate"
MODE_AUTO = "auto"


@dataclass
class UpdateBuffer:
    """Edge changes registered but not yet applied to the graph."""

    pending_adds: list[tuple[int, int]] = field(default_factory=list)
    pending_removes: list[tuple[int, int]] = field(default_factory=list)
    touched_vertices: set[int] = field(default_factory=set)

    @property
    def add_count(self) -> int:
        return len(self.pending_adds)

    @property
    def remove_count(self) -> int:
        return len(self.pending_removes)

    def is_empty(self) -> bool:
        return not self.pending_adds and not self.pending_removes

    def register_add(self, u: int, v: int) -> None:
        self.pending_adds.append((u, v))
        self.touched_vertices.add(u)
        self.touched_vertices.add(v)

    def register_remove(self, u: int, v: int) -> None:
        self.pending_removes.append((u, v))
        self.touched_vertices.add(u)
        self.touched_vertices.add(v)

    def clear(self) -> None:
        self.pending_adds.clear()
        self.pending_removes.clear()
        self.touched_vertices.clear()


@dataclass(frozen=True)
class AppliedSummary:
    adds_applied: int
    adds_noop: int
    removes_applied: int
    removes_noop: int


def apply_updates(g: DynamicGraph, buf: UpdateBuffer) -> AppliedSummary:
    """Fold pending changes into the graph: adds in order, then removes."""
    adds_ok = adds_noop = rem_ok = rem_noop = 0
    for u, v in buf.pending_adds:
        if g.add_edge(u, v):
            adds_ok += 1
        else:
            adds_noop += 1
    for u, v in buf.pending_removes:
        if g.remove_edge(u, v):
            rem_ok += 1
        else:
            rem_noop += 1
    buf.clear()
    return AppliedSummary(adds_ok, adds_noop, rem_ok, rem_noop)


@dataclass(frozen=True)
class StrategyPolicy:
    mode: str = MODE_ALWAYS_APPROXIMATE
    exact_refresh_period: int | None = None

    def __post_init__(self) -> None:
        if self.mode not in (MODE_ALWAYS_EXACT, MODE_ALWAYS_APPROXIMATE, MODE_AUTO):
            raise ConfigError(f"unknown strategy mode {self.mode!r}")
        if self.exact_refresh_period is not None and self.exact_refresh_period < 1:
            raise ConfigError("exact_refresh_period must be positive")


def decide_strategy(policy: StrategyPolicy, has_pending: bool, query_index: int) -> str:
    """Pick a strategy for one query.

    No pending updates means the previous answer is still current.
    Auto mode refreshes with an exact run every exact_refresh_period
    queries (the initial pre-stream run counts as query 0); without a
    period it stays approximate after that initial run.
    """
    if not has_pending:
        return REPEAT_LAST_ANSWER
    if policy.mode == MODE_ALWAYS_EXACT:
        return COMPUTE_EXACT
    if policy.mode == MODE_ALWAYS_APPROXIMATE:
        return COMPUTE_APPROXIMATE
    period = policy.exact_refresh_period
    if period is not None and query_index % period == 0:
        return COMPUTE_EXACT
    return COMPUTE_APPROXIMATE


@dataclass
class QueryRecord:
    query_index: int
    strategy: str
    elapsed_total: float
    elapsed_apply: float
    elapsed_summary: float
    elapsed_compute: float
    hot_count: int
    summary_edges: int
    total_edges: int
    total_vertices: int


@dataclass
class StreamResult:
    final_ranks: RankVector
    records: list[QueryRecord]
    per_query_ranks: list[RankVector]


def run_stream(
    g0: DynamicGraph,
    events: list[StreamEvent],
    params: HotSetParams,
    policy: StrategyPolicy,
    cfg: ComputeConfig,
    seed_delta_from_k_r: bool = False,
) -> StreamResult:
    """Replay a stream against a copy of g0 and answer every query.

    Begins with a complete kernel run over the initial graph
    (measurement point 0); stream queries are numbered from 1.  The
    degree snapshot feeding the next query's change ratios is taken
    right after updates are applied, so consecutive queries are the
    measurement points.
    """
    g = g0.copy()
    buf = UpdateBuffer()
    records: list[QueryRecord] = []
    per_query: list[RankVector] = []

    last_answer = pagerank_exact(g, cfg, measured_at=0)
    prev_snapshot = g.snapshot_degrees(0)
    query_index = 0

    for ev in events:
        if ev.kind == ADD:
            buf.register_add(*ev.edge)  # type: ignore[misc]
            continue
        if ev.kind == REMOVE:
            buf.register_remove(*ev.edge)  # type: ignore[misc]
            continue
        if ev.kind != QUERY:
            raise ConfigError(f"unknown event kind {ev.kind!r}")

        query_index += 1
        t_start = time.perf_counter()
        strategy = decide_strategy(policy, not buf.is_empty(), query_index)

        t0 = time.perf_counter()
        apply_updates(g, buf)
        elapsed_apply = time.perf_counter() - t0

        elapsed_summary = 0.0
        elapsed_compute = 0.0
        hot_count = 0
        summary_edges = 0

        if strategy == REPEAT_LAST_ANSWER:
            result = last_answer.copy()
            result.measured_at = query_index
        elif strategy == COMPUTE_EXACT:
            t0 = time.perf_counter()
            result = pagerank_exact(g, cfg, measured_at=query_index)
            elapsed_compute = time.perf_counter() - t0
            hot_count = g.vertex_count
            summary_edges = g.edge_count
        else:
            # new vertices have no prior score; they start at the same
            # initial value the cold kernel uses
            warm_scores = last_answer.scores
            warm = RankVector(
                {v: warm_scores.get(v, 1.0) for v in g.vertices},
                last_answer.measured_at,
            )
            t0 = time.perf_counter()
            hs = select_hot_set(
                g, prev_snapshot, warm, params,
                seed_delta_from_k_r=seed_delta_from_k_r,
            )
            summary = build_summary(g, set(hs.all), warm)
            elapsed_summary = time.perf_counter() - t0
            t0 = time.perf_counter()
            result = pagerank_summarized(summary, warm, cfg, measured_at=query_index)
            elapsed_compute = time.perf_counter() - t0
            hot_count = len(hs.all)
            summary_edges = summary_edge_count(summary)

        prev_snapshot = g.snapshot_degrees(query_index)
        elapsed_total = time.perf_counter() - t_start
        records.append(
            QueryRecord(
                query_index=query_index,
                strategy=strategy,
                elapsed_total=elapsed_total,
                elapsed_apply=elapsed_apply,
                elapsed_summary=elapsed_summary,
                elapsed_compute=elapsed_compute,
                hot_count=hot_count,
                summary_edges=summary_edges,
                total_edges=g.edge_count,
                total_vertices=g.vertex_count,
            )
        )
        per_query.append(result)
        last_answer = result

    return StreamResult(last_answer, records, per_query)
