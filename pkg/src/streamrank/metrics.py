"""Rank-biased overlap and run-vs-run evaluation.

RBO compares two rankings with geometrically decaying weight per depth,
so agreement near the top counts far more than agreement in the tail.
The extrapolated variant is used: overlap observed down to the
evaluation depth k is assumed to persist beyond it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .engine import QueryRecord
from .errors import ConfigError, IntegrityError


@dataclass(frozen=True)
class RboConfig:
    # persistence 0.98 puts ~86% of the weight on the top 50 ranks
    p: float = 0.98
    depth_fraction: float = 0.1
    full_depth_period: int = 10

    def __post_init__(self) -> None:
        if not 0.0 < self.p < 1.0:
            raise ConfigError("persistence p must be in (0, 1)")
        if not 0.0 < self.depth_fraction <= 1.0:
            raise ConfigError("depth_fraction must be in (0, 1]")
        if self.full_depth_period < 1:
            raise ConfigError("full_depth_period must be positive")


@dataclass(frozen=True)
class EvaluationRow:
    query_index: int
    rbo: float
    speedup: float
    edge_fraction: float


def rbo_ext(
    list_a: Sequence[int], list_b: Sequence[int], p: float, depth: int
) -> float:
    """Extrapolated rank-biased overlap at the given evaluation depth.

    With agreement A_d = |prefix_d(a) ∩ prefix_d(b)| / d, the value is
    sum_{d=1..k} A_d (1-p) p^(d-1)  +  A_k p^k, evaluated as a Horner
    recurrence from the tail.  For p >= 0.5 this makes identical lists
    score exactly 1.0 and disjoint lists exactly 0.0.
    """
    if depth < 1:
        raise ConfigError("evaluation depth must be positive")
    if not 0.0 < p < 1.0:
        raise ConfigError("persistence p must be in (0, 1)")
    if depth > len(list_a) or depth > len(list_b):
        raise ConfigError(
            f"depth {depth} exceeds a ranking length "
            f"({len(list_a)} and {len(list_b)})"
        )
    a = list(list_a[:depth])
    b = list(list_b[:depth])
    if len(set(a)) != depth:
        raise IntegrityError("first ranking contains duplicates")
    if len(set(b)) != depth:
        raise IntegrityError("second ranking contains duplicates")

    seen_a: set[int] = set()
    seen_b: set[int] = set()
    overlap = 0
    agreement = [0.0] * depth
    for d in range(depth):
        x, y = a[d], b[d]
        if x == y:
            overlap += 1
        else:
            if x in seen_b:
                overlap += 1
            if y in seen_a:
                overlap += 1
            seen_a.add(x)
            seen_b.add(y)
        agreement[d] = overlap / (d + 1)

    one_minus_p = 1.0 - p
    acc = agreement[-1]  # extrapolated tail term A_k p^k
    for d in range(depth - 1, -1, -1):
        acc = agreement[d] * one_minus_p + p * acc
    return acc


def evaluation_depth(cfg: RboConfig, query_index: int, vertex_count: int) -> int:
    """Per-query comparison depth; periodically the full vertex count."""
    if query_index % cfg.full_depth_period == 0:
        return vertex_count
    return max(1, math.ceil(cfg.depth_fraction * vertex_count))


def evaluate_run(
    approx_records: Sequence[QueryRecord],
    approx_rankings: Sequence[Sequence[int]],
    exact_records: Sequence[QueryRecord],
    exact_rankings: Sequence[Sequence[int]],
    cfg: RboConfig,
) -> list[EvaluationRow]:
    """Score an approximate run against its exact ground-truth twin."""
    if len(approx_records) != len(exact_records):
        raise ConfigError(
            f"query counts differ: {len(approx_records)} vs {len(exact_records)}"
        )
    if len(approx_rankings) != len(approx_records) or len(exact_rankings) != len(
        exact_records
    ):
        raise ConfigError("one ranking per query record is required")

    rows: list[EvaluationRow] = []
    for ar, al, er, el in zip(
        approx_records, approx_rankings, exact_records, exact_rankings
    ):
        if ar.query_index != er.query_index:
            raise ConfigError(
                f"query index mismatch: {ar.query_index} vs {er.query_index}"
            )
        depth = evaluation_depth(cfg, er.query_index, er.total_vertices)
        depth = min(depth, len(al), len(el))
        rows.append(
            EvaluationRow(
                query_index=ar.query_index,
                rbo=rbo_ext(al, el, cfg.p, depth),
                speedup=er.elapsed_total / ar.elapsed_total,
                edge_fraction=ar.summary_edges / ar.total_edges,
            )
        )
    return rows
