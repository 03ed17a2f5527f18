"""Approximate processing of evolving directed graphs.

Maintains a dynamic graph under edge add/remove streams and answers
rank queries either exactly or over a summary graph in which all
low-churn vertices are collapsed into a single aggregate vertex with
frozen contributions.
"""

from .compute import ComputeConfig, RankVector, pagerank_exact, pagerank_summarized, rank_descending
from .engine import QueryRecord, StrategyPolicy, StreamResult, UpdateBuffer, run_stream
from .errors import ConfigError, IntegrityError, ParseError, StreamRankError
from .graph import DegreeSnapshot, DynamicGraph
from .hotset import HotSet, HotSetParams, delta_hops, select_hot_set
from .metrics import EvaluationRow, RboConfig, evaluate_run, rbo_ext
from .streamio import StreamEvent, StreamSpec, generate_stream, parse_edge_list
from .summary import SummaryGraph, build_summary, summary_edge_count

__all__ = [
    "ComputeConfig",
    "ConfigError",
    "DegreeSnapshot",
    "DynamicGraph",
    "EvaluationRow",
    "HotSet",
    "HotSetParams",
    "IntegrityError",
    "ParseError",
    "QueryRecord",
    "RankVector",
    "RboConfig",
    "StrategyPolicy",
    "StreamEvent",
    "StreamRankError",
    "StreamResult",
    "StreamSpec",
    "SummaryGraph",
    "UpdateBuffer",
    "build_summary",
    "delta_hops",
    "evaluate_run",
    "generate_stream",
    "pagerank_exact",
    "pagerank_summarized",
    "parse_edge_list",
    "rank_descending",
    "rbo_ext",
    "run_stream",
    "select_hot_set",
    "summary_edge_count",
]
