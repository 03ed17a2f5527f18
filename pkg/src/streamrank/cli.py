"""Command-line interface.

Verbs:
  generate-stream   split a dataset into an initial graph + update stream
  run               replay a stream and write per-query CSV + rank files
  compare           score an approximate run directory against an exact one
  rbo               rank-biased overlap of two standalone rank files

Exit codes: 0 success, 1 usage/configuration error, 2 data error.
The output directory for `run` can be overridden with STREAMRANK_OUT_DIR.
"""
from __future__ import annotations

import argparse
import csv
import os
import sys
from pathlib import Path
from typing import Sequence

from .compute import ComputeConfig, RankVector, rank_descending
from .engine import (
    COMPUTE_APPROXIMATE,
    COMPUTE_EXACT,
    MODE_ALWAYS_APPROXIMATE,
    MODE_ALWAYS_EXACT,
    MODE_AUTO,
    QueryRecord,
    StrategyPolicy,
    run_stream,
)
from .errors import ConfigError, IntegrityError, ParseError, StreamRankError
from .hotset import HotSetParams
from .metrics import RboConfig, evaluate_run, rbo_ext
from .streamio import (
    StreamSpec,
    generate_stream,
    load_edge_list,
    read_stream,
    write_edge_list,
    write_stream,
)

RUN_CSV_COLUMNS = [
    "query_index",
    "strategy",
    "elapsed_total_ms",
    "elapsed_apply_ms",
    "elapsed_summary_ms",
    "elapsed_compute_ms",
    "hot_count",
    "summary_edges",
    "total_edges",
    "total_vertices",
    "rbo",
    "speedup",
    "edge_fraction",
]

EVAL_CSV_COLUMNS = ["query_index", "rbo", "speedup", "edge_fraction"]


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; this project
    # reserves 2 for data errors
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="streamrank", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate-stream", help="generate stream + initial graph")
    gen.add_argument("--dataset", required=True, help="edge-list file ('u v' lines)")
    gen.add_argument("--chunk-size", type=int, default=800)
    gen.add_argument("--removal-fraction", type=float, default=0.2)
    gen.add_argument("--queries", type=int, default=50)
    gen.add_argument("--shuffle", action="store_true")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out-stream", required=True)
    gen.add_argument("--out-initial", required=True)

    run = sub.add_parser("run", help="replay a stream and record per-query results")
    run.add_argument("--graph", required=True, help="initial graph edge-list file")
    run.add_argument("--stream", required=True, help="stream file (A/R/Q lines)")
    run.add_argument(
        "--mode",
        choices=[MODE_ALWAYS_EXACT, MODE_ALWAYS_APPROXIMATE, MODE_AUTO],
        default=MODE_ALWAYS_APPROXIMATE,
    )
    run.add_argument("--refresh-period", type=int, default=None)
    run.add_argument("--update-ratio", "-r", type=float, default=0.2, dest="ratio")
    run.add_argument("--neighborhood", "-n", type=int, default=0)
    run.add_argument("--delta", type=float, default=0.5)
    run.add_argument("--beta", type=float, default=0.85)
    run.add_argument("--iterations", type=int, default=30)
    run.add_argument(
        "--seed-delta-from-kr",
        action="store_true",
        help="also seed the delta expansion from the r tier (useful with n=0)",
    )
    run.add_argument("--out-dir", required=True)

    cmp = sub.add_parser("compare", help="evaluate an approximate run vs an exact run")
    cmp.add_argument("--exact-dir", required=True)
    cmp.add_argument("--approx-dir", required=True)
    cmp.add_argument("--p", type=float, default=0.98)
    cmp.add_argument("--depth-fraction", type=float, default=0.1)
    cmp.add_argument("--full-depth-period", type=int, default=10)
    cmp.add_argument("--out", required=True)

    rbo = sub.add_parser("rbo", help="RBO of two rank files")
    rbo.add_argument("ranks_a")
    rbo.add_argument("ranks_b")
    rbo.add_argument("--p", type=float, default=0.98)
    rbo.add_argument("--depth", type=int, default=None)
    return parser


# -- artifact I/O ----------------------------------------------------------


def write_ranks(rv: RankVector, path: Path) -> None:
    with path.open("w", encoding="ascii") as fh:
        for v in sorted(rv.scores):
            fh.write(f"{v} {rv.scores[v]:.12g}\n")


def read_ranks(path: Path) -> RankVector:
    scores: dict[int, float] = {}
    with path.open("r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(lineno, f"expected 'vertex score', got {line!r}")
            try:
                v, s = int(parts[0]), float(parts[1])
            except ValueError:
                raise ParseError(lineno, f"malformed rank line {line!r}") from None
            if v in scores:
                raise ParseError(lineno, f"duplicate vertex {v}")
            scores[v] = s
    return RankVector(scores)


def _rank_file(run_dir: Path, query_index: int) -> Path:
    return run_dir / "ranks" / f"q{query_index:04d}.txt"


def write_run_csv(records: Sequence[QueryRecord], path: Path) -> None:
    with path.open("w", newline="", encoding="ascii") as fh:
        writer = csv.writer(fh)
        writer.writerow(RUN_CSV_COLUMNS)
        for r in records:
            edge_fraction = ""
            if r.strategy in (COMPUTE_APPROXIMATE, COMPUTE_EXACT):
                edge_fraction = f"{r.summary_edges / r.total_edges:.12g}"
            writer.writerow(
                [
                    r.query_index,
                    r.strategy,
                    f"{r.elapsed_total * 1e3:.6f}",
                    f"{r.elapsed_apply * 1e3:.6f}",
                    f"{r.elapsed_summary * 1e3:.6f}",
                    f"{r.elapsed_compute * 1e3:.6f}",
                    r.hot_count,
                    r.summary_edges,
                    r.total_edges,
                    r.total_vertices,
                    "",  # rbo: needs a ground-truth run; see `compare`
                    "",  # speedup: likewise
                    edge_fraction,
                ]
            )


def read_run_records(run_dir: Path) -> list[QueryRecord]:
    path = run_dir / "records.csv"
    if not path.exists():
        raise ConfigError(f"missing {path}")
    records: list[QueryRecord] = []
    with path.open("r", newline="", encoding="ascii") as fh:
        for row in csv.DictReader(fh):
            records.append(
                QueryRecord(
                    query_index=int(row["query_index"]),
                    strategy=row["strategy"],
                    elapsed_total=float(row["elapsed_total_ms"]) / 1e3,
                    elapsed_apply=float(row["elapsed_apply_ms"]) / 1e3,
                    elapsed_summary=float(row["elapsed_summary_ms"]) / 1e3,
                    elapsed_compute=float(row["elapsed_compute_ms"]) / 1e3,
                    hot_count=int(row["hot_count"]),
                    summary_edges=int(row["summary_edges"]),
                    total_edges=int(row["total_edges"]),
                    total_vertices=int(row["total_vertices"]),
                )
            )
    return records


# -- commands --------------------------------------------------------------


def cmd_generate_stream(args: argparse.Namespace) -> int:
    full = load_edge_list(args.dataset)
    spec = StreamSpec(
        chunk_size=args.chunk_size,
        removal_fraction=args.removal_fraction,
        query_count=args.queries,
        shuffle=args.shuffle,
        rng_seed=args.seed,
    )
    initial, events = generate_stream(full, spec)
    with open(args.out_stream, "w", encoding="ascii") as fh:
        write_stream(events, fh)
    with open(args.out_initial, "w", encoding="ascii") as fh:
        write_edge_list(initial, fh)
    withheld = spec.chunk_size * spec.query_count
    print(
        f"withheld {withheld} of {full.edge_count} edges; "
        f"initial graph: {initial.vertex_count} vertices, "
        f"{initial.edge_count} edges"
    )
    return 0


def cmd_run(args: argparse.Namespace) -> int:
    out_dir = Path(os.environ.get("STREAMRANK_OUT_DIR", args.out_dir))
    g0 = load_edge_list(args.graph)
    with open(args.stream, "r", encoding="ascii") as fh:
        events = read_stream(fh)
    params = HotSetParams(args.ratio, args.neighborhood, args.delta)
    policy = StrategyPolicy(args.mode, args.refresh_period)
    cfg = ComputeConfig(args.beta, args.iterations)

    result = run_stream(
        g0, events, params, policy, cfg,
        seed_delta_from_k_r=args.seed_delta_from_kr,
    )

    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "ranks").mkdir(exist_ok=True)
    write_run_csv(result.records, out_dir / "records.csv")
    for record, rv in zip(result.records, result.per_query_ranks):
        write_ranks(rv, _rank_file(out_dir, record.query_index))
    write_ranks(result.final_ranks, out_dir / "final_ranks.txt")
    print(f"answered {len(result.records)} queries; results in {out_dir}")
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    exact_dir = Path(args.exact_dir)
    approx_dir = Path(args.approx_dir)
    cfg = RboConfig(args.p, args.depth_fraction, args.full_depth_period)
    exact_records = read_run_records(exact_dir)
    approx_records = read_run_records(approx_dir)

    def rankings(run_dir: Path, records: Sequence[QueryRecord]) -> list[list[int]]:
        out = []
        for r in records:
            path = _rank_file(run_dir, r.query_index)
            if not path.exists():
                raise ConfigError(f"missing per-query ranks: {path}")
            out.append(rank_descending(read_ranks(path)))
        return out

    rows = evaluate_run(
        approx_records,
        rankings(approx_dir, approx_records),
        exact_records,
        rankings(exact_dir, exact_records),
        cfg,
    )
    with open(args.out, "w", newline="", encoding="ascii") as fh:
        writer = csv.writer(fh)
        writer.writerow(EVAL_CSV_COLUMNS)
        for row in rows:
            writer.writerow(
                [
                    row.query_index,
                    f"{row.rbo:.12g}",
                    f"{row.speedup:.12g}",
                    f"{row.edge_fraction:.12g}",
                ]
            )
    mean_rbo = sum(r.rbo for r in rows) / len(rows)
    mean_speedup = sum(r.speedup for r in rows) / len(rows)
    print(f"{len(rows)} queries: mean rbo {mean_rbo:.6f}, mean speedup {mean_speedup:.3f}")
    return 0


def cmd_rbo(args: argparse.Namespace) -> int:
    a = rank_descending(read_ranks(Path(args.ranks_a)))
    b = rank_descending(read_ranks(Path(args.ranks_b)))
    depth = args.depth if args.depth is not None else min(len(a), len(b))
    print(f"{rbo_ext(a, b, args.p, depth):.6f}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "generate-stream": cmd_generate_stream,
        "run": cmd_run,
        "compare": cmd_compare,
        "rbo": cmd_rbo,
    }
    try:
        return handlers[args.command](args)
    except (ParseError, IntegrityError) as exc:
        print(f"streamrank: data error: {exc}", file=sys.stderr)
        return 2
    except (ConfigError, OSError) as exc:
        print(f"streamrank: {exc}", file=sys.stderr)
        return 1
    except StreamRankError as exc:
        print(f"streamrank: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
