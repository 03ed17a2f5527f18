"""Edge-list parsing and reproducible stream generation.

A stream is generated by withholding a uniform sample of edges from the
dataset and replaying them as additions, interleaved with removals and
queries.  Removals only ever target edges that are present in the
evolving graph and were either part of the initial graph or added in a
chunk preceding an earlier query, so a generated stream is always valid
when replayed onto the initial graph.

File formats (ASCII, newline-terminated):
  dataset:  "u v" per line, '#'/'%' comment lines allowed
  stream:   "A u v" / "R u v" / "Q" per line
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import IO, Iterable

from .errors import ConfigError, ParseError
from .graph import DynamicGraph

ADD = "A"
REMOVE = "R"
QUERY = "Q"


@dataclass(frozen=True)
class StreamEvent:
    kind: str
    edge: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.kind == QUERY:
            if self.edge is not None:
                raise ValueError("query events carry no edge")
        elif self.kind in (ADD, REMOVE):
            if self.edge is None:
                raise ValueError(f"{self.kind} events require an edge")
        else:
            raise ValueError(f"unknown event kind {self.kind!r}")


def add_event(u: int, v: int) -> StreamEvent:
    return StreamEvent(ADD, (u, v))


def remove_event(u: int, v: int) -> StreamEvent:
    return StreamEvent(REMOVE, (u, v))


QUERY_EVENT = StreamEvent(QUERY)


@dataclass(frozen=True)
class StreamSpec:
    """Parameters of a generated stream.

    chunk_size edges are added before each of query_count queries;
    floor(removal_fraction * chunk_size) removals accompany each chunk.
    """

    chunk_size: int
    removal_fraction: float
    query_count: int
    shuffle: bool = False
    rng_seed: int = 0

    def __post_init__(self) -> None:
        if self.chunk_size < 1:
            raise ConfigError("chunk_size must be positive")
        if not 0.0 <= self.removal_fraction <= 1.0:
            raise ConfigError("removal_fraction must be in [0, 1]")
        if self.query_count < 1:
            raise ConfigError("query_count must be positive")


# -- parsing ---------------------------------------------------------------


def parse_edge_list(lines: Iterable[str]) -> DynamicGraph:
    """Parse "u v" lines into a graph; duplicates collapse to one edge."""
    g = DynamicGraph()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("%"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer vertex id in {line!r}") from None
        if u < 0 or v < 0:
            raise ParseError(lineno, f"negative vertex id in {line!r}")
        g.add_edge(u, v)
    return g


def load_edge_list(path: str) -> DynamicGraph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_edge_list(fh)


def read_stream(lines: Iterable[str]) -> list[StreamEvent]:
    events: list[StreamEvent] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == QUERY and len(parts) == 1:
            events.append(QUERY_EVENT)
            continue
        if parts[0] in (ADD, REMOVE) and len(parts) == 3:
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, f"non-integer vertex id in {line!r}") from None
            if u < 0 or v < 0:
                raise ParseError(lineno, f"negative vertex id in {line!r}")
            events.append(StreamEvent(parts[0], (u, v)))
            continue
        raise ParseError(lineno, f"unrecognized stream line {line!r}")
    return events


def write_stream(events: Iterable[StreamEvent], out: IO[str]) -> None:
    for ev in events:
        if ev.kind == QUERY:
            out.write("Q\n")
        else:
            u, v = ev.edge  # type: ignore[misc]
            out.write(f"{ev.kind} {u} {v}\n")


def write_edge_list(g: DynamicGraph, out: IO[str]) -> None:
    for u, v in g.edges():
        out.write(f"{u} {v}\n")


# -- generation ------------------------------------------------------------


def generate_stream(
    full_graph: DynamicGraph, spec: StreamSpec
) -> tuple[DynamicGraph, list[StreamEvent]]:
    """Split a dataset into an initial graph and a replayable stream.

    Pure function of (full_graph, spec): the RNG is a seeded
    random.Random (Mersenne Twister) over the sorted edge list, so the
    same inputs always produce byte-identical artifacts.
    """
    edges = list(full_graph.edges())
    withhold = spec.chunk_size * spec.query_count
    if withhold > len(edges):
        raise ConfigError(
            f"spec needs {withhold} withheld edges but dataset has {len(edges)}"
        )
    rng = random.Random(spec.rng_seed)
    withheld = rng.sample(edges, withhold)
    if spec.shuffle:
        rng.shuffle(withheld)

    withheld_set = set(withheld)
    initial = DynamicGraph()
    removable: list[tuple[int, int]] = []
    for e in edges:
        if e not in withheld_set:
            initial.add_edge(*e)
            removable.append(e)

    removals_per_chunk = int(spec.removal_fraction * spec.chunk_size)
    events: list[StreamEvent] = []
    for q in range(spec.query_count):
        chunk = withheld[q * spec.chunk_size : (q + 1) * spec.chunk_size]
        events.extend(StreamEvent(ADD, e) for e in chunk)
        if removals_per_chunk > len(removable):
            raise ConfigError("removal fraction exhausts the removable edge pool")
        for _ in range(removals_per_chunk):
            i = rng.randrange(len(removable))
            e = removable[i]
            removable[i] = removable[-1]
            removable.pop()
            events.append(StreamEvent(REMOVE, e))
        events.append(QUERY_EVENT)
        # this chunk's additions become removable only after the query
        # that ingested them has run
        removable.extend(chunk)
    return initial, events
