"""Dynamic directed graph backed by sorted adjacency lists.

Both out- and in-adjacency are kept in ascending vertex-id order.  This
makes every iteration order deterministic, which matters downstream:
per-vertex floating-point summation in the rank kernels must be
reproducible bit for bit across runs.

Vertices are non-negative integers.  Edge semantics are set-like: a
directed edge (u, v) exists at most once.  Vertices are never deleted,
even when removals drive their degree to zero, so their last computed
scores stay reportable.
"""
from __future__ import annotations

from bisect import bisect_left, insort
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class DegreeSnapshot:
    """Out-degrees of every vertex at a past measurement point."""

    degrees: dict[int, int]
    taken_at: int

    def __contains__(self, vertex: int) -> bool:
        return vertex in self.degrees


def _sorted_contains(lst: list[int], x: int) -> bool:
    i = bisect_left(lst, x)
    return i < len(lst) and lst[i] == x


class DynamicGraph:
    """Mutable directed graph with O(log d) edge membership tests."""

    __slots__ = ("_out", "_in", "_edge_count")

    def __init__(self) -> None:
        self._out: dict[int, list[int]] = {}
        self._in: dict[int, list[int]] = {}
        self._edge_count = 0

    # -- queries ----------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def vertex_count(self) -> int:
        return len(self._out)

    @property
    def vertices(self) -> Iterable[int]:
        return self._out.keys()

    def has_vertex(self, v: int) -> bool:
        return v in self._out

    def has_edge(self, u: int, v: int) -> bool:
        lst = self._out.get(u)
        return lst is not None and _sorted_contains(lst, v)

    def out_degree(self, u: int) -> int:
        return len(self._out[u])

    def out_neighbors(self, u: int) -> list[int]:
        return self._out[u]

    def in_neighbors(self, v: int) -> list[int]:
        return self._in[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges in (source, target) ascending order."""
        for u in sorted(self._out):
            for v in self._out[u]:
                yield (u, v)

    def average_out_degree(self) -> float:
        if not self._out:
            return 0.0
        return self._edge_count / len(self._out)

    # -- mutation ---------------------------------------------------------

    def _ensure_vertex(self, v: int) -> None:
        if v < 0:
            raise ValueError(f"vertex ids must be non-negative, got {v}")
        if v not in self._out:
            self._out[v] = []
            self._in[v] = []

    def add_edge(self, u: int, v: int) -> bool:
        """Insert edge (u, v).  Returns False if it was already present."""
        self._ensure_vertex(u)
        self._ensure_vertex(v)
        if _sorted_contains(self._out[u], v):
            return False
        insort(self._out[u], v)
        insort(self._in[v], u)
        self._edge_count += 1
        return True

    def remove_edge(self, u: int, v: int) -> bool:
        """Delete edge (u, v).  Returns False if it did not exist.

        Endpoints are retained even at degree zero.
        """
        lst = self._out.get(u)
        if lst is None:
            return False
        i = bisect_left(lst, v)
        if i >= len(lst) or lst[i] != v:
            return False
        del lst[i]
        rev = self._in[v]
        del rev[bisect_left(rev, u)]
        self._edge_count -= 1
        return True

    def copy(self) -> "DynamicGraph":
        g = DynamicGraph()
        g._out = {u: list(vs) for u, vs in self._out.items()}
        g._in = {u: list(vs) for u, vs in self._in.items()}
        g._edge_count = self._edge_count
        return g

    # -- derived views ----------------------------------------------------

    def snapshot_degrees(self, taken_at: int) -> DegreeSnapshot:
        """Freeze the current out-degree of every vertex."""
        return DegreeSnapshot(
            degrees={u: len(vs) for u, vs in self._out.items()},
            taken_at=taken_at,
        )

    def bfs_out(self, sources: Iterable[int], max_hops: int) -> dict[int, int]:
        """Minimum hop distance along out-edges, capped at max_hops.

        Sources map to 0.  Unknown sources raise KeyError.
        """
        dist: dict[int, int] = {}
        frontier: deque[int] = deque()
        for s in sorted(set(sources)):
            if s not in self._out:
                raise KeyError(f"source vertex {s} not in graph")
            dist[s] = 0
            frontier.append(s)
        while frontier:
            u = frontier.popleft()
            d = dist[u]
            if d >= max_hops:
                continue
            for v in self._out[u]:
                if v not in dist:
                    dist[v] = d + 1
                    frontier.append(v)
        return dist
