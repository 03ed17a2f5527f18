import io
import random

import pytest

from streamrank.errors import ConfigError, ParseError
from streamrank.streamio import (
    ADD,
    QUERY,
    QUERY_EVENT,
    REMOVE,
    StreamEvent,
    StreamSpec,
    add_event,
    generate_stream,
    parse_edge_list,
    read_stream,
    write_stream,
)

from oracles import random_graph


class TestParseEdgeList:
    def test_basic(self):
        g = parse_edge_list(["1 2\n", "2 3\n"])
        assert g.vertex_count == 3
        assert g.edge_count == 2

    def test_duplicates_collapse(self):
        g = parse_edge_list(["# c\n", "1 2\n", "1 2\n"])
        assert g.edge_count == 1

    def test_comments_and_blank_lines(self):
        g = parse_edge_list(["% header\n", "\n", "0 1\n"])
        assert g.edge_count == 1

    def test_malformed_line_reports_number(self):
        with pytest.raises(ParseError, match="line 1"):
            parse_edge_list(["1 x\n"])

    def test_negative_id(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_edge_list(["1 2\n", "-1 2\n"])


class TestStreamEvent:
    def test_query_carries_no_edge(self):
        with pytest.raises(ValueError):
            StreamEvent(QUERY, (1, 2))

    def test_add_requires_edge(self):
        with pytest.raises(ValueError):
            StreamEvent(ADD)


class TestStreamFile:
    def test_write_format(self):
        out = io.StringIO()
        write_stream([add_event(1, 2), QUERY_EVENT], out)
        assert out.getvalue() == "A 1 2\nQ\n"

    def test_read_remove(self):
        assert read_stream(["R 3 4\n"]) == [StreamEvent(REMOVE, (3, 4))]

    def test_roundtrip(self):
        rng = random.Random(11)
        g = random_graph(rng, 30, 120)
        _, events = generate_stream(g, StreamSpec(4, 0.5, 5, shuffle=True, rng_seed=3))
        out = io.StringIO()
        write_stream(events, out)
        assert read_stream(io.StringIO(out.getvalue())) == events

    def test_malformed_line(self):
        with pytest.raises(ParseError, match="line 2"):
            read_stream(["Q\n", "A 1\n"])


class TestGenerateStream:
    def test_event_counts_reference_shape_scaled(self):
        # same chunk/removal/query ratios as the reference protocol,
        # scaled down 100x
        rng = random.Random(5)
        g = random_graph(rng, 150, 500)
        spec = StreamSpec(8, 0.2, 50, rng_seed=1)
        initial, events = generate_stream(g, spec)
        adds = [e for e in events if e.kind == ADD]
        removes = [e for e in events if e.kind == REMOVE]
        queries = [e for e in events if e.kind == QUERY]
        assert len(adds) == 400
        assert len(removes) == 50 * int(0.2 * 8)
        assert len(queries) == 50
        assert initial.edge_count == g.edge_count - 400

    def test_minimal_stream(self):
        g = parse_edge_list(f"{u} {u + 1}" for u in range(10))
        initial, events = generate_stream(g, StreamSpec(1, 0.0, 1, rng_seed=0))
        assert initial.edge_count == 9
        assert [e.kind for e in events] == [ADD, QUERY]

    def test_determinism(self):
        rng = random.Random(9)
        g = random_graph(rng, 40, 200)
        spec = StreamSpec(5, 0.4, 10, shuffle=True, rng_seed=42)
        assert generate_stream(g, spec)[1] == generate_stream(g, spec)[1]
        assert list(generate_stream(g, spec)[0].edges()) == list(
            generate_stream(g, spec)[0].edges()
        )

    def test_unsatisfiable_spec(self):
        g = parse_edge_list(["1 2\n"])
        with pytest.raises(ConfigError):
            generate_stream(g, StreamSpec(2, 0.0, 1))

    def test_partition_invariant(self):
        rng = random.Random(21)
        g = random_graph(rng, 40, 200)
        initial, events = generate_stream(g, StreamSpec(6, 0.3, 8, rng_seed=7))
        added = {e.edge for e in events if e.kind == ADD}
        assert added.isdisjoint(set(initial.edges()))
        assert added | set(initial.edges()) == set(g.edges())

    @pytest.mark.parametrize("shuffle", [False, True])
    def test_replay_validity(self, shuffle):
        """Removals always hit present edges that predate the current chunk."""
        rng = random.Random(33)
        g = random_graph(rng, 60, 300)
        initial, events = generate_stream(
            g, StreamSpec(10, 0.5, 12, shuffle=shuffle, rng_seed=2)
        )
        live = initial.copy()
        current_chunk: set[tuple[int, int]] = set()
        for ev in events:
            if ev.kind == ADD:
                assert live.add_edge(*ev.edge)
                current_chunk.add(ev.edge)
            elif ev.kind == REMOVE:
                assert ev.edge not in current_chunk
                assert live.remove_edge(*ev.edge)
            else:
                current_chunk.clear()
