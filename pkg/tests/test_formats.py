"""Edgelist and graph6 parsing and emission."""

from __future__ import annotations

import random

import pytest

import oracles
from szeged import (
    FormatError,
    build_graph,
    cycle_graph,
    emit_edgelist,
    emit_graph6,
    parse_edgelist,
    parse_graph6,
    path_graph,
)

C5_TEXT = "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n"


class TestEdgelist:
    def test_parse_c5(self):
        g = parse_edgelist(C5_TEXT)
        assert g.n == 5 and g.m == 5
        assert g.edges == ((0, 1), (0, 4), (1, 2), (2, 3), (3, 4))

    def test_emit_round_trip(self):
        g = cycle_graph(5)
        assert parse_edgelist(emit_edgelist(g)) == g
        assert emit_edgelist(g) == C5_TEXT

    def test_trailing_blank_lines(self):
        g = parse_edgelist("2 1\n0 1\n\n\n")
        assert g.m == 1

    def test_single_vertex(self):
        assert parse_edgelist("1 0\n").n == 1
        assert emit_edgelist(build_graph(1, [])) == "1 0\n"

    @pytest.mark.parametrize("text", [
        "",
        "5\n",
        "5 x\n",
        "0 0\n",
        "-1 0\n",
        "3 1\n",                    # missing edge line
        "3 1\n0 1\n1 2\n",          # extra edge line
        "3 1\n0\n",
        "3 1\n0 a\n",
        "3 1\n1 0\n",               # endpoints must be increasing
        "3 1\n1 1\n",
        "3 2\n0 1\n0 1\n",
        "3 1\n0 3\n",
        "3 1\n0 1 2\n",
    ])
    def test_rejects_malformed(self, text):
        with pytest.raises(FormatError):
            parse_edgelist(text)

    def test_random_round_trips(self):
        rng = random.Random(3)
        for _ in range(50):
            n, edges = oracles.random_connected_graph(rng, max_n=12)
            g = build_graph(n, edges)
            assert parse_edgelist(emit_edgelist(g)) == g


class TestGraph6:
    def test_c5_bytes(self):
        assert emit_graph6(cycle_graph(5)) == b"Dhc"
        assert parse_graph6("Dhc") == cycle_graph(5)

    def test_known_small_codes(self):
        assert emit_graph6(build_graph(1, [])) == b"@"
        assert emit_graph6(path_graph(2)) == b"A_"
        assert emit_graph6(build_graph(2, [])) == b"A?"
        assert emit_graph6(path_graph(3)) == b"Bg"

    def test_round_trip_random(self):
        rng = random.Random(7)
        for _ in range(80):
            n = rng.randint(1, 12)
            edges = [p for p in oracles.pairs_rowmajor(n) if rng.random() < 0.4]
            g = build_graph(n, edges)
            assert parse_graph6(emit_graph6(g).decode("ascii")) == g

    def test_optional_header(self):
        assert parse_graph6(">>graph6<<Dhc") == cycle_graph(5)

    @pytest.mark.parametrize("text", [
        "",
        "D",            # truncated body
        "Dhc?",         # extra bytes
        "Dh\x1f",       # byte below printable range
        "Dh\x7f",       # byte above printable range
        "A@",           # nonzero padding bits for n = 2
        "?",            # n = 0
    ])
    def test_rejects_malformed(self, text):
        with pytest.raises(FormatError):
            parse_graph6(text)

    def test_cross_format_agreement(self):
        rng = random.Random(13)
        for _ in range(30):
            n, edges = oracles.random_connected_graph(rng, max_n=10)
            g = build_graph(n, edges)
            via_text = parse_edgelist(emit_edgelist(g))
            via_g6 = parse_graph6(emit_graph6(g).decode("ascii"))
            assert via_text == via_g6 == g
