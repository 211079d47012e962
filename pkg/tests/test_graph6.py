import random

import pytest

from minorgap import graph6_decode, graph6_encode, make_graph, named_graph
from minorgap.errors import MalformedGraph6
from minorgap.graph6 import read_graph6_file, write_graph6_file

from conftest import random_graph


def test_known_encodings():
    # values cross-checked against the format specification examples
    assert graph6_decode("D~{").num_edges == 10  # K5
    assert graph6_encode(named_graph("k5")) == b"D~{"
    assert graph6_decode(r"DQc").num_edges == 4


def test_empty_and_single():
    g0 = make_graph(0, [])
    assert graph6_decode(graph6_encode(g0)) == g0
    g1 = make_graph(1, [])
    assert graph6_decode(graph6_encode(g1)) == g1


def test_header_and_str_inputs():
    enc = graph6_encode(named_graph("k4"))
    assert graph6_decode(b">>graph6<<" + enc) == named_graph("k4")
    assert graph6_decode(enc.decode("ascii")) == named_graph("k4")


def test_large_n_four_byte_form():
    g = make_graph(63, [(0, 62)])
    assert graph6_decode(graph6_encode(g)) == g


def test_malformed_inputs():
    for bad in (b"", b"\x7f", b"C", b"Cxxx", b"~"):
        with pytest.raises(MalformedGraph6):
            graph6_decode(bad)


def test_round_trip_fuzz(rng):
    for _ in range(500):
        n = rng.randint(0, 12)
        g = random_graph(rng, n, rng.random())
        assert graph6_decode(graph6_encode(g)) == g


def test_file_round_trip(tmp_path, rng):
    graphs = [random_graph(rng, rng.randint(1, 8), 0.4) for _ in range(20)]
    path = tmp_path / "batch.g6"
    write_graph6_file(path, graphs)
    assert read_graph6_file(path) == graphs
