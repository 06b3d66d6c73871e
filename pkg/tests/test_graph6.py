import random

import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from folkman.canon import canonical_certificate, relabel
from folkman.graph import build_graph, complete_graph, empty_graph
from folkman.graph6 import (Graph6Error, decode_graph6, encode_graph6, file_checksum,
                            read_stage_file, write_stage_file)


def reference_encode(g):
    """graph6 spelled out with a '0'/'1' string, column by column."""
    bitstr = "".join("1" if g.has_edge(i, j) else "0" for j in range(1, g.n) for i in range(j))
    bitstr += "0" * (-len(bitstr) % 6)
    return chr(g.n + 63) + "".join(chr(int(bitstr[k:k + 6], 2) + 63) for k in range(0, len(bitstr), 6))


def test_small_examples():
    assert encode_graph6(complete_graph(1)) == "@"
    assert encode_graph6(empty_graph(2)) == "A?"
    assert encode_graph6(complete_graph(2)) == "A_"
    assert decode_graph6("A_") == complete_graph(2)


def test_known_strings():
    # C5 with edges 01 12 23 34 04: bits 1 0 1 0 0 1 1 0 0 1 -> 101001 100100
    c5 = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert encode_graph6(c5) == chr(5 + 63) + chr(0b101001 + 63) + chr(0b100100 + 63)
    assert encode_graph6(complete_graph(4)) == "C~"


@pytest.mark.parametrize("line", ["!", "A", "A__", "B", "", "~??", "A\x7f"])
def test_malformed(line):
    with pytest.raises(Graph6Error):
        decode_graph6(line)


def test_padding_strict_and_lenient():
    # n = 2 has one data bit; 'A`' sets a padding bit
    with pytest.raises(Graph6Error):
        decode_graph6("A`")
    assert decode_graph6("A`", strict=False) == complete_graph(2)


def test_header_prefix_and_whitespace():
    assert decode_graph6(">>graph6<<A_\n") == complete_graph(2)


def test_size_limit():
    with pytest.raises(Graph6Error):
        encode_graph6(empty_graph(63))
    g = complete_graph(62)
    assert decode_graph6(encode_graph6(g)) == g


def test_round_trip_thousand_random_graphs():
    rnd = random.Random(1000)
    for _ in range(1000):
        g = random_graph(rnd, rnd.randint(1, 20), rnd.random())
        text = encode_graph6(g)
        assert text == reference_encode(g)
        assert decode_graph6(text) == g


@settings(max_examples=300)
@given(graphs(max_n=40))
def test_round_trip_property(g):
    assert decode_graph6(encode_graph6(g)) == g
    assert encode_graph6(g) == reference_encode(g)


def test_stage_file_is_canonical(tmp_path):
    rnd = random.Random(4)
    gs = [random_graph(rnd, rnd.randint(3, 9), 0.5) for _ in range(40)]
    shuffled = [relabel(g, rnd.sample(range(g.n), g.n)) for g in gs]
    rnd.shuffle(shuffled)
    sha1 = write_stage_file(tmp_path / "a.g6", gs)
    sha2 = write_stage_file(tmp_path / "b.g6", shuffled + shuffled[:5])
    assert sha1 == sha2 == file_checksum(tmp_path / "a.g6")
    assert (tmp_path / "a.g6").read_bytes() == (tmp_path / "b.g6").read_bytes()
    lines = (tmp_path / "a.g6").read_bytes().splitlines()
    assert lines == sorted(set(lines))
    back = read_stage_file(tmp_path / "a.g6")
    assert sorted(canonical_certificate(g) for g in back) == lines


def test_empty_stage_file(tmp_path):
    write_stage_file(tmp_path / "e.g6", [])
    assert (tmp_path / "e.g6").read_bytes() == b""
    assert read_stage_file(tmp_path / "e.g6") == []
