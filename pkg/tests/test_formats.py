import random

import pytest
from hypothesis import given, strategies as st

from chibound import (
    OrientedGraph,
    canonical_json,
    graph_json_dict,
    read_edgelist,
    write_dimacs,
    write_edgelist,
)
from helpers import random_dag


def test_edgelist_roundtrip_unlabeled():
    g = OrientedGraph(4, [(0, 1), (2, 3), (0, 3)])
    text = write_edgelist(g)
    assert text == "n 4 3\n0 1\n0 3\n2 3\n"
    back, labels, metadata = read_edgelist(text)
    assert back == g and labels is None and metadata == {}


def test_edgelist_roundtrip_labeled_with_metadata():
    g = OrientedGraph(3, [(0, 1), (1, 2)])
    labels = {(0, 1): 1, (1, 2): 2}
    text = write_edgelist(g, labels=labels, metadata={"p": 3, "note": "x: y"})
    back, back_labels, metadata = read_edgelist(text)
    assert back == g
    assert back_labels == labels
    # metadata values come back as strings; colons in values survive
    assert metadata == {"p": "3", "note": "x: y"}


def test_edgelist_skips_blank_lines():
    back, labels, _ = read_edgelist("\nn 2 1\n\n0 1\n\n")
    assert back == OrientedGraph(2, [(0, 1)]) and labels is None


def test_edgelist_errors():
    with pytest.raises(ValueError, match="header"):
        read_edgelist("0 1\n")
    with pytest.raises(ValueError, match="header"):
        read_edgelist("# only a comment\n")
    with pytest.raises(ValueError, match="declares 2 edges, found 1"):
        read_edgelist("n 3 2\n0 1\n")
    with pytest.raises(ValueError, match="mixed"):
        read_edgelist("n 3 2\n0 1 1\n1 2\n")
    with pytest.raises(ValueError, match="expected 'u v' or 'u v r'"):
        read_edgelist("n 2 1\n0 1 2 3\n")


def test_canonical_json_is_sorted_and_newline_terminated():
    text = canonical_json({"b": 1, "a": [2, {"z": 0, "y": 1}]})
    assert text.endswith("\n")
    assert text.index('"a"') < text.index('"b"')
    assert text.index('"y"') < text.index('"z"')
    assert canonical_json({"a": 1, "b": 1}) == canonical_json({"b": 1, "a": 1})


def test_dimacs_output():
    g = OrientedGraph(3, [(0, 1), (2, 1)])
    assert write_dimacs(g) == "p edge 3 2\ne 1 2\ne 2 3\n"


def test_dimacs_collapses_antiparallel_pairs():
    g = OrientedGraph(2, [(0, 1), (1, 0)])
    assert write_dimacs(g) == "p edge 2 1\ne 1 2\n"


def test_graph_json_dict_shapes():
    g = OrientedGraph(2, [(0, 1)])
    assert graph_json_dict(g) == {"n": 2, "edges": [[0, 1]]}
    assert graph_json_dict(g, labels={(0, 1): 4}, p=5) == {
        "n": 2,
        "edges": [[0, 1, 4]],
        "p": 5,
    }


@given(st.integers(0, 5_000), st.booleans())
def test_edgelist_roundtrip_random(seed, with_labels):
    rng = random.Random(seed)
    g = random_dag(rng, max_n=30)
    labels = None
    if with_labels and g.m:
        labels = {e: rng.randrange(1, 7) for e in g.edges}
    back, back_labels, _ = read_edgelist(write_edgelist(g, labels=labels))
    assert back == g
    assert back_labels == labels
