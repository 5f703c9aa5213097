import random

import pytest
from hypothesis import given, strategies as st

from chibound import (
    CycleFound,
    MultiplePaths,
    OrientedGraph,
    UnknownVertex,
    build_power_graph,
    build_zykov,
    distance_table,
    induced_subgraph,
    topological_order,
)
from helpers import random_dag


def test_rejects_self_loop():
    with pytest.raises(ValueError):
        OrientedGraph(2, [(0, 0)])


def test_rejects_out_of_range_edge():
    with pytest.raises(ValueError):
        OrientedGraph(2, [(0, 2)])


def test_edges_are_canonical_and_deduplicated():
    g = OrientedGraph(3, [(2, 1), (0, 1), (2, 1)])
    assert g.edges == ((0, 1), (2, 1))
    assert g.m == 2


def test_neighbor_and_bitset_views_agree():
    g = OrientedGraph(4, [(0, 1), (0, 2), (3, 1)])
    assert g.out_neighbors(0) == (1, 2)
    assert g.in_neighbors(1) == (0, 3)
    assert g.has_edge(0, 1) and not g.has_edge(1, 0)
    assert g.has_und_edge(1, 0)
    assert g.undirected_edges() == ((0, 1), (0, 2), (1, 3))


def test_topological_order_single_vertex():
    assert topological_order(OrientedGraph(1)) == [0]


def test_topological_order_path():
    assert topological_order(OrientedGraph(3, [(0, 1), (1, 2)])) == [0, 1, 2]


def test_topological_order_is_lexicographically_smallest():
    g = OrientedGraph(4, [(2, 0), (3, 1)])
    assert topological_order(g) == [2, 0, 3, 1]


def test_topological_order_two_cycle():
    with pytest.raises(CycleFound) as exc:
        topological_order(OrientedGraph(2, [(0, 1), (1, 0)]))
    assert sorted(exc.value.cycle) == [0, 1]


def test_cycle_witness_is_a_real_cycle():
    g = OrientedGraph(5, [(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)])
    with pytest.raises(CycleFound) as exc:
        topological_order(g)
    cyc = exc.value.cycle
    assert len(cyc) >= 2
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        assert g.has_edge(a, b)


def test_distance_table_path():
    t = distance_table(OrientedGraph(3, [(0, 1), (1, 2)]))
    assert t.d(0, 1) == 1 and t.d(1, 2) == 1 and t.d(0, 2) == 2
    assert t.d(2, 0) is None
    assert t.d(0, 0) == 0
    assert t.leq(0, 2) and not t.leq(2, 0)


def test_distance_table_single_vertex():
    t = distance_table(OrientedGraph(1))
    assert t.d(0, 0) == 0
    assert list(t.pairs()) == []


def test_distance_table_diamond_reports_duplicate():
    g = OrientedGraph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    with pytest.raises(MultiplePaths) as exc:
        distance_table(g)
    assert (exc.value.u, exc.value.v) == (0, 3)


def test_distance_table_cycle_reports_cycle():
    with pytest.raises(CycleFound):
        distance_table(OrientedGraph(3, [(0, 1), (1, 2), (2, 0)]))


def test_distances_telescope_on_unique_path_graphs():
    # with unique paths, any w between u and v lies on THE u->v path
    zg = build_zykov(4)
    t = distance_table(zg.graph)
    for u in range(zg.graph.n):
        row = t.row(u)
        for w, duw in row.items():
            if w == u:
                continue
            for v, dwv in t.row(w).items():
                if v == w:
                    continue
                assert row.get(v) == duw + dwv


def test_induced_subgraph_full_subset_is_identity():
    g = OrientedGraph(4, [(0, 1), (2, 3)])
    sub = induced_subgraph(g, range(4))
    assert sub.graph.edges == g.edges
    assert [sub.back(v) for v in range(4)] == [0, 1, 2, 3]


def test_induced_subgraph_drops_edges_with_missing_endpoint():
    g = OrientedGraph(3, [(0, 1), (1, 2)])
    sub = induced_subgraph(g, [0, 2])
    assert sub.graph.n == 2 and sub.graph.m == 0


def test_induced_subgraph_empty_subset():
    sub = induced_subgraph(OrientedGraph(3, [(0, 1)]), [])
    assert sub.graph.n == 0


def test_induced_subgraph_unknown_vertex():
    with pytest.raises(UnknownVertex):
        induced_subgraph(OrientedGraph(2), [0, 5])


def test_induced_subgraph_inherits_residue_labels():
    pg = build_power_graph(build_zykov(3), 3)
    sub = induced_subgraph(pg, [1, 2, 4])
    assert sub.p == 3
    for (u, v), r in sub.labels.items():
        assert pg.labels[(sub.back(u), sub.back(v))] == r
    assert len(sub.labels) == sub.graph.m


def test_induced_subgraph_composes():
    pg = build_power_graph(build_zykov(4), 5)
    outer = induced_subgraph(pg, [0, 2, 4, 6, 8, 10, 12])
    inner = induced_subgraph(outer, [0, 2, 4, 6])
    direct = induced_subgraph(pg, [outer.back(v) for v in [0, 2, 4, 6]])
    assert inner.graph.edges == direct.graph.edges
    assert [outer.back(v) for v in inner.vertices] == list(direct.vertices)


@given(st.integers(0, 10_000))
def test_topological_order_respects_edges(seed):
    g = random_dag(random.Random(seed), max_n=40)
    pos = {v: i for i, v in enumerate(topological_order(g))}
    for u, v in g.edges:
        assert pos[u] < pos[v]


@given(st.integers(0, 10_000))
def test_graph_equality_is_structural(seed):
    g = random_dag(random.Random(seed), max_n=12)
    h = OrientedGraph(g.n, list(g.edges))
    assert g == h and hash(g) == hash(h)
