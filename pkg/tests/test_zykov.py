"""The tower construction: exact sizes, structure, provenance, and the
self-embedding of lower levels."""

import pytest

from chibound import (
    SizeBudgetExceeded,
    build_zykov,
    induced_subgraph,
    predict_size,
)
from chibound.zykov import provenance_json_dict


def test_predict_size_base_cases():
    assert predict_size(1) == (1, 0)
    assert predict_size(2) == (2, 1)
    assert predict_size(3) == (5, 5)
    assert predict_size(4) == (18, 36)


def test_predict_size_level_five():
    # vertices: 1+2+5+18 + 1*2*5*18 = 206; edges: 0+1+5+36 + 4*180 = 762
    assert predict_size(5) == (206, 762)


def test_predict_size_rejects_nonpositive():
    with pytest.raises(ValueError):
        predict_size(0)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_build_matches_prediction(k):
    zg = build_zykov(k)
    assert (zg.graph.n, zg.graph.m) == predict_size(k)


def test_level_one_is_single_vertex():
    zg = build_zykov(1)
    assert zg.graph.n == 1 and zg.graph.m == 0


def test_level_two_is_single_edge():
    zg = build_zykov(2)
    assert zg.graph.edges == ((1, 0),)


def test_level_three_underlying_graph_is_a_five_cycle():
    g = build_zykov(3).graph
    assert g.n == 5
    und = g.undirected_edges()
    assert len(und) == 5
    deg = [0] * 5
    for u, v in und:
        deg[u] += 1
        deg[v] += 1
    assert deg == [2] * 5
    # connected 2-regular on 5 vertices == C5
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in range(5):
            if g.has_und_edge(x, y) and y not in seen:
                seen.add(y)
                stack.append(y)
    assert seen == set(range(5))


def test_level_four_apex_structure():
    zg = build_zykov(4)
    apexes = [v for v, t in enumerate(zg.provenance) if t.level == 4]
    assert len(apexes) == 10
    for w in apexes:
        outs = zg.graph.out_neighbors(w)
        assert len(outs) == 3
        assert zg.graph.in_neighbors(w) == ()
        # one out-neighbor in each of the three copies
        assert sorted(zg.provenance[v].copy for v in outs) == [1, 2, 3]


def test_apexes_are_numbered_after_copies():
    zg = build_zykov(4)
    n_copies = sum(1 for t in zg.provenance if t.copy is not None)
    assert n_copies == 8
    assert all(t.copy is None for t in zg.provenance[n_copies:])
    assert [t.transversal for t in zg.provenance[n_copies:]] == list(range(10))


def test_level_coloring_is_proper_with_k_colors():
    for k in range(1, 6):
        zg = build_zykov(k)
        colors = zg.level_coloring()
        assert set(colors) == set(range(k))
        for u, v in zg.graph.edges:
            assert colors[u] != colors[v]
            assert colors[u] > colors[v]  # levels strictly decrease along edges


def test_lower_levels_embed_via_provenance():
    zg = build_zykov(4)
    for j in (1, 2, 3):
        copy = zg.copy_vertices(j)
        sub = induced_subgraph(zg.graph, copy)
        assert sub.graph.edges == build_zykov(j).graph.edges


def test_size_cap_blocks_oversized_builds():
    with pytest.raises(SizeBudgetExceeded) as exc:
        build_zykov(4, size_cap=10)
    assert exc.value.predicted_vertices == 18
    with pytest.raises(SizeBudgetExceeded):
        build_zykov(7)  # ~1.4e9 vertices, beyond the default cap


def test_level_six_still_matches_prediction():
    zg = build_zykov(6)
    assert (zg.graph.n, zg.graph.m) == predict_size(6) == (37312, 186204)


def test_provenance_json_shape():
    doc = provenance_json_dict(build_zykov(3))
    assert doc["k"] == 3
    assert len(doc["vertices"]) == 5
    assert doc["vertices"][0] == {"level": 1, "copy": 1, "transversal": None}
