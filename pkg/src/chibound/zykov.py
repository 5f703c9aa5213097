"""Triangle-free base graphs with prescribed chromatic number.

``build_zykov(k)`` produces the k-th member of a recursive tower: level 1 is a
single vertex, and level k+1 takes disjoint copies of levels 1..k plus one new
apex vertex per transversal (one chosen vertex per copy), with every apex edge
oriented apex -> chosen vertex. The result is triangle-free, acyclically
oriented, has chromatic number k, and joins every reachable pair of vertices
by exactly one directed path. Those four properties are not trusted: the
oracles module re-derives them on every instance the test suite builds.

Vertex numbering is deterministic: copies are laid out consecutively in level
order, then apexes in lexicographic transversal order, so runs are
reproducible bit-for-bit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import SizeBudgetExceeded
from .graphs import OrientedGraph

DEFAULT_SIZE_CAP = 10**6


@dataclass(frozen=True)
class VertexTag:
    """Where a vertex came from.

    ``level`` is the construction level that created the vertex (1 for base
    vertices, the apex's level otherwise), ``copy`` is the 1-based top-level
    copy containing it (None for vertices created at the top level), and
    ``transversal`` is the creation transversal index for apex vertices.
    """

    level: int
    copy: int | None
    transversal: int | None

    def as_dict(self) -> dict:
        return {"level": self.level, "copy": self.copy, "transversal": self.transversal}


@dataclass(frozen=True, eq=False)
class ZykovGraph:
    k: int
    graph: OrientedGraph
    provenance: tuple[VertexTag, ...]

    def copy_vertices(self, j: int) -> list[int]:
        """Vertices of the embedded level-j copy (ascending, contiguous)."""
        return [v for v, tag in enumerate(self.provenance) if tag.copy == j]

    def level_coloring(self) -> list[int]:
        """The proper coloring induced by creation levels (color = level - 1).

        Every edge runs from an apex to a strictly lower-level vertex, so
        levels strictly decrease along edges.
        """
        return [tag.level - 1 for tag in self.provenance]

    def __repr__(self) -> str:
        return f"ZykovGraph(k={self.k}, n={self.graph.n}, m={self.graph.m})"


def predict_size(k: int) -> tuple[int, int]:
    """Exact (vertices, edges) of build_zykov(k) from the size recurrence.

    v_{k+1} = sum(v_1..v_k) + prod(v_1..v_k);
    e_{k+1} = sum(e_1..e_k) + k * prod(v_1..v_k).
    Pure big-integer arithmetic; grows superexponentially.
    """
    if k < 1:
        raise ValueError(f"level must be positive, got {k}")
    sizes = [(1, 0)]
    while len(sizes) < k:
        j = len(sizes)
        vsum = sum(v for v, _ in sizes)
        esum = sum(e for _, e in sizes)
        vprod = 1
        for v, _ in sizes:
            vprod *= v
        sizes.append((vsum + vprod, esum + j * vprod))
    return sizes[k - 1]


def build_zykov(k: int, size_cap: int = DEFAULT_SIZE_CAP) -> ZykovGraph:
    """Build the level-k tower graph with its acyclic orientation and provenance."""
    if k < 1:
        raise ValueError(f"level must be positive, got {k}")
    predicted_v, _ = predict_size(k)
    if predicted_v > size_cap:
        raise SizeBudgetExceeded(predicted_v, size_cap)

    levels: list[ZykovGraph] = [
        ZykovGraph(1, OrientedGraph(1), (VertexTag(1, None, None),))
    ]
    while len(levels) < k:
        levels.append(_compose(levels))
    return levels[k - 1]


def _compose(levels: list[ZykovGraph]) -> ZykovGraph:
    """One tower step: copies of every built level, plus one apex per transversal."""
    new_level = len(levels) + 1
    offsets = []
    total = 0
    for zg in levels:
        offsets.append(total)
        total += zg.graph.n

    edges: list[tuple[int, int]] = []
    tags: list[VertexTag] = []
    for i, zg in enumerate(levels):
        off = offsets[i]
        edges.extend((u + off, v + off) for u, v in zg.graph.edges)
        # copy membership is re-tagged to the new top level
        tags.extend(
            VertexTag(t.level, i + 1, t.transversal) for t in zg.provenance
        )

    ranges = [range(offsets[i], offsets[i] + levels[i].graph.n) for i in range(len(levels))]
    apex = total
    for t_index, transversal in enumerate(itertools.product(*ranges)):
        edges.extend((apex, v) for v in transversal)
        tags.append(VertexTag(new_level, None, t_index))
        apex += 1

    return ZykovGraph(new_level, OrientedGraph(apex, edges), tuple(tags))


def provenance_json_dict(zg: ZykovGraph) -> dict:
    """JSON-ready provenance sidecar: vertex index -> tag."""
    return {"k": zg.k, "vertices": [tag.as_dict() for tag in zg.provenance]}
