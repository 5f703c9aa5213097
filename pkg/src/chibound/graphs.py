"""Oriented-graph core: immutable carrier, DAG utilities, reachability distances,
and induced subgraphs.

Vertices are dense integer indices ``0..n-1``; every construction in this
package emits deterministic numbering so repeated runs are bit-for-bit
reproducible. Adjacency is kept both as sorted neighbor tuples (for DP loops)
and as bitset rows (for the adjacency-query-bound oracles).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import CycleFound, MultiplePaths, UnknownVertex


class OrientedGraph:
    """A finite simple graph together with an orientation of its edges.

    Anti-parallel pairs ``(u, v), (v, u)`` are accepted at construction time so
    that cycle detection can report them as a 2-cycle; every acyclicity-certified
    graph produced by this package has at most one edge per unordered pair.
    Instances are immutable after construction and safe to share across threads.
    """

    __slots__ = ("n", "edges", "_out", "_in", "_out_bits", "_und_bits")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        self.n = int(n)
        canon = sorted({(int(u), int(v)) for u, v in edges})
        out = [[] for _ in range(self.n)]
        inn = [[] for _ in range(self.n)]
        out_bits = [0] * self.n
        und_bits = [0] * self.n
        for u, v in canon:
            if not (0 <= u < self.n) or not (0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            out[u].append(v)
            inn[v].append(u)
            out_bits[u] |= 1 << v
            und_bits[u] |= 1 << v
            und_bits[v] |= 1 << u
        self.edges = tuple(canon)
        self._out = tuple(tuple(x) for x in out)
        self._in = tuple(tuple(x) for x in inn)
        self._out_bits = tuple(out_bits)
        self._und_bits = tuple(und_bits)

    @property
    def m(self) -> int:
        return len(self.edges)

    def out_neighbors(self, u: int) -> tuple[int, ...]:
        return self._out[u]

    def in_neighbors(self, u: int) -> tuple[int, ...]:
        return self._in[u]

    def has_edge(self, u: int, v: int) -> bool:
        return (self._out_bits[u] >> v) & 1 == 1

    def has_und_edge(self, u: int, v: int) -> bool:
        return (self._und_bits[u] >> v) & 1 == 1

    def und_bits(self) -> tuple[int, ...]:
        """Bitset adjacency rows of the undirected view."""
        return self._und_bits

    def undirected_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted({(u, v) if u < v else (v, u) for u, v in self.edges}))

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrientedGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"OrientedGraph(n={self.n}, m={self.m})"


def oriented_view(obj) -> OrientedGraph:
    """Return the underlying OrientedGraph of any graph-like object."""
    if isinstance(obj, OrientedGraph):
        return obj
    g = getattr(obj, "graph", None)
    if isinstance(g, OrientedGraph):
        return g
    raise TypeError(f"no oriented graph view for {type(obj).__name__}")


def labeled_view(obj) -> tuple[OrientedGraph, Mapping[tuple[int, int], int] | None, int | None]:
    """Return ``(graph, residue labels, modulus)``; labels/modulus None if absent."""
    g = oriented_view(obj)
    labels = getattr(obj, "labels", None)
    p = getattr(obj, "p", None)
    return g, labels, p


def topological_order(g) -> list[int]:
    """Lexicographically smallest topological order, or CycleFound with a witness."""
    g = oriented_view(g)
    indeg = [0] * g.n
    for _, v in g.edges:
        indeg[v] += 1
    heap = [v for v in range(g.n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for v in g.out_neighbors(u):
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, v)
    if len(order) < g.n:
        remaining = {v for v in range(g.n) if indeg[v] > 0}
        raise CycleFound(find_cycle(g, remaining))
    return order


def find_cycle(g, within: set[int] | None = None) -> list[int]:
    """Locate one directed cycle via DFS; `within` restricts the searched vertices."""
    g = oriented_view(g)
    vertices = sorted(within) if within is not None else range(g.n)
    allowed = set(vertices)
    state = {}  # 0 = on stack, 1 = done
    for start in vertices:
        if start in state:
            continue
        stack = [(start, iter(g.out_neighbors(start)))]
        state[start] = 0
        path = [start]
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                if v not in allowed:
                    continue
                if v not in state:
                    state[v] = 0
                    path.append(v)
                    stack.append((v, iter(g.out_neighbors(v))))
                    advanced = True
                    break
                if state[v] == 0:
                    return path[path.index(v):]
            if not advanced:
                state[u] = 1
                stack.pop()
                path.pop()
    raise ValueError("no cycle found in the given vertex set")


class DistanceTable:
    """All-pairs unique-directed-path lengths over a verified DAG.

    ``d(u, v)`` is defined exactly on reachable pairs, with ``d(u, u) = 0``;
    the reachability order is ``u <= v iff d(u, v) is not None``.
    """

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, rows):
        self.n = n
        self._rows = rows

    def d(self, u: int, v: int) -> int | None:
        return self._rows[u].get(v)

    def leq(self, u: int, v: int) -> bool:
        return v in self._rows[u]

    def row(self, u: int) -> Mapping[int, int]:
        return self._rows[u]

    def pairs(self) -> Iterator[tuple[int, int, int]]:
        """Yield (u, v, d) over all reachable pairs with u != v, ascending u."""
        for u in range(self.n):
            for v, duv in sorted(self._rows[u].items()):
                if v != u:
                    yield u, v, duv


def distance_table(g) -> DistanceTable:
    """Compute unique-path distances; raise on a cycle or a duplicated path.

    The merge over out-neighbors rejects any pair reachable through two
    different branches, which is exactly the 0/1/>=2 path-count distinction
    (counts need never grow past 2).
    """
    g = oriented_view(g)
    order = topological_order(g)
    rows: list[dict[int, int] | None] = [None] * g.n
    for u in reversed(order):
        row = {u: 0}
        for w in g.out_neighbors(u):
            for v, dwv in rows[w].items():
                if v in row:
                    raise MultiplePaths(u, v)
                row[v] = dwv + 1
        rows[u] = row
    return DistanceTable(g.n, rows)


@dataclass(frozen=True, eq=False)
class InducedSubgraph:
    """An induced subgraph with re-densified indices and a recorded back-map.

    ``vertices[i]`` is the parent id of the sub-vertex ``i``. Residue labels and
    the modulus are inherited when the parent carries them.
    """

    parent: object
    vertices: tuple[int, ...]
    graph: OrientedGraph
    labels: dict | None
    p: int | None

    def back(self, v: int) -> int:
        return self.vertices[v]

    def __repr__(self) -> str:
        return f"InducedSubgraph(k={len(self.vertices)}, m={self.graph.m})"


def induced_subgraph(parent, vs: Iterable[int]) -> InducedSubgraph:
    """Induce on a vertex subset, keeping exactly the inherited edges and labels."""
    g, labels, p = labeled_view(parent)
    chosen = sorted({int(v) for v in vs})
    for v in chosen:
        if not (0 <= v < g.n):
            raise UnknownVertex(v, g.n)
    index = {old: new for new, old in enumerate(chosen)}
    edges = []
    sub_labels: dict[tuple[int, int], int] | None = {} if labels is not None else None
    for u, v in g.edges:
        if u in index and v in index:
            e = (index[u], index[v])
            edges.append(e)
            if sub_labels is not None:
                sub_labels[e] = labels[(u, v)]
    return InducedSubgraph(
        parent=parent,
        vertices=tuple(chosen),
        graph=OrientedGraph(len(chosen), edges),
        labels=sub_labels,
        p=p,
    )
