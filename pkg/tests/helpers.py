"""Shared generators for seeded random instances. Kept separate from the
package so test inputs never depend on the code under test beyond the graph
constructor."""

import random

from chibound import OrientedGraph


def random_dag(rng: random.Random, max_n: int = 200) -> OrientedGraph:
    """Random DAG: random vertex order, forward edges with sparse density."""
    n = rng.randint(1, max_n)
    perm = list(range(n))
    rng.shuffle(perm)
    p = rng.uniform(0.01, min(0.25, 30.0 / n))
    edges = [
        (perm[i], perm[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return OrientedGraph(n, edges)


def random_oriented_graph(rng: random.Random, max_n: int = 9) -> OrientedGraph:
    """Random oriented simple graph of any density (acyclic by construction;
    the undirected view is what the coloring/clique oracles consume)."""
    n = rng.randint(1, max_n)
    p = rng.random()
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return OrientedGraph(n, edges)
