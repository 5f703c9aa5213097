"""File formats: labeled edge-list text, DIMACS .col export, canonical JSON.

The edge-list format is line-oriented: optional ``#`` comment lines (used to
embed run metadata such as the serialized config, input hashes, and the
modulus of a labeled graph), a header ``n <vertices> <edges>``, then one line
``u v`` or ``u v r`` per edge, 0-based. Writers emit edges in canonical sorted
order so identical inputs produce byte-identical files.
"""

from __future__ import annotations

import json

from .graphs import OrientedGraph


def canonical_json(obj) -> str:
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_edgelist(g: OrientedGraph, labels=None, metadata=None) -> str:
    """Serialize a graph (optionally residue-labeled) to edge-list text."""
    lines = []
    if metadata:
        for key in metadata:
            value = metadata[key]
            if not isinstance(value, str):
                value = json.dumps(value, sort_keys=True)
            lines.append(f"# {key}: {value}")
    lines.append(f"n {g.n} {g.m}")
    for u, v in g.edges:
        if labels is None:
            lines.append(f"{u} {v}")
        else:
            lines.append(f"{u} {v} {labels[(u, v)]}")
    return "\n".join(lines) + "\n"


def read_edgelist(text: str):
    """Parse edge-list text.

    Returns ``(graph, labels, metadata)`` where ``labels`` is None for an
    unlabeled file and ``metadata`` maps comment keys to their string values.
    """
    metadata: dict[str, str] = {}
    header = None
    edges: list[tuple[int, int]] = []
    labels: dict[tuple[int, int], int] = {}
    labeled = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if ":" in body:
                key, _, value = body.partition(":")
                metadata[key.strip()] = value.strip()
            continue
        parts = line.split()
        if header is None:
            if parts[0] != "n" or len(parts) != 3:
                raise ValueError(f"line {lineno}: expected header 'n <vertices> <edges>'")
            header = (int(parts[1]), int(parts[2]))
            continue
        if len(parts) == 2:
            this_labeled = False
        elif len(parts) == 3:
            this_labeled = True
        else:
            raise ValueError(f"line {lineno}: expected 'u v' or 'u v r'")
        if labeled is None:
            labeled = this_labeled
        elif labeled != this_labeled:
            raise ValueError(f"line {lineno}: mixed labeled and unlabeled edges")
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
        if this_labeled:
            labels[(u, v)] = int(parts[2])
    if header is None:
        raise ValueError("missing header line 'n <vertices> <edges>'")
    n, m = header
    if len(edges) != m:
        raise ValueError(f"header declares {m} edges, found {len(edges)}")
    g = OrientedGraph(n, edges)
    return g, (labels if labeled else None), metadata


def write_dimacs(g: OrientedGraph) -> str:
    """DIMACS .col export of the undirected view (1-based vertex ids)."""
    und = g.undirected_edges()
    lines = [f"p edge {g.n} {len(und)}"]
    for u, v in und:
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def graph_json_dict(g: OrientedGraph, labels=None, p=None) -> dict:
    """JSON-ready dict view of a graph, with residue labels when present."""
    if labels is None:
        edges = [[u, v] for u, v in g.edges]
    else:
        edges = [[u, v, labels[(u, v)]] for u, v in g.edges]
    out = {"n": g.n, "edges": edges}
    if p is not None:
        out["p"] = p
    return out
