"""Isomorph-free generation of connected simple graphs.

Vertex augmentation with canonical-representative rejection: every connected
graph on k+1 vertices arises from a connected graph on k vertices by adding
one vertex joined to a nonempty subset (delete any non-cutvertex to see
this), so growing level by level and deduplicating by canonical form is
exhaustive.  Output is sorted by canonical graph6 string, which makes runs
reproducible and diffable.
"""
from __future__ import annotations

from .graphs import Graph, canonical_graph, graph6_encode

# classes of connected graphs per vertex count, used for completeness checks
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


class GraphStream:
    """Iterator over one canonical representative per isomorphism class."""

    def __init__(self, n: int, graphs: list[Graph]) -> None:
        self.n = n
        self.count = 0
        self._graphs = graphs

    def __iter__(self):
        for g in self._graphs:
            self.count += 1
            yield g

    def __len__(self) -> int:
        return len(self._graphs)


def _connected_level(prev: list[Graph], k: int) -> list[Graph]:
    seen: dict[bytes, Graph] = {}
    for parent in prev:
        base_edges = list(parent.edges)
        for subset in range(1, 1 << (k - 1)):
            edges = base_edges + [
                (v, k - 1) for v in range(k - 1) if subset >> v & 1
            ]
            child = canonical_graph(Graph(k, edges))
            key = child.edges  # child is canonical: edges identify the class
            if key not in seen:
                seen[key] = child
    return [seen[key] for key in sorted(seen)]


def enumerate_connected(n: int) -> GraphStream:
    """All connected simple graphs on n vertices, one per isomorphism class."""
    if n < 1:
        raise ValueError(f"vertex count {n} must be positive")
    level = [Graph(1, [])]
    for k in range(2, n + 1):
        level = _connected_level(level, k)
    level.sort(key=graph6_encode)  # already canonical: encoding == canonical form
    return GraphStream(n, level)
