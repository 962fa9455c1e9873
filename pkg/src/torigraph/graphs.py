"""Immutable labeled simple graphs with bitset adjacency.

Vertices are the integers 0..n-1.  Adjacency is stored as one bitmask per
vertex, which keeps every structural predicate in this package a handful of
integer operations.  The sorted edge list (lexicographic on (u, v) with
u < v) doubles as the variable order of the attached polynomial ring: edge
number i is variable number i everywhere downstream.
"""
from __future__ import annotations

from itertools import combinations

MAX_VERTICES = 12

_G6_MIN = 63
_G6_MAX = 126


class GraphError(ValueError):
    """Invalid graph construction or graph-format input."""


class Graph:
    """A finite simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "edges")

    def __init__(self, n: int, edges) -> None:
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.adj = tuple(rows)
        self.edges = tuple(
            (u, v) for u in range(n) for v in range(u + 1, n) if rows[u] >> v & 1
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def neighbors(self, v: int):
        mask = self.adj[v]
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


class EdgeIndexMap:
    """Bijection between the edges of a graph and variable positions 0..d-1."""

    __slots__ = ("d", "_pairs", "_index")

    def __init__(self, g: Graph) -> None:
        self._pairs = g.edges
        self.d = len(self._pairs)
        self._index = {pair: i for i, pair in enumerate(self._pairs)}

    def index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self._index[(u, v)]

    def edge(self, i: int) -> tuple[int, int]:
        return self._pairs[i]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def complement(g: Graph) -> Graph:
    n = g.n
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if not g.adj[u] >> v & 1
    ]
    return Graph(n, edges)


def suspension(g: Graph) -> Graph:
    """Add one apex vertex (index n) adjacent to every existing vertex."""
    n = g.n
    edges = list(g.edges) + [(v, n) for v in range(n)]
    return Graph(n + 1, edges)


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph induced on ``vertices``, relabeled 0..k-1 preserving order."""
    vs = sorted(set(vertices))
    if not vs:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    if vs[0] < 0 or vs[-1] >= g.n:
        raise GraphError(f"vertices {vs} outside 0..{g.n - 1}")
    pos = {v: i for i, v in enumerate(vs)}
    edges = [
        (pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos
    ]
    return Graph(len(vs), edges)


def relabel(g: Graph, new_label) -> Graph:
    """Apply the vertex relabeling v -> new_label[v]."""
    return Graph(g.n, [(new_label[u], new_label[v]) for u, v in g.edges])


def is_connected(g: Graph) -> bool:
    reach = 1
    while True:
        grown = reach
        for v in _bits(reach):
            grown |= g.adj[v]
        if grown == reach:
            break
        reach = grown
    return reach == (1 << g.n) - 1


def connected_components(g: Graph) -> list[int]:
    """Vertex bitmasks of the connected components, sorted by lowest vertex."""
    seen = 0
    comps = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        reach = 1 << start
        while True:
            grown = reach
            for v in _bits(reach):
                grown |= g.adj[v]
            if grown == reach:
                break
            reach = grown
        comps.append(reach)
        seen |= reach
    return comps


def bipartition(g: Graph) -> tuple[int, int] | None:
    """Two-coloring as a pair of vertex bitmasks, or None if an odd cycle exists."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in _bits(g.adj[v]):
                if color[u] == -1:
                    color[u] = color[v] ^ 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    side0 = sum(1 << v for v in range(g.n) if color[v] == 0)
    return side0, ((1 << g.n) - 1) ^ side0


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_chordal(g: Graph) -> bool:
    """Maximum-cardinality search plus perfect-elimination verification."""
    n = g.n
    weight = [0] * n
    placed = 0
    order = []  # reverse elimination order
    for _ in range(n):
        best, best_w = -1, -1
        for v in range(n):
            if not placed >> v & 1 and weight[v] > best_w:
                best, best_w = v, weight[v]
        placed |= 1 << best
        order.append(best)
        for u in _bits(g.adj[best] & ~placed):
            weight[u] += 1
    rank = [0] * n
    for i, v in enumerate(order):
        rank[v] = i
    # elimination order is reversed(order): check earlier neighbors form a clique
    for v in range(n):
        earlier = [u for u in _bits(g.adj[v]) if rank[u] > rank[v]]
        if not earlier:
            continue
        parent = min(earlier, key=lambda u: rank[u])
        rest = [u for u in earlier if u != parent]
        for u in rest:
            if not g.adj[parent] >> u & 1:
                return False
    return True


def is_co_chordal(g: Graph) -> bool:
    return is_chordal(complement(g))


def is_2k2_free(g: Graph) -> bool:
    """No induced pair of independent edges.

    Defined for connected graphs; a disconnected input returns False (two
    edges in different components are always induced-independent when both
    components have edges, and the notion presumes connectivity anyway).
    """
    if not is_connected(g):
        return False
    for (a, b), (c, d) in combinations(g.edges, 2):
        if a in (c, d) or b in (c, d):
            continue
        cross = (1 << c) | (1 << d)
        if not (g.adj[a] & cross) and not (g.adj[b] & cross):
            return False
    return True


# ---------------------------------------------------------------------------
# graph6 interchange format (single-byte header, n <= 62)
# ---------------------------------------------------------------------------


def _upper_triangle_bits(g: Graph) -> list[int]:
    # column j holds bits (i, j) for i < j, in that order
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    return bits


def graph6_encode(g: Graph) -> str:
    out = [g.n + 63]
    bits = _upper_triangle_bits(g)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        group = 0
        for b in bits[k : k + 6]:
            group = group << 1 | b
        out.append(group + 63)
    return "".join(map(chr, out))


def graph6_decode(text: str) -> Graph:
    data = text.strip()
    if not data:
        raise GraphError("empty graph6 string")
    raw = data.encode("ascii", errors="strict") if isinstance(data, str) else data
    for byte in raw:
        if not _G6_MIN <= byte <= _G6_MAX:
            raise GraphError(f"graph6 byte {byte} outside {_G6_MIN}..{_G6_MAX}")
    n = raw[0] - 63
    if n == 63:
        raise GraphError("multi-byte graph6 vertex counts are not supported")
    nbits = n * (n - 1) // 2
    expect = 1 + (nbits + 5) // 6
    if len(raw) != expect:
        raise GraphError(f"graph6 length {len(raw)}, expected {expect} for n={n}")
    bits = []
    for byte in raw[1:]:
        group = byte - 63
        bits.extend(group >> k & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphError("nonzero padding bits in graph6 string")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# Canonical form: lexicographically minimal graph6 string over relabelings
# ---------------------------------------------------------------------------


def _twin(adj, u: int, v: int) -> bool:
    # transposing u and v is an automorphism
    return (adj[u] ^ adj[v]) & ~((1 << u) | (1 << v)) == 0


def _min_placement(g: Graph) -> list[int]:
    """Vertex order minimizing the upper-triangle column bit string.

    Branch and bound: at each level only orders achieving the minimal next
    column can be optimal, and only one representative per twin class needs
    trying.  Exact for n <= 12.
    """
    n, adj = g.n, g.adj
    best_cols: list[int] | None = None
    best_order: list[int] | None = None
    placed: list[int] = []
    cols: list[int] = []
    placed_mask = 0

    def rec() -> None:
        nonlocal best_cols, best_order, placed_mask
        level = len(placed)
        if level == n:
            if best_cols is None or cols < best_cols:
                best_cols = cols.copy()
                best_order = placed.copy()
            return
        candidates = []
        col_min = None
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            col = 0
            row = adj[v]
            for p in placed:
                col = col << 1 | (row >> p & 1)
            if col_min is None or col < col_min:
                col_min = col
                candidates = [v]
            elif col == col_min:
                candidates.append(v)
        if (
            best_cols is not None
            and cols == best_cols[:level]
            and col_min > best_cols[level]
        ):
            return
        cols.append(col_min)
        tried: list[int] = []
        for v in candidates:
            if any(_twin(adj, u, v) for u in tried):
                continue
            tried.append(v)
            placed.append(v)
            placed_mask |= 1 << v
            rec()
            placed.pop()
            placed_mask ^= 1 << v
        cols.pop()

    rec()
    assert best_order is not None
    return best_order


def canonical_graph(g: Graph) -> Graph:
    """The representative of g's isomorphism class used everywhere for dedup."""
    order = _min_placement(g)
    new_label = [0] * g.n
    for position, v in enumerate(order):
        new_label[v] = position
    return relabel(g, new_label)


def canonical_form(g: Graph) -> bytes:
    """Canonical graph6 string (as bytes); equal exactly on isomorphic graphs."""
    return graph6_encode(canonical_graph(g)).encode("ascii")
