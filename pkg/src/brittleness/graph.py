"""Small simple undirected graphs on dense integer labels.

Vertices of an n-vertex graph are the integers 0..n-1 and all vertex/edge
sets are manipulated as Python-int bitmasks, which keeps the exhaustive
searches in the rest of the package cheap.  Graphs are immutable; every
operation returns a new Graph.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 64

Edge = tuple[int, int]


def _norm_edge(e) -> Edge:
    u, v = e
    if u == v:
        raise ValueError(f"loop edge {e!r}")
    return (u, v) if u < v else (v, u)


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph with bitmask adjacency."""

    __slots__ = ("n", "adj", "_edges", "_canon")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0 or n > MAX_VERTICES:
            raise ValueError(f"vertex count {n} out of range 0..{MAX_VERTICES}")
        adj = [0] * n
        es = set()
        for e in edges:
            u, v = _norm_edge(e)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e!r} out of range for n={n}")
            es.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_edges", tuple(sorted(es)))
        object.__setattr__(self, "_canon", {})

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self._edges))

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self._edges)})"


# ---------------------------------------------------------------------------
# structural operations
# ---------------------------------------------------------------------------


def _check_vertices(g: Graph, xs) -> tuple[int, ...]:
    xs = tuple(xs)
    for v in xs:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate vertices")
    return xs


def induced_subgraph(g: Graph, xs: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by the vertex set xs, relabeled 0..|xs|-1.

    Returns the new graph and the old-label -> new-label map.
    """
    xs = sorted(_check_vertices(g, xs))
    relab = {v: i for i, v in enumerate(xs)}
    edges = [
        (relab[u], relab[v]) for u, v in g.edges if u in relab and v in relab
    ]
    return Graph(len(xs), edges), relab


def edge_induced_subgraph(g: Graph, es: Iterable[Edge]) -> tuple[Graph, dict[int, int]]:
    """Subgraph whose vertices are the endpoints of es and whose edges are es."""
    es = [_norm_edge(e) for e in es]
    eset = set(g.edges)
    for e in es:
        if e not in eset:
            raise ValueError(f"edge {e!r} not in graph")
    verts = sorted({v for e in es for v in e})
    relab = {v: i for i, v in enumerate(verts)}
    return Graph(len(verts), [(relab[u], relab[v]) for u, v in es]), relab


def delete_edges(g: Graph, es: Iterable[Edge]) -> Graph:
    """Delete the given edges; vertex set unchanged."""
    es = {_norm_edge(e) for e in es}
    eset = set(g.edges)
    missing = es - eset
    if missing:
        raise ValueError(f"edges not in graph: {sorted(missing)}")
    return Graph(g.n, eset - es)


def delete_vertices(g: Graph, xs: Iterable[int]) -> Graph:
    """Delete the given vertices and all incident edges; remaining vertices
    are compacted preserving their relative order."""
    xs = set(_check_vertices(g, xs))
    keep = [v for v in g.vertices if v not in xs]
    return induced_subgraph(g, keep)[0]


def suppress(g: Graph, v: int) -> Graph:
    """Remove a degree-2 vertex, joining its two neighbors.

    If the neighbors are already adjacent the result stays simple (the edge
    count drops by 2), so the result is always a topological minor of g.
    """
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    if g.degree(v) != 2:
        raise ValueError(f"vertex {v} has degree {g.degree(v)}, need 2")
    a, b = g.neighbors(v)
    keep = [u for u in g.vertices if u != v]
    relab = {u: i for i, u in enumerate(keep)}
    edges = {(relab[x], relab[y]) for x, y in g.edges if v not in (x, y)}
    edges.add(_norm_edge((relab[a], relab[b])))
    return Graph(g.n - 1, edges)


def contract_edge(g: Graph, e: Edge) -> Graph:
    """Contract an edge, merging its endpoints into the smaller label and
    simplifying (no loops, no parallel edges)."""
    u, v = _norm_edge(e)
    if not g.has_edge(u, v):
        raise ValueError(f"edge {e!r} not in graph")
    keep = [w for w in g.vertices if w != v]
    relab = {w: i for i, w in enumerate(keep)}
    edges = set()
    for x, y in g.edges:
        x = u if x == v else x
        y = u if y == v else y
        if x != y:
            edges.add(_norm_edge((relab[x], relab[y])))
    return Graph(g.n - 1, edges)


def components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, each sorted, ordered by
    smallest member."""
    return [tuple(bits(m)) for m in component_masks(g)]


def component_masks(g: Graph) -> list[int]:
    seen = 0
    out = []
    for s in g.vertices:
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.adj[v]
            frontier = grow & ~comp
            comp |= grow
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    """Empty graph counts as not connected."""
    if g.n == 0:
        return False
    return len(component_masks(g)) == 1


def is_2_connected(g: Graph) -> bool:
    """Connected, more than 2 vertices, and no cut vertex."""
    if g.n <= 2 or not is_connected(g):
        return False
    for v in g.vertices:
        if not is_connected(delete_vertices(g, [v])):
            return False
    return True


def cut_vertices(g: Graph) -> list[int]:
    return [v for v in g.vertices if g.n > 1 and len(component_masks(delete_vertices(g, [v]))) > len(component_masks(g))]


def biconnected_component_edge_sets(g: Graph) -> list[tuple[Edge, ...]]:
    """Edge sets of the biconnected components (classic lowpoint DFS)."""
    index = {}
    low = {}
    stack: list[Edge] = []
    out: list[tuple[Edge, ...]] = []
    counter = [0]

    def dfs(u: int, parent: int):
        index[u] = low[u] = counter[0]
        counter[0] += 1
        for w in bits(g.adj[u]):
            if w == parent and parent >= 0:
                parent = -2  # skip the tree edge to the parent exactly once
                continue
            if w not in index:
                stack.append(_norm_edge((u, w)))
                dfs(w, u)
                low[u] = min(low[u], low[w])
                if low[w] >= index[u]:
                    comp = []
                    while True:
                        e = stack.pop()
                        comp.append(e)
                        if e == _norm_edge((u, w)):
                            break
                    out.append(tuple(sorted(comp)))
            elif index[w] < index[u]:
                stack.append(_norm_edge((u, w)))
                low[u] = min(low[u], index[w])

    import sys

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * g.n + 64))
    try:
        for s in g.vertices:
            if s not in index:
                dfs(s, -1)
    finally:
        sys.setrecursionlimit(old)
    return out


# ---------------------------------------------------------------------------
# canonical forms / isomorphism
# ---------------------------------------------------------------------------


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by multiset of neighbor-cell counts."""
    while True:
        cell_of = {}
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
        new_cells: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            sig = {}
            for v in c:
                key = tuple(sorted(cell_of[w] for w in bits(adj[v])))
                sig.setdefault(key, []).append(v)
            if len(sig) > 1:
                changed = True
            for key in sorted(sig):
                new_cells.append(sig[key])
        cells = new_cells
        if not changed:
            return cells


def _canon_search(g: Graph, cells: list[list[int]], best: list) -> None:
    cells = _refine(g.adj, cells)
    split_at = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if split_at is None:
        order = [c[0] for c in cells]
        pos = {v: i for i, v in enumerate(order)}
        bits_out = bytearray()
        word = 0
        nbits = 0
        for j in range(1, g.n):
            for i in range(j):
                word = word << 1 | (g.adj[order[i]] >> order[j] & 1)
                nbits += 1
                if nbits == 8:
                    bits_out.append(word)
                    word = nbits = 0
        if nbits:
            bits_out.append(word << (8 - nbits))
        key = bytes(bits_out)
        if best[0] is None or key < best[0]:
            best[0] = key
            best[1] = order
        return
    target = cells[split_at]
    for v in target:
        branched = (
            cells[:split_at]
            + [[v], [w for w in target if w != v]]
            + cells[split_at + 1 :]
        )
        _canon_search(g, branched, best)


def canonical_form(g: Graph, colors: tuple[int, ...] | None = None) -> bytes:
    """A byte string equal for two graphs iff they are isomorphic.

    With ``colors`` (one small int per vertex) the certificate identifies the
    color-preserving isomorphism class instead.
    """
    key = colors
    cached = g._canon.get(key)
    if cached is not None:
        return cached
    if colors is not None and len(colors) != g.n:
        raise ValueError("colors length mismatch")
    if g.n == 0:
        result = b"\x00"
    else:
        groups: dict[tuple, list[int]] = {}
        for v in g.vertices:
            k = (0 if colors is None else colors[v], g.degree(v))
            groups.setdefault(k, []).append(v)
        cells = [groups[k] for k in sorted(groups)]
        cell_sizes = tuple((k, len(groups[k])) for k in sorted(groups))
        best = [None, None]
        _canon_search(g, cells, best)
        head = repr((g.n, cell_sizes)).encode()
        result = head + b"|" + best[0]
    g._canon[key] = result
    return result


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# exhaustive generation (canonical-form deduplication by augmentation)
# ---------------------------------------------------------------------------

_ALL_GRAPHS: dict[int, list[Graph]] = {}


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """All graphs on n vertices up to isomorphism (one representative each)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n in _ALL_GRAPHS:
        return _ALL_GRAPHS[n]
    if n == 0:
        out = [Graph(0)]
    else:
        seen = {}
        for g in nonisomorphic_graphs(n - 1):
            base = list(g.edges)
            for mask in range(1 << (n - 1)):
                cand = Graph(n, base + [(v, n - 1) for v in bits(mask)])
                key = canonical_form(cand)
                if key not in seen:
                    seen[key] = cand
        out = sorted(seen.values(), key=lambda g: (g.m, g.edges))
    _ALL_GRAPHS[n] = out
    return out


def nonisomorphic_connected_graphs(n: int) -> list[Graph]:
    return [g for g in nonisomorphic_graphs(n) if is_connected(g)]


def connected_graphs_up_to(n: int) -> list[Graph]:
    out = []
    for k in range(1, n + 1):
        out.extend(nonisomorphic_connected_graphs(k))
    return out


def all_independent_sets(g: Graph) -> list[tuple[int, ...]]:
    """All independent vertex sets, the empty set included."""
    out = []
    for k in range(g.n + 1):
        for xs in combinations(g.vertices, k):
            if all(not g.has_edge(u, v) for u, v in combinations(xs, 2)):
                out.append(xs)
    return out
