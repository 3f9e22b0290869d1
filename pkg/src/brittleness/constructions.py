"""Named graph families and the obstruction constructions.

Includes the glueing construction Fan(G, S, k) (k copies of G identified
along S and the edges inside S), subdivided wheels W+_k, K2,3 plus an edge,
the two six-vertex counterexample graphs used for contraction
non-monotonicity, and the hemmed-graph stretching operator sigma with the
iterated family it generates (edit distance 1, edge-brittleness growing).
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import DIAMOND, K23, K3, K4
from .graph import Graph


@dataclass(frozen=True)
class FanSpec:
    base: Graph
    s: tuple[int, ...]
    k: int

    def __post_init__(self):
        s = tuple(sorted(set(self.s)))
        object.__setattr__(self, "s", s)
        for v in s:
            if not (0 <= v < self.base.n):
                raise ValueError(f"shared vertex {v} not in base graph")
        if len(s) >= self.base.n:
            raise ValueError("shared set must be a proper subset of the base")
        if self.k < 1:
            raise ValueError("multiplicity k must be positive")


def fan(spec: FanSpec) -> Graph:
    """k copies of the base glued along S: shared vertices get labels
    0..|S|-1 (in S order), then each copy's private vertices block by block."""
    base, s, k = spec.base, spec.s, spec.k
    shared = {v: i for i, v in enumerate(s)}
    private = [v for v in base.vertices if v not in shared]
    block = len(private)
    edges = set()
    for u, v in base.edges:
        if u in shared and v in shared:
            edges.add((shared[u], shared[v]))
    for copy in range(k):
        lab = dict(shared)
        for j, v in enumerate(private):
            lab[v] = len(s) + copy * block + j
        for u, v in base.edges:
            if u in shared and v in shared:
                continue
            a, b = lab[u], lab[v]
            edges.add((a, b) if a < b else (b, a))
    return Graph(len(s) + k * block, edges)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("n >= 1 required")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("both sides must be nonempty")
    return Graph(m + n, [(u, m + v) for u in range(m) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("n >= 1 required")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def diamond() -> Graph:
    return DIAMOND


def k23_plus() -> Graph:
    """K2,3 plus the edge joining its two degree-3 vertices."""
    return Graph(5, list(K23.edges) + [(0, 1)])


def w_plus(k: int) -> Graph:
    """Wheel on k+1 vertices with every rim edge subdivided: a cycle on 2k
    vertices plus a hub adjacent to the k even cycle positions."""
    if k < 3:
        raise ValueError("w_plus needs k >= 3")
    hub = 2 * k
    edges = [(i, (i + 1) % (2 * k)) for i in range(2 * k)]
    edges += [(hub, 2 * i) for i in range(k)]
    return Graph(2 * k + 1, edges)


def theta_graph() -> Graph:
    """Two degree-3 vertices (0 and 1) joined by internally disjoint paths of
    lengths 1, 3, 3.  Contracting the edge 01 yields the bowtie."""
    return Graph(
        6,
        [(0, 1), (0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1)],
    )


THETA_CONTRACT_EDGE = (0, 1)


def hexagon_with_chords() -> Graph:
    """Hexagon 0..5 plus chords (2,5), (0,4), (0,3), (1,3); contracting the
    chord (2,5) increases the edit distance to outerplanarity."""
    hexagon = [(i, (i + 1) % 6) for i in range(6)]
    return Graph(6, hexagon + [(2, 5), (0, 4), (0, 3), (1, 3)])


HEXAGON_CONTRACT_EDGE = (2, 5)


# ---------------------------------------------------------------------------
# hemmed graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HemmedGraph:
    """A graph with a distinguished path (given as its ordered vertices)."""

    g: Graph
    path: tuple[int, ...]

    def __post_init__(self):
        p = tuple(self.path)
        object.__setattr__(self, "path", p)
        if len(set(p)) != len(p):
            raise ValueError("path vertices must be distinct")
        for a, b in zip(p, p[1:]):
            if not self.g.has_edge(a, b):
                raise ValueError(f"path step ({a},{b}) is not an edge")


def sigma(h: HemmedGraph) -> HemmedGraph:
    """Insert a new vertex between consecutive path vertices; the new
    distinguished path alternates old and new vertices.  The old graph is
    untouched as a subgraph."""
    k = len(h.path)
    if k < 2:
        raise ValueError("path must have at least 2 vertices")
    g = h.g
    edges = list(g.edges)
    new_path = [h.path[0]]
    for i in range(k - 1):
        u = g.n + i
        edges.append((h.path[i], u))
        edges.append((u, h.path[i + 1]))
        new_path.extend((u, h.path[i + 1]))
    return HemmedGraph(Graph(g.n + k - 1, edges), tuple(new_path))


# The starting hemmed graph is K4 with the spanning path 0-1-2-3; the edge
# deleted to reach outerplanarity joins the path's first vertex to its third.
PROP_EXAMPLE_DELETED_EDGE = (0, 2)


def prop_example_hemmed(level: int) -> HemmedGraph:
    if level < 1:
        raise ValueError("level >= 1 required")
    h = HemmedGraph(K4, (0, 1, 2, 3))
    for _ in range(level - 1):
        h = sigma(h)
    return h


def prop_example_graph(level: int) -> Graph:
    """Level-l member of the family with edit distance 1 to outerplanarity
    and edge-brittleness at least l+1."""
    return prop_example_hemmed(level).g


NAMED_FAMILIES = {
    "kn": lambda n: complete_graph(n),
    "kmn": lambda m, n: complete_bipartite(m, n),
    "cn": lambda n: cycle_graph(n),
    "pn": lambda n: path_graph(n),
    "k3": lambda: K3,
    "k4": lambda: K4,
    "d": lambda: DIAMOND,
    "diamond": lambda: DIAMOND,
    "k23": lambda: K23,
    "k23-plus": k23_plus,
    "w-plus": lambda k: w_plus(k),
    "theta": theta_graph,
    "chorded-hexagon": hexagon_with_chords,
    "prop-example": lambda l: prop_example_graph(l),
}
