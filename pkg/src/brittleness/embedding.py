"""Subdivision embeddings: deciding and exhibiting topological minors.

An embedding of a pattern H into a host G maps V(H) injectively to branch
vertices of G and every edge of H to a path in G so that the paths are
internally disjoint and no internal vertex is a branch image.  H is a
topological minor of G exactly when such an embedding exists.

The backtracking engine here is the source of truth.  The module also
provides recognizers for the specific small patterns that dominate this
package (cycle, diamond, K2,3, K4); they are exact, near-linear, and
cross-checked against the engine in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import (
    Graph,
    bits,
    canonical_form,
    edge_induced_subgraph,
    is_2_connected,
    suppress,
    are_isomorphic,
)


class ConfigurationError(ValueError):
    """A forbidden-pattern list violates its preconditions."""


@dataclass(frozen=True)
class Embedding:
    """branch_map[u] is the host image of pattern vertex u; edge_paths is
    aligned with the pattern's sorted edge tuple, each path running from the
    image of the smaller endpoint to the image of the larger one."""

    branch_map: tuple[int, ...]
    edge_paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Witness:
    """An embedding of one forbidden pattern together with the subgraph of
    the host it spans."""

    pattern: Graph
    embedding: Embedding
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]


def embedding_image(h: Graph, emb: Embedding) -> tuple[frozenset, frozenset]:
    """Vertex set and edge set of the host subgraph spanned by an embedding."""
    vs = set(emb.branch_map)
    es = set()
    for path in emb.edge_paths:
        vs.update(path)
        es.update(
            (a, b) if a < b else (b, a) for a, b in zip(path, path[1:])
        )
    return frozenset(vs), frozenset(es)


def embedding_is_valid(h: Graph, g: Graph, emb: Embedding) -> bool:
    """Replay an embedding against the host and check all invariants."""
    bm = emb.branch_map
    if len(bm) != h.n or len(set(bm)) != h.n:
        return False
    if any(not (0 <= v < g.n) for v in bm):
        return False
    if len(emb.edge_paths) != h.m:
        return False
    branch_set = set(bm)
    seen_internal: set[int] = set()
    all_path_vertices: list[set[int]] = []
    for (u, v), path in zip(h.edges, emb.edge_paths):
        if len(path) < 2 or len(set(path)) != len(path):
            return False
        if path[0] != bm[u] or path[-1] != bm[v]:
            return False
        if any(not g.has_edge(a, b) for a, b in zip(path, path[1:])):
            return False
        internal = set(path[1:-1])
        if internal & branch_set:
            return False
        if internal & seen_internal:
            return False
        for prev in all_path_vertices:
            if internal & prev:
                return False
        seen_internal |= internal
        all_path_vertices.append(set(path))
    return True


# ---------------------------------------------------------------------------
# the backtracking engine
# ---------------------------------------------------------------------------


def _plan(h: Graph) -> tuple[list[int], list[list[tuple[int, int]]]]:
    """Order pattern vertices so each new one touches as many placed ones as
    possible; steps[i] lists (edge_index, placed_vertex) to realize when
    vertex order[i] is assigned."""
    order: list[int] = []
    placed: set[int] = set()
    remaining = set(h.vertices)
    while remaining:
        u = max(
            remaining,
            key=lambda x: (
                sum(1 for w in h.neighbors(x) if w in placed),
                h.degree(x),
                -x,
            ),
        )
        order.append(u)
        placed.add(u)
        remaining.remove(u)
    eidx = {e: i for i, e in enumerate(h.edges)}
    steps: list[list[tuple[int, int]]] = []
    for i, u in enumerate(order):
        earlier = set(order[:i])
        todo = []
        for w in h.neighbors(u):
            if w in earlier:
                e = (u, w) if u < w else (w, u)
                todo.append((eidx[e], w))
        steps.append(sorted(todo))
    return order, steps


def iter_embeddings(h: Graph, g: Graph) -> Iterator[Embedding]:
    """All embeddings of h into g, in a fixed deterministic order."""
    if h.n > g.n or h.m > g.m:
        return
    if h.n == 0:
        yield Embedding((), ())
        return
    hdeg = h.degrees()
    gdeg = g.degrees()
    order, steps = _plan(h)
    assign = [-1] * h.n
    paths: list[tuple[int, ...] | None] = [None] * h.m

    def paths_between(s: int, t: int, used: int) -> Iterator[tuple[tuple[int, ...], int]]:
        # all simple s-t paths whose internal vertices avoid `used`
        def extend(cur: int, acc: tuple[int, ...], used2: int):
            for w in bits(g.adj[cur]):
                if w == t:
                    yield acc + (t,), used2
                elif not used2 >> w & 1:
                    yield from extend(w, acc + (w,), used2 | 1 << w)

        yield from extend(s, (s,), used)

    def realize(i: int, k: int, used: int) -> Iterator[Embedding]:
        if k == len(steps[i]):
            yield from place(i + 1, used)
            return
        e, w = steps[i][k]
        s, t = assign[order[i]], assign[w]
        for path, used2 in paths_between(s, t, used):
            paths[e] = path if order[i] < w else path[::-1]
            yield from realize(i, k + 1, used2)
            paths[e] = None

    def place(i: int, used: int) -> Iterator[Embedding]:
        if i == len(order):
            yield Embedding(tuple(assign), tuple(paths))  # type: ignore[arg-type]
            return
        u = order[i]
        need = hdeg[u]
        for v in g.vertices:
            if used >> v & 1 or gdeg[v] < need:
                continue
            assign[u] = v
            yield from realize(i, 0, used | 1 << v)
            assign[u] = -1

    yield from place(0, 0)


def find_embedding(h: Graph, g: Graph) -> Embedding | None:
    """First embedding of h into g in the engine's order, or None."""
    for emb in iter_embeddings(h, g):
        return emb
    return None


def has_topological_minor(h: Graph, g: Graph) -> bool:
    return find_embedding(h, g) is not None


def is_free(forbidden: Sequence[Graph], g: Graph) -> bool:
    """True iff no pattern in `forbidden` embeds into g (engine semantics)."""
    return all(find_embedding(h, g) is None for h in forbidden)


# ---------------------------------------------------------------------------
# minimal witnesses
# ---------------------------------------------------------------------------


def validate_forbidden(forbidden: Sequence[Graph]) -> None:
    for h in forbidden:
        if not is_2_connected(h):
            raise ConfigurationError(
                f"forbidden pattern {h!r} is not 2-connected"
            )


def _contains_some(forbidden: Sequence[Graph], g: Graph) -> Graph | None:
    for h in forbidden:
        if find_embedding(h, g) is not None:
            return h
    return None


def find_minimal_witness(
    forbidden: Sequence[Graph], g: Graph
) -> Witness | None:
    """An edge-minimal subgraph of g spanning a forbidden subdivision.

    Minimality is by post-processing: keep deleting witness edges while the
    remainder still spans some forbidden subdivision.
    """
    validate_forbidden(forbidden)
    first = None
    for h in forbidden:
        emb = find_embedding(h, g)
        if emb is not None:
            first = (h, emb)
            break
    if first is None:
        return None
    _, emb = first
    _, eset = embedding_image(first[0], emb)
    edges = sorted(eset)
    changed = True
    while changed:
        changed = False
        for e in list(edges):
            rest = [x for x in edges if x != e]
            sub, relab = edge_induced_subgraph(g, rest)
            if _contains_some(forbidden, sub) is not None:
                edges = rest
                changed = True
                break
    sub, relab = edge_induced_subgraph(g, edges)
    back = {i: v for v, i in relab.items()}
    for h in forbidden:
        emb2 = find_embedding(h, sub)
        if emb2 is not None:
            bm = tuple(back[x] for x in emb2.branch_map)
            paths = tuple(tuple(back[x] for x in p) for p in emb2.edge_paths)
            lifted = Embedding(bm, paths)
            vs, es = embedding_image(h, lifted)
            return Witness(h, lifted, tuple(sorted(vs)), tuple(sorted(es)))
    raise AssertionError("minimalized witness lost all patterns")


def witness_edge_sets(
    forbidden: Sequence[Graph], g: Graph
) -> list[frozenset]:
    """Edge sets of all inclusion-minimal forbidden-subdivision subgraphs."""
    images: set[frozenset] = set()
    for h in forbidden:
        for emb in iter_embeddings(h, g):
            images.add(embedding_image(h, emb)[1])
    out = [
        s
        for s in images
        if not any(t < s for t in images)
    ]
    return sorted(out, key=lambda s: (len(s), sorted(s)))


# ---------------------------------------------------------------------------
# exact recognizers for the standard small patterns
# ---------------------------------------------------------------------------


def has_cycle(g: Graph) -> bool:
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return True
        parent[ru] = rv
    return False


def _max_disjoint_paths(g: Graph, a: int, b: int, skip_direct: bool, goal: int) -> int:
    """Max number of internally vertex-disjoint a-b paths (Menger), counting
    the direct edge unless skip_direct.  Stops once `goal` is reached."""
    # unit-capacity flow on the split digraph: in(v)=2v, out(v)=2v+1
    src, snk = 2 * a + 1, 2 * b
    cap: dict[int, dict[int, int]] = {}

    def add(x: int, y: int):
        cap.setdefault(x, {})[y] = 1
        cap.setdefault(y, {}).setdefault(x, 0)

    for v in g.vertices:
        if v != a and v != b:
            add(2 * v, 2 * v + 1)
    for u, v in g.edges:
        if skip_direct and {u, v} == {a, b}:
            continue
        add(2 * u + 1, 2 * v)
        add(2 * v + 1, 2 * u)
    flow = 0
    while flow < goal:
        prev = {src: src}
        queue = [src]
        while queue and snk not in prev:
            x = queue.pop()
            for y, c in cap.get(x, {}).items():
                if c > 0 and y not in prev:
                    prev[y] = x
                    queue.append(y)
        if snk not in prev:
            break
        y = snk
        while y != src:
            x = prev[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
        flow += 1
    return flow


def has_theta_pair(g: Graph, require_length_2: bool) -> bool:
    """Is there a vertex pair joined by 3 internally disjoint paths?

    With require_length_2 the direct edge between the pair is not allowed as
    one of the paths.  This decides containment of a K2,3 subdivision
    (require_length_2=True) or a diamond subdivision (False).
    """
    cands = [v for v in g.vertices if g.degree(v) >= 3]
    for i, a in enumerate(cands):
        for b in cands[i + 1 :]:
            if _max_disjoint_paths(g, a, b, require_length_2, 3) >= 3:
                return True
    return False


def has_k4_subdivision(g: Graph) -> bool:
    """Series-parallel reduction: suppress degree-<=2 structure (merging the
    parallel edges that arise); anything left has min degree 3 and therefore
    spans a K4 subdivision."""
    adjset = {v: set(g.neighbors(v)) for v in g.vertices}
    work = set(g.vertices)
    while work:
        v = work.pop()
        if v not in adjset:
            continue
        d = len(adjset[v])
        if d > 2:
            continue
        if d == 2:
            u, w = adjset[v]
            adjset[u].discard(v)
            adjset[w].discard(v)
            if w not in adjset[u]:
                adjset[u].add(w)
                adjset[w].add(u)
            work.update((u, w))
        elif d == 1:
            (u,) = adjset[v]
            adjset[u].discard(v)
            work.add(u)
        del adjset[v]
    return bool(adjset)


# ---------------------------------------------------------------------------
# independent brute force used as a test oracle
# ---------------------------------------------------------------------------


_SUBDIV_CACHE: dict[tuple[bytes, bytes], bool] = {}


def is_subdivision_of(s: Graph, h: Graph) -> bool:
    """Is s (exactly) a subdivision of h?  Tries every admissible suppression
    order, since suppressing the image of a degree-2 branch vertex can change
    the answer."""
    if s.m - s.n != h.m - h.n or s.n < h.n:
        return False
    if sorted(d for d in s.degrees() if d != 2) != sorted(
        d for d in h.degrees() if d != 2
    ):
        return False
    if s.n == h.n:
        return are_isomorphic(s, h)
    key = (canonical_form(s), canonical_form(h))
    hit = _SUBDIV_CACHE.get(key)
    if hit is not None:
        return hit
    out = False
    for v in s.vertices:
        if s.degree(v) == 2:
            x, y = s.neighbors(v)
            if not s.has_edge(x, y) and is_subdivision_of(suppress(s, v), h):
                out = True
                break
    _SUBDIV_CACHE[key] = out
    return out


def has_subdivision_bruteforce(h: Graph, g: Graph) -> bool:
    """Reference decision: enumerate every edge subset of g and test it for
    being a subdivision of h."""
    m = g.m
    edges = g.edges
    target = h.m - h.n
    for mask in range(1 << m):
        if mask.bit_count() < h.m:
            continue
        sub_edges = [edges[i] for i in bits(mask)]
        sub, _ = edge_induced_subgraph(g, sub_edges)
        if sub.m - sub.n != target:
            continue
        if is_subdivision_of(sub, h):
            return True
    return False
