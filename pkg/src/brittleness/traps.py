"""Snare and trap predicates plus exhaustive trap enumeration.

A pattern-H snare is a pair (J, S): H is a topological minor of J, S is an
independent set, and J minus S is connected.  A trap is a snare that is
minimal two ways: no proper subgraph (restricting S to its vertices) is a
snare, and suppressing any degree-2 vertex outside S breaks snare-ness.

Subgraph minimality is decided exactly without enumerating all subgraphs:
a proper snare subgraph exists iff some H-subdivision image, together with a
cheapest connector (a Steiner tree in J minus S joining the image's
S-avoiding components), fails to exhaust J.  Enumerating images is complete
because every snare subgraph contains one, and a minimum-edge connector for
it inside the candidate subgraph is also available inside J minus S.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from . import embedding as _embedding
from .classes import DIAMOND, K23, K3, K4
from .graph import (
    Graph,
    are_isomorphic,
    bits,
    canonical_form,
    connected_graphs_up_to,
    delete_vertices,
    is_connected,
    suppress,
)
from .io import graph_from_graph6, graph_to_graph6, read_graph6_lines

STATUS_NOT_SNARE = "not-snare"
STATUS_SNARE = "snare-not-trap"
STATUS_TRAP = "trap"

_PATTERN_NAMES = (("k3", K3), ("d", DIAMOND), ("k23", K23), ("k4", K4))


def pattern_name(h: Graph) -> str:
    for name, ref in _PATTERN_NAMES:
        if are_isomorphic(h, ref):
            return name
    return f"pattern<{graph_to_graph6(h)}>"


def _has_pattern(h: Graph, g: Graph) -> bool:
    if are_isomorphic(h, K3):
        return _embedding.has_cycle(g)
    if are_isomorphic(h, DIAMOND):
        return _embedding.has_theta_pair(g, require_length_2=False)
    if are_isomorphic(h, K23):
        return _embedding.has_theta_pair(g, require_length_2=True)
    if are_isomorphic(h, K4):
        return _embedding.has_k4_subdivision(g)
    return _embedding.find_embedding(h, g) is not None


@dataclass(frozen=True)
class SnareCandidate:
    j: Graph
    s: tuple[int, ...]
    h: Graph

    def __post_init__(self):
        s = tuple(sorted(set(self.s)))
        object.__setattr__(self, "s", s)
        for v in s:
            if not (0 <= v < self.j.n):
                raise ValueError(f"marked vertex {v} not in graph")


@dataclass(frozen=True)
class TrapRecord:
    j: Graph
    s: tuple[int, ...]
    h_name: str
    status: str
    key: bytes

    def to_dict(self) -> dict:
        return {
            "j_graph6": graph_to_graph6(self.j),
            "s_vertices": list(self.s),
            "h_name": self.h_name,
            "status": self.status,
        }


def _candidate_key(j: Graph, s: Sequence[int]) -> bytes:
    colors = tuple(1 if v in set(s) else 0 for v in j.vertices)
    return canonical_form(j, colors=colors)


def is_snare(cand: SnareCandidate) -> bool:
    j, s = cand.j, set(cand.s)
    for u, v in j.edges:
        if u in s and v in s:
            return False
    rest = [v for v in j.vertices if v not in s]
    if not rest:
        return False
    if not is_connected(delete_vertices(j, sorted(s))):
        return False
    return _has_pattern(cand.h, j)


def _images(h: Graph, j: Graph) -> list[tuple[frozenset, frozenset]]:
    """Distinct (vertex set, edge set) images of all embeddings of h in j."""
    seen = set()
    out = []
    for emb in _embedding.iter_embeddings(h, j):
        img = _embedding.embedding_image(h, emb)
        if img not in seen:
            seen.add(img)
            out.append(img)
    return out


def _min_connector_edges(
    j: Graph, s: set[int], img_vs: frozenset, img_es: frozenset
) -> int:
    """Fewest edges of J-minus-S, outside the image, whose addition makes the
    image's S-avoiding part connected.  The quotient graph contracts each
    component of the image minus S; a minimum connector is a spanning tree of
    a cheapest connected node subset containing all component nodes."""
    body = [v for v in j.vertices if v not in s]
    inner = [v for v in body if v in img_vs]
    # components of the image minus S
    comp_of: dict[int, int] = {}
    ncomp = 0
    inner_set = set(inner)
    for v in inner:
        if v in comp_of:
            continue
        stack = [v]
        comp_of[v] = ncomp
        while stack:
            x = stack.pop()
            for y in bits(j.adj[x]):
                e = (x, y) if x < y else (y, x)
                if y in inner_set and y not in comp_of and e in img_es:
                    comp_of[y] = ncomp
                    stack.append(y)
        ncomp += 1
    free = [v for v in body if v not in img_vs]
    node_of = dict(comp_of)
    for i, v in enumerate(free):
        node_of[v] = ncomp + i
    nnodes = ncomp + len(free)
    qadj = [0] * nnodes
    for u, v in j.edges:
        if u in s or v in s or (u, v) in img_es:
            continue
        a, b = node_of[u], node_of[v]
        if a != b:
            qadj[a] |= 1 << b
            qadj[b] |= 1 << a
    if ncomp <= 1:
        return 0
    terminals = (1 << ncomp) - 1
    free_nodes = list(range(ncomp, nnodes))
    best = None
    for extra in range(len(free_nodes) + 1):
        if best is not None:
            break
        for chosen in combinations(free_nodes, extra):
            umask = terminals
            for x in chosen:
                umask |= 1 << x
            # connectivity of the quotient restricted to umask
            start = umask & -umask
            comp = start
            frontier = comp
            while frontier:
                grow = 0
                for x in bits(frontier):
                    grow |= qadj[x] & umask
                frontier = grow & ~comp
                comp |= grow
            if comp == umask:
                best = ncomp + extra - 1
                break
    if best is None:
        raise AssertionError("connector must exist: J minus S is connected")
    return best


def is_trap(cand: SnareCandidate) -> bool:
    return classify(cand) == STATUS_TRAP


def classify(cand: SnareCandidate, images=None) -> str:
    """not-snare / snare-not-trap / trap."""
    if not is_snare(cand):
        return STATUS_NOT_SNARE
    j, s = cand.j, set(cand.s)
    if any(j.degree(v) == 0 for v in j.vertices):
        # dropping an isolated vertex leaves a proper snare
        return STATUS_SNARE
    # suppression minimality
    for v in j.vertices:
        if v in s or j.degree(v) != 2:
            continue
        s2 = tuple(x if x < v else x - 1 for x in cand.s)
        if is_snare(SnareCandidate(suppress(j, v), s2, cand.h)):
            return STATUS_SNARE
    # proper-subgraph minimality via image + cheapest-connector analysis
    if images is None:
        images = _images(cand.h, j)
    for img_vs, img_es in images:
        need = _min_connector_edges(j, s, img_vs, img_es)
        if len(img_es) + need < j.m:
            return STATUS_SNARE
    return STATUS_TRAP


def _builtin_candidates(max_n: int) -> list[Graph]:
    return connected_graphs_up_to(max_n)


def enumerate_traps(
    h: Graph,
    max_n: int,
    source: str | Iterable[str] | None = None,
) -> list[TrapRecord]:
    """All traps (J, S) with |V(J)| <= max_n, up to isomorphism of the
    marked pair.

    Built-in candidate generation covers up to 7 vertices; beyond that a
    graph6 stream of candidate graphs (an iterable of lines or one string)
    must be supplied.
    """
    builtin_cap = 7
    candidates: dict[bytes, Graph] = {}
    for g in _builtin_candidates(min(max_n, builtin_cap)):
        candidates[canonical_form(g)] = g
    if max_n > builtin_cap:
        if source is None:
            raise ValueError(
                f"built-in generation covers up to {builtin_cap} vertices; "
                f"supply a graph6 stream for max_n={max_n}"
            )
        lines = source.splitlines() if isinstance(source, str) else source
        for line in lines:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            g = graph_from_graph6(line)
            if g.n <= max_n and is_connected(g):
                candidates.setdefault(canonical_form(g), g)
    records = []
    seen_pairs: set[bytes] = set()
    hname = pattern_name(h)
    for j in candidates.values():
        if not _has_pattern(h, j):
            continue
        images = _images(h, j)
        for s in _independent_sets(j):
            key = _candidate_key(j, s)
            if key in seen_pairs:
                continue
            seen_pairs.add(key)
            cand = SnareCandidate(j, s, h)
            if classify(cand, images=images) == STATUS_TRAP:
                records.append(TrapRecord(j, s, hname, STATUS_TRAP, key))
    records.sort(key=lambda r: (r.j.n, len(r.s), r.key))
    return records


def _independent_sets(g: Graph) -> list[tuple[int, ...]]:
    out = []
    for k in range(g.n + 1):
        for xs in combinations(g.vertices, k):
            ok = True
            for i, u in enumerate(xs):
                for v in xs[i + 1 :]:
                    if g.has_edge(u, v):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.append(xs)
    return out
