"""Independent brute-force oracles for the four parameters.

These deliberately share no search machinery with the solvers in
``parameters``: edit distance enumerates edge subsets by size, the
brittleness oracles enumerate set partitions outright, and capacity runs
exact set packing over the explicitly enumerated minimal witnesses.  They
exist to pin the solvers down on small inputs.
"""

from __future__ import annotations

from itertools import combinations

from . import classes as _classes
from .classes import GraphClass
from .embedding import witness_edge_sets
from .graph import Graph, edge_induced_subgraph, induced_subgraph


def _check_size(g: Graph, max_edges: int) -> None:
    if g.m > max_edges:
        raise ValueError(f"oracle limited to {max_edges} edges, got {g.m}")


def edit_distance_oracle(c: GraphClass, g: Graph, max_edges: int = 16) -> int:
    """Smallest k such that deleting some k-subset of edges lands in c."""
    _check_size(g, max_edges)
    edges = g.edges
    for k in range(g.m + 1):
        for drop in combinations(edges, k):
            dropped = set(drop)
            sub = Graph(g.n, [e for e in edges if e not in dropped])
            if _classes.contains(c, sub):
                return k
    raise AssertionError("unreachable: deleting all edges always works")


def _set_partitions(items: tuple):
    """All partitions of items (restricted-growth enumeration)."""
    n = len(items)
    if n == 0:
        yield ()
        return

    def rec(i: int, groups: list[list]):
        if i == n:
            yield tuple(tuple(p) for p in groups)
            return
        for group in groups:
            group.append(items[i])
            yield from rec(i + 1, groups)
            group.pop()
        groups.append([items[i]])
        yield from rec(i + 1, groups)
        groups.pop()

    yield from rec(0, [])


def edge_brittleness_oracle(c: GraphClass, g: Graph, max_vertices: int = 8) -> int:
    """Minimum cross edges over all vertex partitions with member parts."""
    if g.n > max_vertices:
        raise ValueError(f"oracle limited to {max_vertices} vertices, got {g.n}")
    best = None
    for parts in _set_partitions(tuple(g.vertices)):
        if not all(
            _classes.contains(c, induced_subgraph(g, p)[0]) for p in parts
        ):
            continue
        owner = {v: i for i, p in enumerate(parts) for v in p}
        cross = sum(1 for u, v in g.edges if owner[u] != owner[v])
        if best is None or cross < best:
            best = cross
    assert best is not None  # singleton partition is always feasible
    return best


def vertex_brittleness_oracle(c: GraphClass, g: Graph, max_edges: int = 9) -> int:
    """Minimum boundary vertices over all edge partitions with member parts."""
    _check_size(g, max_edges)
    if g.m == 0:
        return 0
    best = None
    member_memo: dict[frozenset, bool] = {}

    def part_ok(p: tuple) -> bool:
        key = frozenset(p)
        hit = member_memo.get(key)
        if hit is None:
            hit = _classes.contains(c, edge_induced_subgraph(g, p)[0])
            member_memo[key] = hit
        return hit

    for parts in _set_partitions(g.edges):
        if not all(part_ok(p) for p in parts):
            continue
        touch: dict[int, int] = {}
        boundary = 0
        for i, p in enumerate(parts):
            for e in p:
                for v in e:
                    prev = touch.get(v)
                    if prev is None:
                        touch[v] = i
                    elif prev >= 0 and prev != i:
                        boundary += 1
                        touch[v] = -1
        if best is None or boundary < best:
            best = boundary
    assert best is not None
    return best


def _max_set_packing(sets: list[frozenset]) -> int:
    sets = sorted(sets, key=lambda s: (len(s), sorted(s)))
    best = 0

    def rec(start: int, used: frozenset, count: int):
        nonlocal best
        if count > best:
            best = count
        for j in range(start, len(sets)):
            if count + (len(sets) - j) <= best:
                break
            if not (sets[j] & used):
                rec(j + 1, used | sets[j], count + 1)

    rec(0, frozenset(), 0)
    return best


def capacity_oracle(c: GraphClass, g: Graph, max_edges: int = 16) -> int:
    """Exact set packing over all enumerated minimal witnesses.

    Restricting the packing to minimal witnesses loses nothing: any subgraph
    outside a monotone class still lies outside after shrinking to a minimal
    witness, and shrinking keeps the family edge-disjoint.  The solver relies
    on the same fact, so this oracle re-derives the witness list through the
    embedding engine's exhaustive enumeration instead.
    """
    _check_size(g, max_edges)
    sets = witness_edge_sets(c.forbidden, g)
    return _max_set_packing(sets)
