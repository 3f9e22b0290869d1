"""Exact computation of the four class-distance parameters with certificates.

* edit distance        -- fewest edge deletions into the class
* edge brittleness     -- fewest cross edges over vertex partitions with all
                          parts inducing class members
* vertex brittleness   -- fewest boundary vertices over edge partitions with
                          all parts inducing class members
* capacity             -- most pairwise edge-disjoint subgraphs outside the
                          class

All solvers are exact searches over bitmasks with memoization.  Edit distance
and capacity decompose over biconnected components (every forbidden pattern
is 2-connected, so every witness lives inside one block).  Vertex brittleness
is computed through its boundary-set characterization: the minimum size of a
vertex set Y such that every Y-bridge belongs to the class; the test suite
validates that characterization against a partition-enumeration oracle.

Certificates are deterministic: each solver finishes with a lexicographic
re-search at the optimal value.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Any

from . import classes as _classes
from .classes import GraphClass
from .embedding import find_embedding
from .graph import (
    Graph,
    biconnected_component_edge_sets,
    bits,
    edge_induced_subgraph,
    induced_subgraph,
)
from .io import graph_to_graph6


class SizeGuardError(RuntimeError):
    """Input exceeds the configured solver limits."""


class InternalCheckError(AssertionError):
    """A cross-parameter consistency check failed; indicates a solver bug."""


@dataclass(frozen=True)
class SolverLimits:
    eta_max_vertices: int = 20
    eta_max_edges: int = 40
    kappa_max_vertices: int = 20
    kappa_max_edges: int = 40
    edit_max_edges: int = 60
    capacity_max_edges: int = 40
    oracle_max_edges: int = 16

    @staticmethod
    def from_env() -> "SolverLimits":
        """Defaults, overridable through BRITTLENESS_LIMITS="key=value,..."."""
        limits = SolverLimits()
        raw = os.environ.get("BRITTLENESS_LIMITS", "")
        if raw:
            overrides = {}
            for item in raw.split(","):
                key, _, value = item.partition("=")
                key = key.strip()
                if key not in limits.__dataclass_fields__:
                    raise SizeGuardError(f"unknown limit {key!r} in BRITTLENESS_LIMITS")
                overrides[key] = int(value)
            limits = replace(limits, **overrides)
        return limits


UNLIMITED = SolverLimits(
    eta_max_vertices=64,
    eta_max_edges=10**6,
    kappa_max_vertices=64,
    kappa_max_edges=10**6,
    edit_max_edges=10**6,
    capacity_max_edges=10**6,
    oracle_max_edges=10**6,
)


@dataclass
class ParameterReport:
    parameter: str
    class_name: str
    graph6: str
    value: int
    certificate: Any
    elapsed_ms: float
    nodes_expanded: int

    def to_dict(self) -> dict:
        return {
            "parameter": self.parameter,
            "class": self.class_name,
            "graph6": self.graph6,
            "value": self.value,
            "certificate": self.certificate,
            "elapsed_ms": self.elapsed_ms,
            "nodes_expanded": self.nodes_expanded,
        }


def _guard(cond: bool, message: str) -> None:
    if not cond:
        raise SizeGuardError(message)


# ---------------------------------------------------------------------------
# shared solver context over one (class, graph) pair
# ---------------------------------------------------------------------------


class _Ctx:
    def __init__(self, c: GraphClass, g: Graph):
        _classes.require_valid(c)
        self.c = c
        self.g = g
        self.edges = g.edges
        self.m = g.m
        self.eidx = {e: i for i, e in enumerate(self.edges)}
        self.incident = [0] * g.n
        for i, (u, v) in enumerate(self.edges):
            self.incident[u] |= 1 << i
            self.incident[v] |= 1 << i
        self.full = (1 << self.m) - 1
        self._graphs: dict[int, Graph] = {}
        self._member: dict[int, bool] = {}
        self._vmember: dict[int, bool] = {}
        self._witness: dict[int, int | None] = {}
        self._witnesses_through: dict[tuple[int, int], tuple[int, ...]] = {}
        self.forest_like = all(k == "k3" for k in c._kinds)
        self.min_witness_edges = min((h.m for h in c.forbidden), default=1)
        self.nodes = 0
        self._block_lists: dict[int, tuple[int, ...]] = {}
        self._lb: dict[int, int] = {}

    def graph_of(self, mask: int) -> Graph:
        g = self._graphs.get(mask)
        if g is None:
            g = Graph(self.g.n, [self.edges[i] for i in bits(mask)])
            self._graphs[mask] = g
        return g

    def member(self, mask: int) -> bool:
        r = self._member.get(mask)
        if r is None:
            r = _classes.contains(self.c, self.graph_of(mask))
            self._member[mask] = r
        return r

    def vmember(self, vmask: int) -> bool:
        """Membership of the subgraph induced by a vertex mask."""
        r = self._vmember.get(vmask)
        if r is None:
            emask = 0
            for i, (u, v) in enumerate(self.edges):
                if vmask >> u & 1 and vmask >> v & 1:
                    emask |= 1 << i
            r = self.member(emask)
            self._vmember[vmask] = r
        return r

    # -- minimal witnesses ---------------------------------------------------

    def _shortest_cycle_mask(self, mask: int) -> int | None:
        best: tuple[int, int] | None = None  # (length, mask)
        adj = [0] * self.g.n
        for i in bits(mask):
            u, v = self.edges[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        for i in bits(mask):
            u, v = self.edges[i]
            # shortest u-v path avoiding this edge, by BFS
            prev = {u: -1}
            frontier = [u]
            found = False
            while frontier and not found:
                nxt = []
                for x in frontier:
                    for y in bits(adj[x]):
                        if x == u and y == v:
                            continue
                        if y not in prev:
                            prev[y] = x
                            if y == v:
                                found = True
                                break
                            nxt.append(y)
                    if found:
                        break
                frontier = nxt
            if not found:
                continue
            cyc = 1 << i
            length = 1
            y = v
            while y != u:
                x = prev[y]
                e = (x, y) if x < y else (y, x)
                cyc |= 1 << self.eidx[e]
                length += 1
                y = x
            if best is None or length < best[0]:
                best = (length, cyc)
                if length == 3:
                    break
        return None if best is None else best[1]

    def witness_mask(self, mask: int) -> int | None:
        """Edge mask of one minimal witness inside `mask`, or None."""
        if mask in self._witness:
            return self._witness[mask]
        out: int | None
        if self.member(mask):
            out = None
        elif self.forest_like:
            out = self._shortest_cycle_mask(mask)
        else:
            sub = self.graph_of(mask)
            image = None
            for h in self.c.forbidden:
                emb = find_embedding(h, sub)
                if emb is not None:
                    from .embedding import embedding_image

                    image = embedding_image(h, emb)[1]
                    break
            assert image is not None
            cur = sorted(self.eidx[e] for e in image)
            changed = True
            while changed:
                changed = False
                for i in list(cur):
                    rest = [x for x in cur if x != i]
                    rest_mask = 0
                    for x in rest:
                        rest_mask |= 1 << x
                    if not self.member(rest_mask):
                        cur = rest
                        changed = True
                        break
            out = 0
            for i in cur:
                out |= 1 << i
        self._witness[mask] = out
        return out

    def _cycles_through(self, mask: int, ei: int) -> list[int]:
        """Edge masks of all cycles inside `mask` that use edge ei."""
        u, v = self.edges[ei]
        adj = [0] * self.g.n
        for i in bits(mask):
            a, b = self.edges[i]
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        out: list[int] = []

        def walk(x: int, visited: int, emask: int):
            for y in bits(adj[x]):
                if x == u and y == v:
                    continue
                e = (x, y) if x < y else (y, x)
                bit = 1 << self.eidx[e]
                if y == v:
                    out.append(emask | bit | 1 << ei)
                elif not visited >> y & 1:
                    walk(y, visited | 1 << y, emask | bit)

        walk(u, 1 << u | 1 << v, 0)
        return sorted(set(out))

    def block_witness_list(self, block: int) -> tuple[int, ...]:
        """All minimal witnesses inside a block, enumerated once.

        Edge-minimality of a witness does not depend on the host graph, so
        the minimal witnesses of any edge-subset state are exactly the listed
        masks that fit inside it.
        """
        hit = self._block_lists.get(block)
        if hit is not None:
            return hit
        from .embedding import witness_edge_sets

        sets = witness_edge_sets(self.c.forbidden, self.graph_of(block))
        masks = []
        for s in sets:
            wm = 0
            for e in s:
                wm |= 1 << self.eidx[e]
            masks.append(wm)
        result = tuple(sorted(masks, key=lambda w: (w.bit_count(), w)))
        self._block_lists[block] = result
        return result

    def witnesses_through(self, mask: int, ei: int, block: int) -> tuple[int, ...]:
        """All minimal witnesses inside `mask` that use edge ei."""
        key = (mask, ei)
        hit = self._witnesses_through.get(key)
        if hit is not None:
            return hit
        if self.forest_like:
            result = tuple(self._cycles_through(mask, ei))
        else:
            result = tuple(
                w
                for w in self.block_witness_list(block)
                if w >> ei & 1 and not (w & ~mask)
            )
        self._witnesses_through[key] = result
        return result

    def rank(self, mask: int) -> int:
        """Cycle rank of the edge-subset state (edges - vertices + parts)."""
        from .graph import component_masks

        g = self.graph_of(mask)
        return mask.bit_count() - g.n + len(component_masks(g))

    def packing_lb(self, mask: int) -> int:
        """Greedy edge-disjoint witness count: lower bound for capacity and
        for the edit distance."""
        hit = self._lb.get(mask)
        if hit is not None:
            return hit
        count = 0
        cur = mask
        while True:
            w = self.witness_mask(cur)
            if w is None:
                break
            count += 1
            cur &= ~w
        self._lb[mask] = count
        return count

    def edit_lb(self, mask: int) -> int:
        # for pure cycle classes the edit distance is exactly the cycle rank
        return self.rank(mask) if self.forest_like else self.packing_lb(mask)


def _block_masks(ctx: _Ctx) -> list[int]:
    out = []
    for es in biconnected_component_edge_sets(ctx.g):
        m = 0
        for e in es:
            m |= 1 << ctx.eidx[e]
        out.append(m)
    return sorted(out)


def _edges_of_mask(ctx: _Ctx, mask: int) -> tuple[tuple[int, int], ...]:
    return tuple(ctx.edges[i] for i in bits(mask))


# ---------------------------------------------------------------------------
# edit distance
# ---------------------------------------------------------------------------


def _edit_feasible(ctx: _Ctx, mask: int, budget: int, fail: dict) -> bool:
    ctx.nodes += 1
    if ctx.member(mask):
        return True
    if budget <= 0 or budget < ctx.edit_lb(mask):
        return False
    key = (mask, budget)
    if key in fail:
        return False
    w = ctx.witness_mask(mask)
    assert w is not None
    for i in bits(w):
        if _edit_feasible(ctx, mask & ~(1 << i), budget - 1, fail):
            return True
    fail[key] = True
    return False


def _edit_value(ctx: _Ctx, mask: int, fail: dict) -> int:
    b = ctx.edit_lb(mask)
    while not _edit_feasible(ctx, mask, b, fail):
        b += 1
    return b


def edit_distance(
    c: GraphClass,
    g: Graph,
    limits: SolverLimits | None = None,
    value_only: bool = False,
) -> ParameterReport:
    limits = limits or SolverLimits.from_env()
    _guard(
        g.m <= limits.edit_max_edges,
        f"edit distance solver limited to {limits.edit_max_edges} edges, got {g.m}",
    )
    t0 = time.perf_counter()
    ctx = _Ctx(c, g)
    fail: dict = {}
    total = 0
    chosen: list[tuple[int, int]] = []
    for block in _block_masks(ctx):
        if ctx.member(block):
            continue
        v = _edit_value(ctx, block, fail)
        total += v
        if value_only:
            continue
        cur = block
        b = v
        while b:
            for i in sorted(bits(cur)):
                nxt = cur & ~(1 << i)
                if _edit_value(ctx, nxt, fail) == b - 1:
                    chosen.append(ctx.edges[i])
                    cur = nxt
                    b -= 1
                    break
            else:  # pragma: no cover - search is complete
                raise AssertionError("lex re-search failed")
    cert = None if value_only else tuple(sorted(chosen))
    return ParameterReport(
        "edit_distance",
        c.name,
        graph_to_graph6(g),
        total,
        cert,
        (time.perf_counter() - t0) * 1000.0,
        ctx.nodes,
    )


# ---------------------------------------------------------------------------
# edge brittleness
# ---------------------------------------------------------------------------


def _eta_search(
    ctx: _Ctx,
    order: list[int],
    cap: int,
    stop_at_first: bool,
) -> tuple[int, list[int] | None]:
    """Branch and bound over vertex-to-part assignments in `order`.

    Returns (best_cost, assignment_digits or None).  Costs >= cap are
    discarded; with stop_at_first the first full assignment with cost < cap
    is returned immediately (used for the lexicographic re-search, where cap
    is the known optimum plus one).
    """
    g = ctx.g
    n = len(order)
    best_cost = cap
    best_assign: list[int] | None = None
    parts: list[int] = []  # vertex masks
    digits: list[int] = []
    placed = 0
    ctx_nodes0 = ctx.nodes

    def dfs(i: int, cost: int):
        nonlocal best_cost, best_assign, placed
        ctx.nodes += 1
        if cost >= best_cost:
            return
        if i == n:
            best_cost = cost
            best_assign = digits.copy()
            return
        v = order[i]
        vbit = 1 << v
        adj = g.adj[v]
        options = []
        for pi, pmask in enumerate(parts):
            add = (adj & placed & ~pmask).bit_count()
            options.append((add, pi))
        if not stop_at_first:
            options.sort()
        for add, pi in options:
            if cost + add >= best_cost:
                continue
            newmask = parts[pi] | vbit
            if not ctx.vmember(newmask):
                continue
            parts[pi] = newmask
            placed |= vbit
            digits.append(pi)
            dfs(i + 1, cost + add)
            digits.pop()
            placed &= ~vbit
            parts[pi] = newmask & ~vbit
            if stop_at_first and best_assign is not None:
                return
        # open a new part (always feasible: K1 is in every class here)
        add = (adj & placed).bit_count()
        if cost + add < best_cost:
            parts.append(vbit)
            placed |= vbit
            digits.append(len(parts) - 1)
            dfs(i + 1, cost + add)
            digits.pop()
            placed &= ~vbit
            parts.pop()

    dfs(0, 0)
    return best_cost, best_assign


def edge_brittleness(
    c: GraphClass,
    g: Graph,
    limits: SolverLimits | None = None,
    value_only: bool = False,
) -> ParameterReport:
    limits = limits or SolverLimits.from_env()
    _guard(
        g.n <= limits.eta_max_vertices and g.m <= limits.eta_max_edges,
        f"edge brittleness solver limited to {limits.eta_max_vertices} vertices"
        f" / {limits.eta_max_edges} edges, got {g.n}/{g.m}",
    )
    t0 = time.perf_counter()
    ctx = _Ctx(c, g)
    if g.n == 0:
        return ParameterReport(
            "edge_brittleness", c.name, graph_to_graph6(g), 0, (), 0.0, 0
        )
    if ctx.member(ctx.full):
        cert = None if value_only else (tuple(g.vertices),)
        return ParameterReport(
            "edge_brittleness",
            c.name,
            graph_to_graph6(g),
            0,
            cert,
            (time.perf_counter() - t0) * 1000.0,
            0,
        )
    fast_order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    value, _ = _eta_search(ctx, fast_order, g.m + 1, stop_at_first=False)
    if value_only:
        cert = None
    else:
        _, digits = _eta_search(
            ctx, list(g.vertices), value + 1, stop_at_first=True
        )
        assert digits is not None
        nparts = max(digits) + 1
        groups: list[list[int]] = [[] for _ in range(nparts)]
        for v, d in zip(g.vertices, digits):
            groups[d].append(v)
        cert = tuple(tuple(p) for p in groups)
    return ParameterReport(
        "edge_brittleness",
        c.name,
        graph_to_graph6(g),
        value,
        cert,
        (time.perf_counter() - t0) * 1000.0,
        ctx.nodes,
    )


def edge_brittleness_at_most(
    c: GraphClass,
    g: Graph,
    budget: int,
    limits: SolverLimits | None = None,
) -> bool:
    """Decision form (no vertex/edge guards beyond sanity): is eta <= budget?

    Usable on graphs too large for the exact solver; the search only explores
    partial partitions with at most `budget` cross edges.
    """
    ctx = _Ctx(c, g)
    if g.n == 0:
        return True
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    cost, assign = _eta_search(ctx, order, budget + 1, stop_at_first=True)
    return assign is not None


# ---------------------------------------------------------------------------
# vertex brittleness
# ---------------------------------------------------------------------------


def _bridge_masks(ctx: _Ctx, ymask: int) -> tuple[list[int], int]:
    """Edge masks of the Y-bridges plus the mask of inside-Y edges."""
    g = ctx.g
    rest = g.full_mask() & ~ymask
    sub_adj = [g.adj[v] & rest for v in g.vertices]
    seen = 0
    bridges = []
    inside = 0
    for i, (u, v) in enumerate(ctx.edges):
        if ymask >> u & 1 and ymask >> v & 1:
            inside |= 1 << i
    for s in bits(rest):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= sub_adj[v]
            frontier = grow & ~comp
            comp |= grow
        seen |= comp
        emask = 0
        for v in bits(comp):
            emask |= ctx.incident[v]
        bridges.append(emask)
    return bridges, inside


def vertex_brittleness(
    c: GraphClass,
    g: Graph,
    limits: SolverLimits | None = None,
    value_only: bool = False,
) -> ParameterReport:
    limits = limits or SolverLimits.from_env()
    _guard(
        g.n <= limits.kappa_max_vertices and g.m <= limits.kappa_max_edges,
        f"vertex brittleness solver limited to {limits.kappa_max_vertices}"
        f" vertices / {limits.kappa_max_edges} edges, got {g.n}/{g.m}",
    )
    t0 = time.perf_counter()
    ctx = _Ctx(c, g)
    for k in range(g.n + 1):
        for ys in combinations(g.vertices, k):
            ctx.nodes += 1
            ymask = 0
            for y in ys:
                ymask |= 1 << y
            bridges, inside = _bridge_masks(ctx, ymask)
            if all(ctx.member(b) for b in bridges):
                if value_only:
                    cert = None
                else:
                    parts = [
                        _edges_of_mask(ctx, b) for b in bridges if b
                    ] + [(e,) for e in _edges_of_mask(ctx, inside)]
                    cert = {
                        "boundary": ys,
                        "parts": tuple(sorted(parts)),
                    }
                return ParameterReport(
                    "vertex_brittleness",
                    c.name,
                    graph_to_graph6(g),
                    k,
                    cert,
                    (time.perf_counter() - t0) * 1000.0,
                    ctx.nodes,
                )
    raise AssertionError("unreachable: Y = V(G) is always feasible")


# ---------------------------------------------------------------------------
# capacity
# ---------------------------------------------------------------------------


def _nu_value(ctx: _Ctx, mask: int, memo: dict, block: int) -> int:
    hit = memo.get(mask)
    if hit is not None:
        return hit
    ctx.nodes += 1
    w = ctx.witness_mask(mask)
    if w is None:
        memo[mask] = 0
        return 0
    ub = mask.bit_count() // ctx.min_witness_edges
    lb = ctx.packing_lb(mask)
    if lb >= ub:
        memo[mask] = lb
        return lb
    ei = (w & -w).bit_length() - 1
    # either edge ei is used by some (minimal) member of the packing ...
    best = lb
    for hm in ctx.witnesses_through(mask, ei, block):
        cand = 1 + _nu_value(ctx, mask & ~hm, memo, block)
        if cand > best:
            best = cand
            if best >= ub:
                break
    # ... or no member uses it
    if best < ub:
        best = max(best, _nu_value(ctx, mask & ~(1 << ei), memo, block))
    memo[mask] = best
    return best


def _nu_all_witnesses(ctx: _Ctx, mask: int, block: int) -> list[int]:
    seen: set[int] = set()
    for i in bits(mask):
        seen.update(ctx.witnesses_through(mask, i, block))
    return sorted(seen, key=lambda wm: tuple(sorted(bits(wm))))


def capacity(
    c: GraphClass,
    g: Graph,
    limits: SolverLimits | None = None,
    value_only: bool = False,
) -> ParameterReport:
    limits = limits or SolverLimits.from_env()
    _guard(
        g.m <= limits.capacity_max_edges,
        f"capacity solver limited to {limits.capacity_max_edges} edges, got {g.m}",
    )
    t0 = time.perf_counter()
    ctx = _Ctx(c, g)
    memo: dict = {}
    total = 0
    packing: list[tuple[tuple[int, int], ...]] = []
    for block in _block_masks(ctx):
        v = _nu_value(ctx, block, memo, block)
        total += v
        if value_only or v == 0:
            continue
        cur = block
        need = v
        while need:
            for wm in _nu_all_witnesses(ctx, cur, block):
                if _nu_value(ctx, cur & ~wm, memo, block) == need - 1:
                    packing.append(_edges_of_mask(ctx, wm))
                    cur &= ~wm
                    need -= 1
                    break
            else:  # pragma: no cover - search is complete
                raise AssertionError("lex re-search failed")
    cert = None if value_only else tuple(sorted(packing))
    return ParameterReport(
        "capacity",
        c.name,
        graph_to_graph6(g),
        total,
        cert,
        (time.perf_counter() - t0) * 1000.0,
        ctx.nodes,
    )


# ---------------------------------------------------------------------------
# bundle
# ---------------------------------------------------------------------------

PARAMETER_FUNCS = {
    "edit_distance": edit_distance,
    "edge_brittleness": edge_brittleness,
    "vertex_brittleness": vertex_brittleness,
    "capacity": capacity,
}

PARAMETER_ALIASES = {
    "e": "edit_distance",
    "edit": "edit_distance",
    "edit_distance": "edit_distance",
    "eta": "edge_brittleness",
    "edge_brittleness": "edge_brittleness",
    "kappa": "vertex_brittleness",
    "vertex_brittleness": "vertex_brittleness",
    "nu": "capacity",
    "capacity": "capacity",
}


def all_parameters(
    c: GraphClass,
    g: Graph,
    limits: SolverLimits | None = None,
    value_only: bool = False,
) -> dict[str, ParameterReport]:
    """All four reports; cross-checks the basic inequalities before returning."""
    reports = {
        name: fn(c, g, limits=limits, value_only=value_only)
        for name, fn in PARAMETER_FUNCS.items()
    }
    e = reports["edit_distance"].value
    eta = reports["edge_brittleness"].value
    kappa = reports["vertex_brittleness"].value
    nu = reports["capacity"].value
    if not (e <= eta and kappa <= 2 * e and nu <= e):
        raise InternalCheckError(
            f"basic inequalities violated: e={e} eta={eta} kappa={kappa} nu={nu}"
            f" on {graph_to_graph6(g)} vs {c.name}"
        )
    return reports


def certificate_is_valid(
    c: GraphClass, g: Graph, report: ParameterReport
) -> bool:
    """Replay a certificate against its graph and class."""
    kind = report.parameter
    if kind == "edit_distance":
        es = report.certificate
        if len(set(es)) != report.value:
            return False
        left = [e for e in g.edges if e not in set(es)]
        sub = Graph(g.n, left)
        return _classes.contains(c, sub)
    if kind == "edge_brittleness":
        parts = report.certificate
        seen = sorted(v for p in parts for v in p)
        if seen != list(g.vertices):
            return False
        owner = {v: i for i, p in enumerate(parts) for v in p}
        cross = sum(1 for u, v in g.edges if owner[u] != owner[v])
        for p in parts:
            if not _classes.contains(c, induced_subgraph(g, p)[0]):
                return False
        return cross == report.value
    if kind == "vertex_brittleness":
        cert = report.certificate
        parts = cert["parts"]
        all_edges = sorted(e for p in parts for e in p)
        if all_edges != list(g.edges):
            return False
        boundary = set()
        touch: dict[int, set[int]] = {}
        for i, p in enumerate(parts):
            sub, _ = edge_induced_subgraph(g, p)
            if not _classes.contains(c, sub):
                return False
            for u, v in p:
                touch.setdefault(u, set()).add(i)
                touch.setdefault(v, set()).add(i)
        boundary = {v for v, ps in touch.items() if len(ps) >= 2}
        return len(boundary) == report.value and boundary <= set(
            cert["boundary"]
        )
    if kind == "capacity":
        witnesses = report.certificate
        if len(witnesses) != report.value:
            return False
        used: set = set()
        for w in witnesses:
            if used & set(w):
                return False
            used |= set(w)
            sub, _ = edge_induced_subgraph(g, w)
            if _classes.contains(c, sub):
                return False
        return True
    raise ValueError(f"unknown parameter {kind!r}")
