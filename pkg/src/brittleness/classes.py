"""Monotone graph classes given by finite lists of 2-connected forbidden
topological minors, with membership testing.

Membership dispatches to exact fast recognizers for the standard patterns
(K3 -> acyclicity, diamond/K2,3 -> disjoint-path counting, K4 ->
series-parallel reduction) and falls back to the embedding engine for
anything else.  ``contains(c, g, engine_only=True)`` forces the engine for
cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import embedding
from .embedding import ConfigurationError
from .graph import Graph, are_isomorphic, is_2_connected
from .io import read_graph6_lines

K1 = Graph(1)
K2 = Graph(2, [(0, 1)])
K3 = Graph(3, [(0, 1), (0, 2), (1, 2)])
K4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
DIAMOND = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
K23 = Graph(5, [(w, u) for w in (0, 1) for u in (2, 3, 4)])

_PATTERN_KINDS = (
    ("k3", K3),
    ("diamond", DIAMOND),
    ("k23", K23),
    ("k4", K4),
)


def _kind_of(h: Graph) -> str:
    for kind, ref in _PATTERN_KINDS:
        if are_isomorphic(h, ref):
            return kind
    return "generic"


@dataclass(frozen=True)
class GraphClass:
    name: str
    forbidden: tuple[Graph, ...]
    _kinds: tuple[str, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_kinds", tuple(_kind_of(h) for h in self.forbidden)
        )

    def __str__(self) -> str:
        return self.name


FORESTS = GraphClass("forests", (K3,))
DIAMOND_FREE = GraphClass("diamond-free", (DIAMOND,))
OUTERPLANAR = GraphClass("outerplanar", (K4, K23))

BUILTIN_CLASSES = {
    c.name: c for c in (FORESTS, DIAMOND_FREE, OUTERPLANAR)
}


def validate(c: GraphClass) -> list[str]:
    """Violation messages for forbidden members that are not 2-connected."""
    out = []
    for i, h in enumerate(c.forbidden):
        if not is_2_connected(h):
            out.append(
                f"forbidden graph #{i} (n={h.n}, m={h.m}) is not 2-connected"
            )
    return out


def require_valid(c: GraphClass) -> None:
    problems = validate(c)
    if problems:
        raise ConfigurationError("; ".join(problems))


def _pattern_in(kind: str, h: Graph, g: Graph) -> bool:
    if kind == "k3":
        return embedding.has_cycle(g)
    if kind == "diamond":
        return embedding.has_theta_pair(g, require_length_2=False)
    if kind == "k23":
        return embedding.has_theta_pair(g, require_length_2=True)
    if kind == "k4":
        return embedding.has_k4_subdivision(g)
    return embedding.find_embedding(h, g) is not None


def contains(c: GraphClass, g: Graph, engine_only: bool = False) -> bool:
    """True iff g is free of every forbidden pattern of c."""
    if engine_only:
        return embedding.is_free(c.forbidden, g)
    return not any(
        _pattern_in(kind, h, g) for kind, h in zip(c._kinds, c.forbidden)
    )


def class_from_graph6_file(path: str, name: str | None = None) -> GraphClass:
    """A custom class from a file with one graph6 line per forbidden graph."""
    with open(path) as fh:
        graphs = read_graph6_lines(fh.read())
    if not graphs:
        raise ConfigurationError(f"class file {path!r} lists no graphs")
    c = GraphClass(name or f"file:{path}", tuple(graphs))
    require_valid(c)
    return c
