"""graph6 and plain edge-list serialization.

graph6 follows the standard ASCII format (optional ``>>graph6<<`` header,
6-bit chunks offset by 63, column-major upper triangle).  The edge-list
format is ``"n m"`` on the first line followed by one ``"u v"`` pair per
edge line.
"""

from __future__ import annotations

from .graph import Graph, MAX_VERTICES

GRAPH6_HEADER = ">>graph6<<"


def graph_to_graph6(g: Graph, header: bool = False) -> str:
    n = g.n
    if n <= 62:
        prefix = chr(n + 63)
    else:
        # 63..258047 use '~' plus three 6-bit digits; our n caps at 64
        prefix = "~" + "".join(
            chr(((n >> s) & 0x3F) + 63) for s in (12, 6, 0)
        )
    word = 0
    nbits = 0
    body = []
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            word = word << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                body.append(chr(word + 63))
                word = nbits = 0
    if nbits:
        body.append(chr((word << (6 - nbits)) + 63))
    out = prefix + "".join(body)
    return GRAPH6_HEADER + out if header else out


def graph_from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(x < 0 or x > 63 for x in data):
        raise ValueError(f"invalid graph6 characters in {s!r}")
    if data[0] == 63:  # '~'
        if len(data) < 4:
            raise ValueError("truncated graph6 size")
        if data[1] == 63:
            raise ValueError("graph6 sizes beyond 2^18 not supported")
        n = data[1] << 12 | data[2] << 6 | data[3]
        data = data[4:]
    else:
        n = data[0]
        data = data[1:]
    if n > MAX_VERTICES:
        raise ValueError(f"graph6 graph has {n} vertices; limit is {MAX_VERTICES}")
    need = n * (n - 1) // 2
    if len(data) != (need + 5) // 6:
        raise ValueError(f"graph6 body length mismatch for n={n}")
    stream = 0
    for x in data:
        stream = stream << 6 | x
    total_bits = 6 * len(data)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if stream >> (total_bits - 1 - idx) & 1:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def read_graph6_lines(text: str) -> list[Graph]:
    return [
        graph_from_graph6(line)
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]


def graph_to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def graph_from_edge_list(text: str) -> Graph:
    rows = [r for r in (line.strip() for line in text.splitlines()) if r]
    if not rows:
        raise ValueError("empty edge list")
    try:
        n, m = map(int, rows[0].split())
    except ValueError as exc:
        raise ValueError(f"bad edge-list header {rows[0]!r}") from exc
    if len(rows) - 1 != m:
        raise ValueError(f"edge list declares {m} edges, has {len(rows) - 1}")
    edges = []
    for r in rows[1:]:
        try:
            u, v = map(int, r.split())
        except ValueError as exc:
            raise ValueError(f"bad edge line {r!r}") from exc
        edges.append((u, v))
    return Graph(n, edges)
