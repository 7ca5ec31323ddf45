"""Simple undirected graphs with positive integer edge weights, plus text I/O.

The shared text format: the first data line is "n m"; each of the following
m data lines is "u v w" (or "u v", meaning weight 1) with 0-based vertex ids.
Lines starting with '#' and blank lines are ignored.
"""

from __future__ import annotations

from .errors import GraphFormatError


class WeightedGraph:
    """An immutable simple undirected graph with integer weights >= 1."""

    __slots__ = ("n", "edges", "_adj", "_unit")

    def __init__(self, n, edges):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = []
        seen = set()
        for u, v, w in edges:
            if not (isinstance(u, int) and isinstance(v, int) and isinstance(w, int)):
                raise ValueError("vertex ids and weights must be integers")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if w < 1:
                raise ValueError(f"edge ({u},{v}) has weight {w} < 1")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise ValueError(f"parallel edge ({u},{v})")
            seen.add((u, v))
            norm.append((u, v, w))
        # edge order is preserved: it is part of a graph's deterministic identity
        self.n = n
        self.edges = tuple(norm)
        adj = [[] for _ in range(n)]
        for u, v, w in norm:
            adj[u].append((v, w))
            adj[v].append((u, w))
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._unit = all(w == 1 for _, _, w in norm)

    @property
    def m(self):
        return len(self.edges)

    def neighbors(self, v):
        """Neighbors of v as a sorted tuple of (vertex, weight) pairs."""
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def max_degree(self):
        return max((len(a) for a in self._adj), default=0)

    def max_weight(self):
        return max((w for _, _, w in self.edges), default=1)

    def is_unit_weight(self):
        return self._unit

    def has_edge(self, u, v):
        if u > v:
            u, v = v, u
        return any(x == v for x, _ in self._adj[u] if x >= v) if u < self.n else False

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"WeightedGraph(n={self.n}, m={self.m})"


def components_without(g: WeightedGraph, blocked) -> list:
    """Connected components of g minus a blocked vertex set, as vertex sets."""
    comps = []
    seen = set(blocked)
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        stack = [s]
        while stack:
            u = stack.pop()
            for v, _ in g.neighbors(u):
                if v not in seen:
                    seen.add(v)
                    comp.add(v)
                    stack.append(v)
        comps.append(comp)
    return comps


def is_connected(g: WeightedGraph) -> bool:
    """True iff g has a single connected component (vacuously for n <= 1)."""
    if g.n <= 1:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v, _ in g.neighbors(u):
            if not seen[v]:
                seen[v] = 1
                count += 1
                stack.append(v)
    return count == g.n


def parse_graph_text(text: str) -> WeightedGraph:
    """Parse the shared edge-list text format."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise GraphFormatError("empty graph file")
    lineno, header = rows[0]
    if len(header) != 2:
        raise GraphFormatError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: header must be two integers") from None
    if m != len(rows) - 1:
        raise GraphFormatError(f"header declares {m} edges, found {len(rows) - 1}")
    edges = []
    for lineno, tok in rows[1:]:
        if len(tok) == 2:
            tok = tok + ["1"]
        if len(tok) != 3:
            raise GraphFormatError(f"line {lineno}: expected 'u v' or 'u v w'")
        try:
            u, v, w = int(tok[0]), int(tok[1]), int(tok[2])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer token") from None
        edges.append((u, v, w))
    try:
        return WeightedGraph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def graph_to_text(g: WeightedGraph) -> str:
    """Serialize a graph in the shared text format (deterministic order)."""
    lines = [f"{g.n} {g.m}"]
    for u, v, w in g.edges:
        lines.append(f"{u} {v} {w}")
    return "\n".join(lines) + "\n"
