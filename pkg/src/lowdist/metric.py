"""Shortest-path metrics, balls, and the local-density lower bound.

All distances are exact integers; local density is an exact Fraction.
"""

from __future__ import annotations

import heapq
from collections import deque
from fractions import Fraction

import numpy as np

from .errors import DisconnectedGraphError
from .graphs import WeightedGraph


class Metric:
    """A dense table of exact integer pairwise distances."""

    __slots__ = ("size", "_dist", "_rows")

    def __init__(self, dist):
        arr = np.asarray(dist, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("distance table must be square")
        n = arr.shape[0]
        if n and (np.diagonal(arr) != 0).any():
            raise ValueError("diagonal must be zero")
        if n and (arr != arr.T).any():
            raise ValueError("distance table must be symmetric")
        if n and (arr < 0).any():
            raise ValueError("distances must be nonnegative")
        self.size = n
        self._dist = arr
        self._rows = None

    def d(self, u, v) -> int:
        return int(self._dist[u, v])

    def row(self, u):
        """Row of distances from u as a plain list of ints (cached)."""
        if self._rows is None:
            self._rows = [list(map(int, r)) for r in self._dist]
        return self._rows[u]

    def rows(self):
        if self._rows is None:
            self._rows = [list(map(int, r)) for r in self._dist]
        return self._rows

    def as_array(self):
        return self._dist

    def check_triangle_inequality(self) -> bool:
        """Exhaustive O(n^3) triangle-inequality check (test support)."""
        a = self._dist
        for k in range(self.size):
            via = a[:, k, None] + a[None, k, :]
            if (a > via).any():
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Metric):
            return NotImplemented
        return self.size == other.size and (self._dist == other._dist).all()

    def __repr__(self):
        return f"Metric(size={self.size})"


def _bfs_row(g: WeightedGraph, src: int):
    dist = [-1] * g.n
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        du = dist[u]
        for v, _ in g.neighbors(u):
            if dist[v] < 0:
                dist[v] = du + 1
                q.append(v)
    return dist

def _dijkstra_row(g: WeightedGraph, src: int):
    dist = [-1] * g.n
    dist[src] = 0
    heap = [(0, src)]
    while heap:
        du, u = heapq.heappop(heap)
        if du > dist[u]:
            continue
        for v, w in g.neighbors(u):
            nd = du + w
            if dist[v] < 0 or nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def shortest_path_metric(g: WeightedGraph) -> Metric:
    """All-pairs shortest-path distances of a connected weighted graph."""
    unit = g.is_unit_weight()
    table = []
    for src in range(g.n):
        row = _bfs_row(g, src) if unit else _dijkstra_row(g, src)
        if any(d < 0 for d in row):
            far = next(v for v, d in enumerate(row) if d < 0)
            raise DisconnectedGraphError(f"vertices {src} and {far} are not connected")
        table.append(row)
    if not table:
        return Metric(np.zeros((0, 0), dtype=np.int64))
    return Metric(table)


def distances_within(g: WeightedGraph, src: int, cap: int) -> dict:
    """Exact distances from src to every vertex at distance <= cap.

    Vertices beyond the cap are absent from the result.
    """
    if g.is_unit_weight():
        out = {src: 0}
        q = deque([src])
        while q:
            u = q.popleft()
            du = out[u]
            if du == cap:
                continue
            for v, _ in g.neighbors(u):
                if v not in out:
                    out[v] = du + 1
                    q.append(v)
        return out
    out = {}
    heap = [(0, src)]
    while heap:
        du, u = heapq.heappop(heap)
        if u in out:
            continue
        out[u] = du
        for v, w in g.neighbors(u):
            nd = du + w
            if nd <= cap and v not in out:
                heapq.heappush(heap, (nd, v))
    return out


def ball(m: Metric, v: int, r: int) -> set:
    """The set of vertices at distance <= r from v (always contains v)."""
    if not (0 <= v < m.size):
        raise ValueError(f"vertex {v} out of range")
    if r < 0:
        raise ValueError("radius must be nonnegative")
    row = m.row(v)
    return {u for u, d in enumerate(row) if d <= r}


def local_density(m: Metric) -> Fraction:
    """max over vertices v and radii r >= 1 of (|B(v,r)| - 1) / 2r.

    Zero for a metric on a single point.  Since |B(v,r)| only changes at
    the distinct distance values of row v, the maximum over integer radii
    is attained at those values.
    """
    if m.size <= 1:
        return Fraction(0)
    best = Fraction(0)
    for v in range(m.size):
        row = sorted(m.row(v))
        # row[0] == 0 is v itself; ball size at radius row[k] is k+1.
        for k in range(1, m.size):
            r = row[k]
            if k + 1 < m.size and row[k + 1] == r:
                continue  # not the full ball at this radius yet
            cand = Fraction(k, 2 * r)
            if cand > best:
                best = cand
    return best
