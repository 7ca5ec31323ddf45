"""Generator for weighted line-embedding instances that encode 3-coloring.

Given a simple unit-weight graph and a target distortion a/b >= 2, builds
the rigid weighted graph whose line embeddings at distortion a/b correspond
to proper 3-colorings: two long cliques force a global left-to-right layout,
separator vertices pin a chain of edge gadgets between them, and identity
edges between gadget copies force per-vertex color consistency.

Derived integers: g = 5a-1, r = 10b, q = m(2n+1), L = 10qb, t = abL+1.
All arithmetic is exact; the rational distortion a/b is never evaluated in
floating point (the clique weight ceil(|i-j| / (a/b)) is computed as
ceil(b|i-j| / a) in integers).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from .errors import (
    DistortionBelowTwoError,
    NotAProperColoringError,
    NonUnitWeightsError,
)
from .graphs import WeightedGraph
from .lineembed import LineEmbedding
from .metric import Metric


@dataclass(frozen=True)
class HardnessParams:
    """Construction parameters for one generated instance."""

    a: int
    b: int
    n: int
    m: int

    @property
    def g(self):
        return 5 * self.a - 1

    @property
    def r(self):
        return 10 * self.b

    @property
    def q(self):
        return self.m * (2 * self.n + 1)

    @property
    def L(self):
        return 10 * self.q * self.b

    @property
    def t(self):
        return self.a * self.b * self.L + 1

    @property
    def distortion(self):
        return Fraction(self.a, self.b)

    def vertex_count(self):
        return 2 * self.t + (self.q - 1) + 3 * self.q


@dataclass(frozen=True)
class EdgeVerdict:
    """Outcome of the per-edge shortest-path verification."""

    ok: bool
    u: int = -1
    v: int = -1
    weight: int = 0
    dist: int = 0

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "OK"
        return f"EDGE {self.u} {self.v} w={self.weight} D={self.dist}"


class HardnessInstance:
    """The generated weighted graph plus per-vertex role annotations."""

    def __init__(self, base: WeightedGraph, params: HardnessParams,
                 graph: WeightedGraph, roles):
        self.base = base
        self.params = params
        self.graph = graph
        self.roles = tuple(roles)

    # vertex id layout: clique one, clique two, separators, gadget triples
    def c1_id(self, i):
        """Clique-one vertex c_i, i in 1..t."""
        return i - 1

    def c2_id(self, i):
        return self.params.t + i - 1

    def sep_id(self, j):
        """Separator s_j, j in 1..q-1."""
        return 2 * self.params.t + j - 1

    def gadget_ids(self, j):
        """(u-vertex, v-vertex, edge-vertex) ids of gadget j, j in 1..q."""
        base = 2 * self.params.t + (self.params.q - 1) + 3 * (j - 1)
        return base, base + 1, base + 2

    def gadget_edge_index(self, j):
        """1-based index of the original edge encoded by gadget j."""
        return (j - 1) % self.params.m + 1


def _ceil_div(x, y):
    return -(-x // y)


def generate(base: WeightedGraph, a: int, b: int) -> HardnessInstance:
    """Build the weighted instance for a unit-weight input graph."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive integers")
    if Fraction(a, b) < 2:
        raise DistortionBelowTwoError(
            f"target distortion {a}/{b} is below 2")
    if base.n < 1 or base.m < 1:
        raise ValueError("input graph needs at least one vertex and one edge")
    if not base.is_unit_weight():
        raise NonUnitWeightsError("input graph must be unit-weight")
    p = HardnessParams(a, b, base.n, base.m)
    t, q, g, r, big_l = p.t, p.q, p.g, p.r, p.L
    nv = p.vertex_count()

    def c1(i):
        return i - 1

    def c2(i):
        return t + i - 1

    def sep(j):
        return 2 * t + j - 1

    def gadget(j):
        base_id = 2 * t + (q - 1) + 3 * (j - 1)
        return base_id, base_id + 1, base_id + 2

    edges = []
    # the two cliques, weights ceil(|i-j| * b / a)
    for i in range(1, t + 1):
        for j in range(i + 1, t + 1):
            w = _ceil_div((j - i) * b, a)
            edges.append((c1(i), c1(j), w))
    for i in range(1, t + 1):
        for j in range(i + 1, t + 1):
            w = _ceil_div((j - i) * b, a)
            edges.append((c2(i), c2(j), w))
    # gadget triangles
    for j in range(1, q + 1):
        x, y, z = gadget(j)
        edges.append((x, y, 1))
        edges.append((x, z, 1))
        edges.append((y, z, 1))
    # separator attachments; the missing outer separators are the clique tips
    for j in range(1, q + 1):
        left = sep(j - 1) if j >= 2 else c1(t)
        right = sep(j) if j <= q - 1 else c2(1)
        for x in gadget(j):
            edges.append((left, x, g))
            edges.append((x, right, g))
    # identity edges between gadget copies of the same vertex or edge
    m = base.m
    copies = 2 * base.n + 1
    vertex_slots = {u: [] for u in range(base.n)}
    edge_slots = {i: [] for i in range(1, m + 1)}
    for j in range(1, q + 1):
        i = (j - 1) % m + 1
        eu, ev, _ = base.edges[i - 1]
        xu, xv, xe = gadget(j)
        vertex_slots[eu].append((j, xu))
        vertex_slots[ev].append((j, xv))
        edge_slots[i].append((j, xe))
    for slots in list(vertex_slots.values()) + list(edge_slots.values()):
        for ai in range(len(slots)):
            j1, x1 = slots[ai]
            for bi in range(ai + 1, len(slots)):
                j2, x2 = slots[bi]
                edges.append((x1, x2, r * abs(j2 - j1)))
    # the bridge between the cliques
    edges.append((c1(t), c2(1), big_l))

    graph = WeightedGraph(nv, edges)
    roles = [""] * nv
    for i in range(1, t + 1):
        roles[c1(i)] = f"clique1 {i}"
        roles[c2(i)] = f"clique2 {i}"
    for j in range(1, q):
        roles[sep(j)] = f"separator {j}"
    for j in range(1, q + 1):
        i = (j - 1) % m + 1
        eu, ev, _ = base.edges[i - 1]
        xu, xv, xe = gadget(j)
        roles[xu] = f"gadget {j} endpoint-u {eu}"
        roles[xv] = f"gadget {j} endpoint-v {ev}"
        roles[xe] = f"gadget {j} edge {i}"
    return HardnessInstance(base, p, graph, roles)


def roles_to_text(inst: HardnessInstance) -> str:
    lines = [f"{v} {role}" for v, role in enumerate(inst.roles)]
    return "\n".join(lines) + "\n"


def validate_coloring(base: WeightedGraph, coloring) -> dict:
    """Check a proper 3-coloring of the input graph; returns it as a dict."""
    psi = dict(enumerate(coloring)) if not isinstance(coloring, dict) else dict(coloring)
    if set(psi) != set(range(base.n)):
        raise NotAProperColoringError("coloring must assign every vertex")
    if any(c not in (1, 2, 3) for c in psi.values()):
        raise NotAProperColoringError("colors must be 1, 2 or 3")
    for u, v, _ in base.edges:
        if psi[u] == psi[v]:
            raise NotAProperColoringError(
                f"edge ({u},{v}) has both endpoints colored {psi[u]}")
    return psi


def witness_embedding(inst: HardnessInstance, coloring) -> LineEmbedding:
    """The pushing layout induced by a proper 3-coloring of the input.

    Order: clique one in index order, then gadgets separated by separator
    vertices with each gadget's three vertices sorted by color (edges get
    the color their endpoints leave free), then clique two.  Consecutive
    vertices in this order are adjacent, so positions are prefix sums of
    the corresponding edge weights.
    """
    p = inst.params
    base = inst.base
    psi = validate_coloring(base, coloring)
    order = []  # (vertex id, weight of the edge from its predecessor)
    for i in range(1, p.t + 1):
        order.append((inst.c1_id(i), 0 if i == 1 else 1))
    for j in range(1, p.q + 1):
        i = inst.gadget_edge_index(j)
        eu, ev, _ = base.edges[i - 1]
        xu, xv, xe = inst.gadget_ids(j)
        ecolor = ({1, 2, 3} - {psi[eu], psi[ev]}).pop()
        triple = sorted(
            [(psi[eu], xu), (psi[ev], xv), (ecolor, xe)])
        order.append((triple[0][1], p.g))
        order.append((triple[1][1], 1))
        order.append((triple[2][1], 1))
        nxt = inst.sep_id(j) if j <= p.q - 1 else inst.c2_id(1)
        order.append((nxt, p.g))
    for i in range(2, p.t + 1):
        order.append((inst.c2_id(i), 1))
    positions = {}
    at = 0
    for v, w in order:
        at += w
        positions[v] = at
    if len(positions) != inst.graph.n:
        raise RuntimeError("internal error: witness order misses vertices")
    return LineEmbedding(positions)


def sparse_all_pairs(graph: WeightedGraph) -> np.ndarray:
    """Exact all-pairs distances via sparse Dijkstra (int64 result).

    Distances here are far below 2**53, so the float computation is exact;
    integrality is asserted before converting.
    """
    n = graph.n
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if graph.m == 0:
        raise ValueError("graph with isolated vertices has no finite metric")
    rows = np.fromiter((e[0] for e in graph.edges), dtype=np.int64, count=graph.m)
    cols = np.fromiter((e[1] for e in graph.edges), dtype=np.int64, count=graph.m)
    data = np.fromiter((e[2] for e in graph.edges), dtype=np.float64, count=graph.m)
    mat = csr_matrix((data, (rows, cols)), shape=(n, n))
    dm = dijkstra(mat, directed=False)
    if not np.isfinite(dm).all():
        raise ValueError("graph is disconnected")
    out = dm.astype(np.int64)
    if (out != dm).any():
        raise AssertionError("non-integer distance from integer weights")
    return out


def instance_metric(inst: HardnessInstance) -> Metric:
    return Metric(sparse_all_pairs(inst.graph))


def verify_metric_edges(inst: HardnessInstance) -> EdgeVerdict:
    """Check that every edge weight equals the shortest-path distance."""
    dm = sparse_all_pairs(inst.graph)
    for u, v, w in inst.graph.edges:
        actual = int(dm[u, v])
        if actual != w:
            return EdgeVerdict(False, u, v, w, actual)
    return EdgeVerdict(True)
