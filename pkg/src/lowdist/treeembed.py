"""Embedding unweighted graph metrics into bounded-degree rooted trees.

The decision procedure works bottom-up over the host tree with states made
of a ball-restricted partial embedding plus, per tree direction, a set of
boundary summary functions ("types") recording how far mapped vertices sit
from the anchor relative to their graph distances.  Types are what carries
non-contraction information across tree branches, where it is not a local
property.

State search strategy: rather than tabulating every subset of the type
space (which is doubly exponential and hopeless even for toy inputs), the
search builds exactly the typelists a real embedding would induce: anchor
types of the mapped boundary plus whatever propagates up from chosen child
states, with parent-side requirements injected on the way back down.  Any
embedding induces such an assignment, and every accepted witness is
re-verified against the full feasibility/succession predicates before an
embedding is returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import (
    DisconnectedGraphError,
    NonUnitWeightsError,
    NotATreeError,
    ResourceBudgetExceededError,
)
from .graphs import WeightedGraph, components_without, is_connected
from .lineembed import Verdict
from .metric import Metric, shortest_path_metric

#: Sentinel for the clamped "too far to matter" type value.  Any integer
#: above every possible clamp threshold behaves correctly under the shift
#: arithmetic, so a large plain int keeps everything exact.
INF = 10 ** 9

DEFAULT_BUDGET = 2_000_000


def beta(k: int, d: int) -> int:
    """Clamp a type value: identity up to 3d+2, INF beyond."""
    return k if k <= 3 * d + 2 else INF


class RootedTree:
    """A rooted unit-weight tree host with precomputed structure."""

    def __init__(self, graph: WeightedGraph, root: int = 0):
        if graph.n == 0:
            raise NotATreeError("host tree must have at least one vertex")
        if not graph.is_unit_weight():
            raise NotATreeError("host tree must have unit edge weights")
        if not is_connected(graph):
            raise NotATreeError("host tree is disconnected")
        if graph.m != graph.n - 1:
            raise NotATreeError("host graph contains a cycle")
        if not 0 <= root < graph.n:
            raise ValueError(f"root {root} out of range")
        self.graph = graph
        self.n = graph.n
        self.root = root
        self.neighbors = tuple(
            tuple(v for v, _ in graph.neighbors(u)) for u in range(graph.n))
        self.max_degree = graph.max_degree()
        parent = [-1] * graph.n
        children = [[] for _ in range(graph.n)]
        order = []
        q = deque([root])
        seen = {root}
        while q:
            u = q.popleft()
            order.append(u)
            for v in self.neighbors[u]:
                if v not in seen:
                    seen.add(v)
                    parent[v] = u
                    children[u].append(v)
                    q.append(v)
        self.parent = tuple(parent)
        self.children = tuple(tuple(sorted(c)) for c in children)
        self.postorder = tuple(reversed(order))
        self.metric = shortest_path_metric(graph)
        self._side = {}
        for u in range(graph.n):
            for v in self.neighbors[u]:
                comp = set()
                stack = [v]
                comp.add(v)
                while stack:
                    x = stack.pop()
                    for y in self.neighbors[x]:
                        if y != u and y not in comp:
                            comp.add(y)
                            stack.append(y)
                self._side[(u, v)] = frozenset(comp)

    def side(self, u, v):
        """Vertices of the component of T minus edge uv that contains v."""
        return self._side[(u, v)]

    def ball(self, u, r):
        row = self.metric.row(u)
        return tuple(x for x in range(self.n) if row[x] <= r)

    def __repr__(self):
        return f"RootedTree(n={self.n}, root={self.root})"


@dataclass(frozen=True)
class UPartialEmbedding:
    """An injective partial map of graph vertices into a tree ball."""

    tree: RootedTree
    anchor: int
    mapping: tuple  # sorted ((graph vertex, tree vertex), ...)

    @classmethod
    def from_dict(cls, tree, anchor, mapping):
        return cls(tree, anchor, tuple(sorted(mapping.items())))

    @property
    def domain(self):
        return frozenset(x for x, _ in self.mapping)

    def as_dict(self):
        return dict(self.mapping)

    def image_of(self, x):
        for a, b in self.mapping:
            if a == x:
                return b
        raise KeyError(x)

    def direction_set(self, v):
        """S[v, f_u]: mapped vertices whose image lies on v's side of u."""
        side = self.tree.side(self.anchor, v)
        return frozenset(x for x, img in self.mapping if img in side)

    def shell(self, x):
        return self.tree.metric.d(self.image_of(x), self.anchor)

    def shell_set(self, lo, hi):
        row = self.tree.metric.row(self.anchor)
        return frozenset(x for x, img in self.mapping if lo <= row[img] <= hi)


@dataclass(frozen=True)
class TypeFn:
    """A boundary summary: a function from a boundary set to clamped values."""

    items: tuple  # sorted ((vertex, value), ...)

    @classmethod
    def from_dict(cls, values):
        return cls(tuple(sorted(values.items())))

    @property
    def domain(self):
        return frozenset(x for x, _ in self.items)

    def as_dict(self):
        return dict(self.items)

    def value(self, x):
        for a, b in self.items:
            if a == x:
                return b
        raise KeyError(x)


@dataclass(frozen=True)
class UState:
    """A feasible anchored partial embedding with one typelist per direction."""

    embedding: UPartialEmbedding
    typelists: tuple  # sorted ((tree neighbor, frozenset[TypeFn]), ...)

    def typelist(self, v):
        for a, b in self.typelists:
            if a == v:
                return b
        raise KeyError(v)


def components_toward(g: WeightedGraph, f_u: UPartialEmbedding, v: int):
    """M[v, f_u]: components of G minus the domain attached to S[v, f_u]."""
    boundary = f_u.direction_set(v)
    out = set()
    for comp in components_without(g, f_u.domain):
        hit = False
        for x in comp:
            if any(y in boundary for y, _ in g.neighbors(x)):
                hit = True
                break
        if hit:
            out |= comp
    return frozenset(out)


def is_feasible_upartial(g: WeightedGraph, m_g: Metric, tree: RootedTree,
                         f_u: UPartialEmbedding, d: int) -> bool:
    """Ball containment, pairwise distortion, branch disjointness, center closure."""
    u = f_u.anchor
    row_u = tree.metric.row(u)
    items = f_u.mapping
    # (1) images inside the radius-(d+1) ball, non-contracting, expansion <= d
    for i, (x, img_x) in enumerate(items):
        if row_u[img_x] > d + 1:
            return False
        row_img = tree.metric.row(img_x)
        row_gx = m_g.row(x)
        for y, img_y in items[i + 1:]:
            dt = row_img[img_y]
            dg = row_gx[y]
            if dt < dg or dt > d * dg:
                return False
    # (3) the exact-center preimage keeps its whole neighborhood mapped
    dom = f_u.domain
    for x, img_x in items:
        if img_x == u:
            if any(y not in dom for y, _ in g.neighbors(x)):
                return False
    # (2) components toward distinct neighbors never overlap
    nbrs = tree.neighbors[u]
    comps = [components_toward(g, f_u, v) for v in nbrs]
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            if comps[i] & comps[j]:
                return False
    return True


def types_agree(t1: TypeFn, t2: TypeFn, m_g: Metric) -> bool:
    """Some witness pair sums to at least its graph distance (vacuous if empty)."""
    if not t1.items or not t2.items:
        return True
    for x, vx in t1.items:
        row = m_g.row(x)
        for y, vy in t2.items:
            if vx + vy >= row[y]:
                return True
    return False


def typelists_agree(l1, l2, m_g: Metric) -> bool:
    return all(types_agree(t1, t2, m_g) for t1 in l1 for t2 in l2)


def anchor_type(f_u: UPartialEmbedding, v: int, x: int, m_g: Metric,
                d: int) -> TypeFn:
    """The type induced by boundary vertex x itself over S[v, f_u]."""
    dom = sorted(f_u.direction_set(v))
    base = f_u.tree.metric.d(f_u.image_of(x), f_u.anchor)
    row = m_g.row(x)
    return TypeFn(tuple((y, beta(base - row[y], d)) for y in dom))


def typelist_compatible(lst, f_u: UPartialEmbedding, v: int, m_g: Metric,
                        tree: RootedTree, d: int) -> bool:
    """Every boundary vertex's own induced type appears in the list."""
    for x in sorted(f_u.direction_set(v)):
        if anchor_type(f_u, v, x, m_g, d) not in lst:
            return False
    return True


def upartial_succeeds(f_v: UPartialEmbedding, f_u: UPartialEmbedding,
                      g: WeightedGraph, m_g: Metric, tree: RootedTree,
                      d: int) -> bool:
    """Gluing conditions between a parent-anchored and child-anchored map."""
    u = f_u.anchor
    v = f_v.anchor
    if tree.parent[v] != u:
        raise ValueError(f"{v} is not a child of {u}")
    s_u = f_u.domain
    s_v = f_v.domain
    inter = s_u & s_v
    keep_u = f_u.shell_set(0, d) | (f_u.shell_set(d + 1, d + 1) & f_u.direction_set(v))
    keep_v = f_v.shell_set(0, d) | (f_v.shell_set(d + 1, d + 1) & f_v.direction_set(u))
    if not (inter == keep_u == keep_v):
        return False
    du = f_u.as_dict()
    dv = f_v.as_dict()
    if any(du[x] != dv[x] for x in inter):
        return False
    # components toward the child refine into the child's own directions
    far_v = f_v.shell_set(d + 1, d + 1)
    target = components_toward(g, f_u, v)
    pieces = []
    for x in tree.neighbors[v]:
        if x == u:
            continue
        pieces.append(components_toward(g, f_v, x))
        pieces.append(f_v.direction_set(x) & far_v)
    union = set()
    for p in pieces:
        if union & p:
            return False
        union |= p
    if union != target:
        return False
    # and symmetrically toward the parent
    far_u = f_u.shell_set(d + 1, d + 1)
    target = components_toward(g, f_v, u)
    pieces = []
    for x in tree.neighbors[u]:
        if x == v:
            continue
        pieces.append(components_toward(g, f_u, x))
        pieces.append(f_u.direction_set(x) & far_u)
    union = set()
    for p in pieces:
        if union & p:
            return False
        union |= p
    if union != target:
        return False
    return True


def propagate_type(t1: TypeFn, target_dom, m_g: Metric, d: int) -> TypeFn:
    """Shift a type one tree edge outward onto a new boundary set."""
    src = t1.as_dict()
    out = []
    for x in sorted(target_dom):
        if x in src:
            out.append((x, beta(src[x] + 1, d)))
        else:
            row = m_g.row(x)
            best = max(val + 1 - row[y] for y, val in src.items())
            out.append((x, beta(best, d)))
    return TypeFn(tuple(out))


def _shift_types(types, target_dom, m_g, d):
    """Propagate every non-empty-domain type onto target_dom."""
    out = set()
    for t in types:
        if t.items:
            out.add(propagate_type(t, target_dom, m_g, d))
    return frozenset(out)


def _unit_graph_from_metric(m_g: Metric) -> WeightedGraph:
    """Recover a unit-weight graph from its metric (edges = distance-1 pairs)."""
    edges = [
        (u, v, 1)
        for u in range(m_g.size)
        for v in range(u + 1, m_g.size)
        if m_g.d(u, v) == 1
    ]
    return WeightedGraph(m_g.size, edges)


def state_succeeds(x_v: UState, x_u: UState, d: int, m_g: Metric,
                   tree: RootedTree) -> bool:
    """Full succession: embedding gluing plus type propagation both ways."""
    f_v = x_v.embedding
    f_u = x_u.embedding
    u = f_u.anchor
    v = f_v.anchor
    g = _unit_graph_from_metric(m_g)
    if not upartial_succeeds(f_v, f_u, g, m_g, tree, d):
        return False
    # child sideways lists propagate into the parent's list toward the child
    target = sorted(f_u.direction_set(v))
    parent_list = x_u.typelist(v)
    for w in tree.neighbors[v]:
        if w == u:
            continue
        for t1 in x_v.typelist(w):
            if not t1.items:
                continue
            if propagate_type(t1, target, m_g, d) not in parent_list:
                return False
    # parent sideways lists propagate into the child's list toward the parent
    target = sorted(f_v.direction_set(u))
    child_list = x_v.typelist(u)
    for w in tree.neighbors[u]:
        if w == v:
            continue
        for t1 in x_u.typelist(w):
            if not t1.items:
                continue
            if propagate_type(t1, target, m_g, d) not in child_list:
                return False
    return True


@dataclass
class TreeEmbedding:
    """An injective map from graph vertices to tree vertices."""

    mapping: dict

    def __eq__(self, other):
        if not isinstance(other, TreeEmbedding):
            return NotImplemented
        return self.mapping == other.mapping


def check_tree_embedding(m_g: Metric, tree: RootedTree, f, d) -> Verdict:
    """Exact distortion check of a tree embedding (rational d supported)."""
    mapping = f.mapping if isinstance(f, TreeEmbedding) else dict(f)
    if set(mapping) != set(range(m_g.size)):
        raise ValueError("mapping must cover exactly the graph's vertices")
    if len(set(mapping.values())) != len(mapping):
        raise ValueError("mapping must be injective")
    d = Fraction(d)
    p, q = d.numerator, d.denominator
    for u in range(m_g.size):
        row_g = m_g.row(u)
        row_t = tree.metric.row(mapping[u])
        for v in range(u + 1, m_g.size):
            dt = row_t[mapping[v]]
            dg = row_g[v]
            if dt < dg:
                return Verdict("contracts", u, v, dt, dg)
            if dt * q > dg * p:
                return Verdict("expands", u, v, dt, dg)
    return Verdict("ok")


def states_from_embedding(g: WeightedGraph, m_g: Metric, tree: RootedTree,
                          f, d: int) -> dict:
    """The states a full embedding induces: ball restrictions plus the types
    of every boundary-or-beyond vertex, clamped.  Used to cross-check that
    induced states are feasible and succeed along every tree edge."""
    mapping = f.mapping if isinstance(f, TreeEmbedding) else dict(f)
    out = {}
    for u in range(tree.n):
        row_u = tree.metric.row(u)
        sub = {x: img for x, img in mapping.items() if row_u[img] <= d + 1}
        f_u = UPartialEmbedding.from_dict(tree, u, sub)
        lists = []
        for v in tree.neighbors[u]:
            dom = sorted(f_u.direction_set(v))
            gens = set(dom) | set(components_toward(g, f_u, v))
            types = set()
            for z in sorted(gens):
                base = row_u[mapping[z]]
                row_z = m_g.row(z)
                types.add(TypeFn(tuple(
                    (y, beta(base - row_z[y], d)) for y in dom)))
            lists.append((v, frozenset(types)))
        out[u] = UState(f_u, tuple(sorted(lists)))
    return out


# ---------------------------------------------------------------------------
# decision engine
# ---------------------------------------------------------------------------


class _Budget:
    __slots__ = ("left",)

    def __init__(self, amount):
        self.left = amount

    def spend(self, k=1):
        self.left -= k
        if self.left < 0:
            raise ResourceBudgetExceededError(
                "tree embedding search exceeded its state budget")


class _PartialRec:
    """A feasible anchored partial embedding with precomputed views."""

    __slots__ = ("idx", "emb", "dom", "map", "dirset", "anchors", "img_row")

    def __init__(self, idx, emb, g, m_g, tree, d):
        self.idx = idx
        self.emb = emb
        self.dom = emb.domain
        self.map = emb.as_dict()
        self.dirset = {}
        self.anchors = {}
        u = emb.anchor
        for v in tree.neighbors[u]:
            dom = tuple(sorted(emb.direction_set(v)))
            self.dirset[v] = dom
            self.anchors[v] = frozenset(
                anchor_type(emb, v, x, m_g, d) for x in dom)


def _enumerate_partials(g, m_g, tree, u, d, budget):
    """All feasible u-anchored partial embeddings, deterministic order."""
    row_u = tree.metric.row(u)
    cells = sorted((x for x in range(tree.n) if row_u[x] <= d + 1),
                   key=lambda x: (row_u[x], x))
    rows_t = tree.metric.rows()
    rows_g = m_g.rows()
    n = g.n
    found = []
    assign = []  # (graph vertex, cell); occupants tried first, empty cell last

    def rec(ci):
        budget.spend()
        if ci == len(cells):
            emb = UPartialEmbedding.from_dict(
                tree, u, {x: c for x, c in assign})
            if is_feasible_upartial(g, m_g, tree, emb, d):
                found.append(emb)
            return
        cell = cells[ci]
        row_cell = rows_t[cell]
        used = {x for x, _ in assign}
        for x in range(n):
            if x in used:
                continue
            row_x = rows_g[x]
            ok = True
            for y, c in assign:
                dt = row_cell[c]
                dg = row_x[y]
                if dt < dg or dt > d * dg:
                    ok = False
                    break
            if ok:
                assign.append((x, cell))
                rec(ci + 1)
                assign.pop()
        rec(ci + 1)

    rec(0)
    return found


class _TreeSearch:
    def __init__(self, g, tree, d, budget_amount):
        self.g = g
        self.tree = tree
        self.d = d
        self.m_g = shortest_path_metric(g)
        self.budget = _Budget(budget_amount)
        self.partials = {}
        for u in range(tree.n):
            embs = _enumerate_partials(g, self.m_g, tree, u, d, self.budget)
            self.partials[u] = [
                _PartialRec(i, e, g, self.m_g, tree, d)
                for i, e in enumerate(embs)
            ]
        self.succ = {}  # (u, v child) -> dict f_u idx -> list of f_v idx
        for u in range(tree.n):
            for v in tree.children[u]:
                table = {}
                for ru in self.partials[u]:
                    lst = []
                    for rv in self.partials[v]:
                        if self._quick_glue(ru, rv) and upartial_succeeds(
                                rv.emb, ru.emb, g, self.m_g, tree, d):
                            lst.append(rv.idx)
                    table[ru.idx] = lst
                self.succ[(u, v)] = table
        self.catalog = {}  # (u, f idx) -> list of profiles
        self._memo = {}

    def _quick_glue(self, ru, rv):
        inter = ru.dom & rv.dom
        mu, mv = ru.map, rv.map
        return all(mu[x] == mv[x] for x in inter)

    # -- catalog (bottom-up candidate profiles, parent checks deferred) ----

    def build_catalogs(self):
        tree = self.tree
        for v in tree.postorder:
            for rec in self.partials[v]:
                self.catalog[(v, rec.idx)] = self._profiles(v, rec)

    def _profiles(self, v, rec):
        tree, m_g, d = self.tree, self.m_g, self.d
        kids = tree.children[v]
        if not kids:
            return [((), ())]  # (downs, per-child candidate fidx tuples)
        per_child = []
        for w in kids:
            target = rec.dirset[w]
            anchors = rec.anchors[w]
            options = {}  # down list -> sorted tuple of child fidx
            for j in self.succ[(v, w)].get(rec.idx, ()):  # child partial idx
                for downs_w, _ in self.catalog[(w, j)]:
                    self.budget.spend()
                    export = self._export(w, j, downs_w, target)
                    lst = anchors | export
                    options.setdefault(lst, set()).add(j)
            per_child.append(sorted(
                ((lst, tuple(sorted(js))) for lst, js in options.items()),
                key=lambda it: sorted(t.items for t in it[0])))
        out = []
        for combo in product(*per_child):
            self.budget.spend()
            downs = tuple(lst for lst, _ in combo)
            ok = True
            for a in range(len(downs)):
                for b in range(a + 1, len(downs)):
                    if not typelists_agree(downs[a], downs[b], m_g):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.append((downs, tuple(js for _, js in combo)))
        return out

    def _export(self, w, j, downs_w, target):
        """Types the child state (w, j, downs) pushes into the parent's list."""
        rec = self.partials[w][j]
        out = set()
        for k, x in enumerate(self.tree.children[w]):
            out |= _shift_types(downs_w[k], target, self.m_g, self.d)
        return frozenset(out)

    # -- top-down validation -------------------------------------------------

    def validate(self, v, j, up_list, export_target, export_bound):
        """Search a witness subtree at (v, f_v=j) under parent requirements.

        up_list: required typelist toward the parent (None at the root);
        export_target/export_bound: the parent's boundary set toward v and
        the parent's list toward v that our exports must land inside.
        """
        key = (v, j, up_list, export_target, export_bound)
        hit = self._memo.get(key, 0)
        if hit != 0:
            return hit if hit is not None else None
        self._memo[key] = None
        tree, m_g, d = self.tree, self.m_g, self.d
        rec = self.partials[v][j]
        kids = tree.children[v]
        for downs, js_choices in self.catalog[(v, j)]:
            self.budget.spend()
            if export_target is not None:
                export = frozenset().union(*(
                    _shift_types(downs[k], export_target, m_g, d)
                    for k in range(len(kids)))) if kids else frozenset()
                if not export <= export_bound:
                    continue
            lists = {w: downs[k] for k, w in enumerate(kids)}
            if up_list is not None:
                lists[tree.parent[v]] = up_list
                ok = all(
                    typelists_agree(up_list, downs[k], m_g)
                    for k in range(len(kids)))
                if not ok:
                    continue
            wit = self._validate_children(v, j, rec, kids, downs, js_choices,
                                          lists)
            if wit is not None:
                result = (j, downs, up_list, wit)
                self._memo[key] = result
                return result
        self._memo[key] = None
        return None

    def _validate_children(self, v, j, rec, kids, downs, js_choices, lists):
        tree, m_g, d = self.tree, self.m_g, self.d
        chosen = []
        for k, w in enumerate(kids):
            bound = downs[k]
            found = None
            for jw in js_choices[k]:
                crec = self.partials[w][jw]
                target_up = crec.dirset[v]
                q = set(crec.anchors[v])
                for x, lst in lists.items():
                    if x == w:
                        continue
                    q |= _shift_types(lst, target_up, m_g, d)
                up_w = frozenset(q)
                wit = self.validate(w, jw, up_w, rec.dirset[w], downs[k])
                if wit is not None:
                    found = wit
                    break
            if found is None:
                return None
            chosen.append((w, found))
        return tuple(chosen)

    # -- driving -------------------------------------------------------------

    def run(self):
        self.build_catalogs()
        root = self.tree.root
        for rec in self.partials[root]:
            wit = self.validate(root, rec.idx, None, None, None)
            if wit is not None:
                return self._finish(root, wit)
        return None

    def _finish(self, root, wit):
        states = {}
        mapping = {}

        def walk(v, node):
            j, downs, up_list, children = node
            rec = self.partials[v][j]
            for x, img in rec.map.items():
                if x in mapping and mapping[x] != img:
                    raise RuntimeError(
                        "internal error: inconsistent images across states")
                mapping[x] = img
            lists = []
            kids = self.tree.children[v]
            for k, w in enumerate(kids):
                lists.append((w, downs[k]))
            if up_list is not None:
                lists.append((self.tree.parent[v], up_list))
            states[v] = UState(rec.emb, tuple(sorted(lists)))
            for w, child_node in children:
                walk(w, child_node)

        walk(root, wit)
        # every accepted witness must stand up to the full predicates
        g, m_g, tree, d = self.g, self.m_g, self.tree, self.d
        for v, st in states.items():
            if not is_feasible_upartial(g, m_g, tree, st.embedding, d):
                raise RuntimeError("internal error: infeasible witness state")
            for w in tree.neighbors[v]:
                if not typelist_compatible(st.typelist(w), st.embedding, w,
                                           m_g, tree, d):
                    raise RuntimeError("internal error: incompatible typelist")
            nb = tree.neighbors[v]
            for a in range(len(nb)):
                for b in range(a + 1, len(nb)):
                    if not typelists_agree(st.typelist(nb[a]),
                                           st.typelist(nb[b]), m_g):
                        raise RuntimeError(
                            "internal error: disagreeing typelists")
        for v in range(tree.n):
            for w in tree.children[v]:
                if not state_succeeds(states[w], states[v], d, m_g, tree):
                    raise RuntimeError(
                        "internal error: witness states do not glue")
        if set(mapping) != set(range(g.n)):
            raise RuntimeError("internal error: witness does not cover V(G)")
        emb = TreeEmbedding(mapping)
        verdict = check_tree_embedding(m_g, tree, emb, d)
        if not verdict.ok:
            raise RuntimeError(f"internal error: witness fails check: {verdict}")
        return emb


def embed_tree(g: WeightedGraph, tree: RootedTree, d: int,
               budget: int = DEFAULT_BUDGET, stats=None):
    """Distortion-d embedding of a connected unit-weight graph into a rooted
    bounded-degree tree, or None when no such embedding exists."""
    if not isinstance(d, int) or d < 1:
        raise ValueError("distortion bound must be an integer >= 1")
    if g.n == 0:
        raise ValueError("graph must have at least one vertex")
    if not g.is_unit_weight():
        raise NonUnitWeightsError("embed_tree requires unit weights")
    if not is_connected(g):
        raise DisconnectedGraphError("input graph is disconnected")
    if g.max_degree() > tree.max_degree ** d:
        if stats is not None:
            stats["reason"] = "degree-bound"
        return None
    search = _TreeSearch(g, tree, d, budget)
    result = search.run()
    if result is None and stats is not None:
        stats["reason"] = "no-witness"
    return result
