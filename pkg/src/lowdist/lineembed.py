"""Deciding and constructing low-distortion embeddings into the integer line.

Two layers live here:

* literal window machinery (WindowEmbedding, feasibility, succession,
  successor enumeration, window counting) used by tests and small runs;
* a forward-search engine behind embed_line / embed_line_weighted that
  maintains the placed-vertex set incrementally and only ever looks at
  capped-radius local distances, so runs scale linearly on bounded-width
  inputs.  The engine's per-transition checks are equivalent to the window
  feasibility/succession conditions; the equivalence is exercised by the
  trace-based tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DisconnectedGraphError,
    NonUnitWeightsError,
    NotNonContractingError,
)
from .graphs import WeightedGraph, components_without, is_connected
from .metric import Metric, distances_within, shortest_path_metric


@dataclass
class LineEmbedding:
    """An injective map vertex -> integer line coordinate."""

    positions: dict

    def order(self):
        """Vertices sorted by line coordinate."""
        return sorted(self.positions, key=lambda v: (self.positions[v], v))

    def translated(self, delta):
        return LineEmbedding({v: p + delta for v, p in self.positions.items()})

    def __eq__(self, other):
        if not isinstance(other, LineEmbedding):
            return NotImplemented
        return self.positions == other.positions


@dataclass(frozen=True)
class Verdict:
    """Outcome of a distortion check: OK, or the first violating pair."""

    kind: str  # "ok" | "contracts" | "expands"
    u: int = -1
    v: int = -1
    gap: int = 0
    dist: int = 0

    @property
    def ok(self):
        return self.kind == "ok"

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.kind == "ok":
            return "OK"
        word = "CONTRACTS" if self.kind == "contracts" else "EXPANDS"
        return f"{word} {self.u} {self.v} D={self.dist} gap={self.gap}"


def check_line_embedding(m: Metric, e: LineEmbedding, d) -> Verdict:
    """Exact distortion check of a line embedding against a metric.

    d may be an int or Fraction; comparisons use integer cross
    multiplication, never floats.  Pairs are scanned in lexicographic
    order and the first violation is reported.
    """
    d = Fraction(d)
    p, q = d.numerator, d.denominator
    pos = e.positions
    if set(pos) != set(range(m.size)):
        raise ValueError("embedding must cover exactly the metric's points")
    for u in range(m.size):
        fu = pos[u]
        row = m.row(u)
        for v in range(u + 1, m.size):
            gap = abs(pos[v] - fu)
            duv = row[v]
            if gap < duv:
                return Verdict("contracts", u, v, gap, duv)
            if gap * q > duv * p:
                return Verdict("expands", u, v, gap, duv)
    return Verdict("ok")


def pushing_normalize(m: Metric, e: LineEmbedding) -> LineEmbedding:
    """Collapse a non-contracting embedding so consecutive gaps equal distances.

    Keeps the input's left-to-right order; the result starts at coordinate 0.
    The maximum expansion never increases because every gap only shrinks.
    """
    pos = e.positions
    if set(pos) != set(range(m.size)):
        raise ValueError("embedding must cover exactly the metric's points")
    order = sorted(pos, key=lambda v: (pos[v], v))
    for i, u in enumerate(order):
        row = m.row(u)
        for v in order[i + 1:]:
            if abs(pos[v] - pos[u]) < row[v]:
                raise NotNonContractingError(
                    f"pair ({u},{v}) contracted: gap {abs(pos[v] - pos[u])} < D {row[v]}"
                )
    out = {}
    at = 0
    prev = None
    for v in order:
        if prev is not None:
            at += m.d(prev, v)
        out[v] = at
        prev = v
    return LineEmbedding(out)


@dataclass(frozen=True)
class FeasibilitySides:
    """Vertex sets of components hanging off the left / right window half."""

    left: frozenset
    right: frozenset


@dataclass(frozen=True)
class WindowEmbedding:
    """A partial embedding of a width-(2*window_half+1) window of the line.

    Identity is the pair (offset_t, vertex sequence); positions are the
    derived pushing prefix sums starting at -window_half + offset_t.
    """

    window_half: int
    offset_t: int
    vertices: tuple
    positions: tuple

    @classmethod
    def from_sequence(cls, m: Metric, offset_t, vertices, window_half):
        half = window_half
        if half < 1:
            raise ValueError("window_half must be >= 1")
        if not vertices:
            raise ValueError("window must map at least one vertex")
        if not 0 <= offset_t <= 2 * half:
            raise ValueError(f"offset {offset_t} outside 0..{2 * half}")
        if len(set(vertices)) != len(vertices):
            raise ValueError("sequence vertices must be distinct")
        pos = [-half + offset_t]
        for a in range(1, len(vertices)):
            gap = m.d(vertices[a - 1], vertices[a])
            if not 1 <= gap <= half - 1:
                raise ValueError(
                    f"consecutive gap {gap} outside 1..{half - 1} "
                    f"for pair ({vertices[a - 1]},{vertices[a]})"
                )
            pos.append(pos[-1] + gap)
        if pos[-1] > half:
            raise ValueError("sequence runs past the right window edge")
        return cls(half, offset_t, tuple(vertices), tuple(pos))

    @property
    def domain(self):
        return frozenset(self.vertices)

    def position_of(self, v):
        return self.positions[self.vertices.index(v)]

    def as_dict(self):
        return dict(zip(self.vertices, self.positions))

    def mapped_between(self, a, b):
        """Vertices mapped into frame cells a..b inclusive."""
        return frozenset(
            v for v, p in zip(self.vertices, self.positions) if a <= p <= b
        )

    def vertex_at(self, cell):
        for v, p in zip(self.vertices, self.positions):
            if p == cell:
                return v
        return None


def compute_sides(m: Metric, g: WeightedGraph, w: WindowEmbedding) -> FeasibilitySides:
    """Components of G minus the window attached to its left / right half."""
    dom = w.domain
    left_cells = w.mapped_between(-w.window_half, -1)
    right_cells = w.mapped_between(1, w.window_half)
    left = set()
    right = set()
    for comp in components_without(g, dom):
        touches_l = touches_r = False
        for u in comp:
            for v, _ in g.neighbors(u):
                if v in left_cells:
                    touches_l = True
                if v in right_cells:
                    touches_r = True
            if touches_l and touches_r:
                break
        if touches_l:
            left |= comp
        if touches_r:
            right |= comp
    return FeasibilitySides(frozenset(left), frozenset(right))


def is_feasible(m: Metric, g: WeightedGraph, w: WindowEmbedding, d: int) -> bool:
    """The six window feasibility conditions.

    Conditions on occupied extreme cells are waived when the window carries
    the whole vertex set: a graph short enough to fit strictly inside one
    window could otherwise never be accepted, while the boundary conditions
    exist only to anchor windows that continue past an edge.
    """
    half = w.window_half
    verts = w.vertices
    pos = w.positions
    # (1) non-contracting, expansion <= d inside the window
    for i in range(len(verts)):
        row = m.row(verts[i])
        for j in range(i + 1, len(verts)):
            gap = pos[j] - pos[i]
            duv = row[verts[j]]
            if gap < duv or gap > d * duv:
                return False
    # (6) consecutive occupied cells sit exactly at metric distance
    for i in range(1, len(verts)):
        if pos[i] - pos[i - 1] != m.d(verts[i - 1], verts[i]):
            return False
    dom = w.domain
    # (3) the cell-0 occupant keeps all its neighbors inside the window
    mid = w.vertex_at(0)
    if mid is not None:
        if any(v not in dom for v, _ in g.neighbors(mid)):
            return False
    sides = compute_sides(m, g, w)
    # (2) no component hangs off both halves
    if sides.left & sides.right:
        return False
    whole = len(dom) == g.n
    # (4)/(5) empty outside parts force an occupant on the matching edge cell
    if not sides.right and w.vertex_at(half) is None and not whole:
        return False
    if not sides.left and w.vertex_at(-half) is None and not whole:
        return False
    return True


def succeeds(m: Metric, g: WeightedGraph, f: WindowEmbedding,
             gnext: WindowEmbedding, d: int) -> bool:
    """Whether gnext glues onto f shifted one cell to the right."""
    half = f.window_half
    if gnext.window_half != half:
        raise ValueError("windows must share the same half-width")
    shared_f = f.mapped_between(-(half - 1), half)
    shared_g = gnext.mapped_between(-half, half - 1)
    inter = f.domain & gnext.domain
    if not (shared_f == shared_g == inter):
        return False
    fpos = f.as_dict()
    gpos = gnext.as_dict()
    if any(fpos[u] != gpos[u] + 1 for u in inter):
        return False
    entering = gnext.mapped_between(half, half)
    if entering and not entering <= compute_sides(m, g, f).right:
        return False
    leaving = f.mapped_between(-half, -half)
    if leaving and not leaving <= compute_sides(m, g, gnext).left:
        return False
    return True


def successor_candidates(m: Metric, g: WeightedGraph, f: WindowEmbedding,
                         d: int) -> list:
    """Feasible windows succeeding f: one per entering vertex, shift-only last."""
    half = f.window_half
    survivors = [
        (v, p - 1)
        for v, p in zip(f.vertices, f.positions)
        if p > -half
    ]
    if not survivors:
        return []
    out = []
    base_verts = tuple(v for v, _ in survivors)
    base_left = survivors[0][1]
    last, plast = survivors[-1]
    k = half - plast
    candidates = []
    if 1 <= k <= half - 1:
        row = m.row(last)
        candidates = [
            u for u in range(g.n)
            if u not in f.domain and row[u] == k
        ]
    for u in candidates:
        try:
            w = WindowEmbedding.from_sequence(
                m, base_left + half, base_verts + (u,), half)
        except ValueError:
            continue
        if is_feasible(m, g, w, d) and succeeds(m, g, f, w, d):
            out.append(w)
    try:
        w = WindowEmbedding.from_sequence(m, base_left + half, base_verts, half)
    except ValueError:
        w = None
    if w is not None and is_feasible(m, g, w, d) and succeeds(m, g, f, w, d):
        out.append(w)
    return out


def iter_feasible_windows(m: Metric, g: WeightedGraph, d: int,
                          window_half=None):
    """Enumerate every feasible window, ordered by (first vertex, offset)."""
    half = window_half if window_half is not None else d + 1
    n = g.n
    for v0 in range(n):
        row0 = m.row(v0)
        for t in range(0, 2 * half + 1):
            start = -half + t
            stack = [((v0,), (start,))]
            while stack:
                verts, pos = stack.pop()
                try:
                    w = WindowEmbedding.from_sequence(m, t, verts, half)
                except ValueError:
                    w = None
                if w is not None and is_feasible(m, g, w, d):
                    yield w
                last = verts[-1]
                plast = pos[-1]
                used = set(verts)
                rowl = m.row(last)
                ext = []
                for u in range(n):
                    if u in used:
                        continue
                    gap = rowl[u]
                    if not 1 <= gap <= half - 1 or plast + gap > half:
                        continue
                    # prune on pairwise distortion right away
                    p_new = plast + gap
                    ok = True
                    rowu = m.row(u)
                    for x, px in zip(verts, pos):
                        dxu = rowu[x]
                        gxu = p_new - px
                        if gxu < dxu or gxu > d * dxu:
                            ok = False
                            break
                    if ok:
                        ext.append((verts + (u,), pos + (p_new,)))
                stack.extend(reversed(ext))


def count_feasible(g: WeightedGraph, d: int) -> int:
    """Exact number of feasible windows; requires local density <= d."""
    from .metric import local_density

    m = shortest_path_metric(g)
    if local_density(m) > d:
        raise ValueError("precondition violated: local density exceeds d")
    return sum(1 for _ in iter_feasible_windows(m, g, d))


class _LineSearch:
    """Forward search over the window succession digraph.

    Keeps a placed-vertex bitmap in sync with the search path (a vertex is
    placed exactly when it belongs to the current window or was dropped off
    its left edge, which is path-independent), so transition validity needs
    only capped-radius local distances:

    * dropping a vertex requires all its neighbors placed;
    * an entering vertex must be unplaced, sit at the exact pushing gap
      from the rightmost survivor, and pass pairwise distortion checks
      against the surviving window;
    * the cell-0 occupant of the new window keeps its neighbors inside it.
    """

    def __init__(self, g: WeightedGraph, d: int, half: int, trace=None):
        self.g = g
        self.d = d
        self.half = half
        self.gapmax = half - 1
        self.cap = 2 * half
        self.n = g.n
        self.unit = g.is_unit_weight()
        self.nbrs = [tuple(v for v, _ in g.neighbors(u)) for u in range(g.n)]
        self._dcache = {}
        self._bydist = {}
        self._cum = {}
        self.seen = bytearray(g.n)
        self.pos = [0] * g.n
        self.unseen = g.n
        self.visited = set()
        self.trace = trace

    def dist(self, u):
        dd = self._dcache.get(u)
        if dd is None:
            cap = self.cap
            if self.unit:
                dd = {u: 0}
                frontier = [u]
                nbrs = self.nbrs
                r = 0
                bydist = {}
                cum = [1]
                while frontier and r < cap:
                    r += 1
                    nxt = []
                    for x in frontier:
                        for y in nbrs[x]:
                            if y not in dd:
                                dd[y] = r
                                nxt.append(y)
                    if nxt:
                        nxt.sort()
                        bydist[r] = tuple(nxt)
                    cum.append(cum[-1] + len(nxt))
                    frontier = nxt
            else:
                dd = distances_within(self.g, u, cap)
                byd = {}
                for x in sorted(dd):
                    r = dd[x]
                    if r:
                        byd.setdefault(r, []).append(x)
                bydist = {r: tuple(v) for r, v in byd.items()}
                cum = [0] * (cap + 1)
                for r in dd.values():
                    cum[r] += 1
                for r in range(1, cap + 1):
                    cum[r] += cum[r - 1]
            self._dcache[u] = dd
            self._bydist[u] = bydist
            self._cum[u] = cum
        return dd

    def bydist(self, u):
        self.dist(u)
        return self._bydist[u]

    def density_exceeds(self):
        """Capped local-density test: any ball with (size-1)/2r > d."""
        twod = 2 * self.d
        for v in range(self.n):
            self.dist(v)
            cum = self._cum[v]
            for r in range(1, len(cum)):
                if cum[r] - 1 > twod * r:
                    return True
        return False

    # -- source enumeration ------------------------------------------------

    def _source_ok(self, verts, pos):
        sset = set(verts)
        for v, p in zip(verts, pos):
            if p <= -1:
                # nothing may hang off the left half of a starting window
                if any(u not in sset for u in self.nbrs[v]):
                    return False
            elif p == 0:
                if any(u not in sset for u in self.nbrs[v]):
                    return False
        return True

    def iter_sources(self):
        """Pushing sequences anchored at the left window edge, every prefix."""
        half, gapmax, d = self.half, self.gapmax, self.d
        for v0 in range(self.n):
            stack = [((v0,), (-half,))]
            while stack:
                verts, pos = stack.pop()
                if self._source_ok(verts, pos):
                    yield verts, pos
                last = verts[-1]
                plast = pos[-1]
                used = set(verts)
                ext = []
                byd = self.bydist(last)
                for gap in range(1, gapmax + 1):
                  for u in byd.get(gap, ()):
                    if u in used:
                        continue
                    p_new = plast + gap
                    if p_new > half:
                        continue
                    ddu = self.dist(u)
                    ok = True
                    for x, px in zip(verts, pos):
                        dxu = ddu.get(x)
                        gxu = p_new - px
                        if dxu is None or gxu < dxu or gxu > d * dxu:
                            ok = False
                            break
                    if ok:
                        ext.append((verts + (u,), pos + (p_new,)))
                stack.extend(reversed(ext))

    # -- transitions ---------------------------------------------------------

    def _choices(self, verts, apos, s):
        """Valid successor windows of the state at step s (entries first)."""
        half, gapmax, d = self.half, self.gapmax, self.d
        seen = self.seen
        s1 = s + 1
        if apos[0] - s == -half:
            for u in self.nbrs[verts[0]]:
                if not seen[u]:
                    return ()
            sv, sp = verts[1:], apos[1:]
        else:
            sv, sp = verts, apos
        if not sv:
            return ()
        mid_outside = ()
        for v, p in zip(sv, sp):
            if p == s1:
                for w in self.nbrs[v]:
                    if w not in sv:
                        mid_outside += (w,)
                break
        out = []
        entry_abs = s1 + half
        k = entry_abs - sp[-1]
        if 1 <= k <= gapmax:
            for u in self.bydist(sv[-1]).get(k, ()):
                if seen[u]:
                    continue
                if mid_outside and (len(mid_outside) > 1 or mid_outside[0] != u):
                    continue
                ddu = self.dist(u)
                ok = True
                for x, px in zip(sv, sp):
                    dxu = ddu.get(x)
                    if dxu is None:
                        ok = False
                        break
                    gxu = entry_abs - px
                    if gxu < dxu or gxu > d * dxu:
                        ok = False
                        break
                if ok:
                    out.append((sv + (u,), sp + (entry_abs,), u))
        if not mid_outside:
            out.append((sv, sp, None))
        return out

    # -- search --------------------------------------------------------------

    def _key(self, verts, apos, s):
        return (apos[0] - s, verts)

    def _record_state(self, verts, apos, s):
        if self.trace is not None:
            frame = tuple(p - s for p in apos)
            self.trace.setdefault("states", []).append((frame, verts))

    def _record_edge(self, a, b):
        if self.trace is not None:
            self.trace.setdefault("edges", []).append((a, b))

    def run(self):
        seen, pos = self.seen, self.pos
        for verts, fpos in self.iter_sources():
            key = self._key(verts, fpos, 0)
            if key in self.visited:
                continue
            self.visited.add(key)
            self._record_state(verts, fpos, 0)
            for v, p in zip(verts, fpos):
                seen[v] = 1
                pos[v] = p
                self.unseen -= 1
            if self.unseen == 0:
                return list(pos)
            result = self._dfs(verts, fpos, 0)
            if result is not None:
                return result
            for v in verts:
                seen[v] = 0
                self.unseen += 1
        return None

    def _dfs(self, verts0, apos0, s0):
        seen, pos = self.seen, self.pos
        stack = [(verts0, apos0, s0, self._choices(verts0, apos0, s0), None)]
        while stack:
            verts, apos, s, it, entered = stack[-1]
            adv = next(it, None)
            if adv is None:
                stack.pop()
                if entered is not None:
                    seen[entered] = 0
                    self.unseen += 1
                continue
            nverts, napos, nentered = adv
            s1 = s + 1
            key = self._key(nverts, napos, s1)
            if key in self.visited:
                continue
            self.visited.add(key)
            if self.trace is not None:
                self._record_state(nverts, napos, s1)
                self._record_edge(
                    (tuple(p - s for p in apos), verts),
                    (tuple(p - s1 for p in napos), nverts),
                )
            if nentered is not None:
                seen[nentered] = 1
                pos[nentered] = napos[-1]
                self.unseen -= 1
                if self.unseen == 0:
                    out = list(pos)
                    seen[nentered] = 0
                    self.unseen += 1
                    for fr in reversed(stack):
                        if fr[4] is not None:
                            seen[fr[4]] = 0
                            self.unseen += 1
                    return out
            stack.append(
                (nverts, napos, s1, self._choices(nverts, napos, s1), nentered))
        return None


def _run_search(g, d, half, trace=None):
    eng = _LineSearch(g, d, half, trace=trace)
    if eng.density_exceeds():
        return None
    raw = eng.run()
    if raw is None:
        return None
    lo = min(raw)
    return LineEmbedding({v: p - lo for v, p in enumerate(raw)})


def embed_line(g: WeightedGraph, d: int, trace=None):
    """Distortion-d line embedding of a connected unit-weight graph, or None."""
    if not isinstance(d, int) or d < 1:
        raise ValueError("distortion bound must be an integer >= 1")
    if g.n == 0:
        raise ValueError("graph must have at least one vertex")
    if not g.is_unit_weight():
        raise NonUnitWeightsError("embed_line requires unit weights")
    if not is_connected(g):
        raise DisconnectedGraphError("input graph is disconnected")
    if g.n > 1 and g.m >= g.n * d:
        return None
    return _run_search(g, d, d + 1, trace=trace)


def embed_line_weighted(g: WeightedGraph, d: int, trace=None):
    """Weighted variant; the window half-width grows to d*W+1."""
    if not isinstance(d, int) or d < 1:
        raise ValueError("distortion bound must be an integer >= 1")
    if g.n == 0:
        raise ValueError("graph must have at least one vertex")
    if not is_connected(g):
        raise DisconnectedGraphError("input graph is disconnected")
    w_max = g.max_weight()
    if g.n > 1 and g.m >= g.n * d * w_max:
        return None
    return _run_search(g, d, d * w_max + 1, trace=trace)
