"""Brute-force ground truth for small instances.

The line oracle searches only pushing layouts (prefix sums of consecutive
distances over a vertex ordering), which loses no generality: any embedding
can be collapsed, ordering unchanged, without raising its distortion, and
every pushing layout is non-contracting.  The tree oracle tries injective
maps with branch-and-bound pruning.  Both are deterministic: ties break
toward the lexicographically least ordering / assignment.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InstanceTooLargeError
from .lineembed import LineEmbedding
from .metric import Metric

LINE_CAP_DEFAULT = 9
TREE_G_CAP_DEFAULT = 6
TREE_T_CAP_DEFAULT = 10


def _check_line_cap(m: Metric, cap):
    if m.size > cap:
        raise InstanceTooLargeError(
            f"line oracle capped at {cap} points, got {m.size}")


def brute_force_line(m: Metric, d, cap: int = LINE_CAP_DEFAULT):
    """First pushing layout with expansion <= d in lex ordering order, or None."""
    _check_line_cap(m, cap)
    d = Fraction(d)
    p, q = d.numerator, d.denominator
    n = m.size
    if n == 0:
        raise ValueError("empty metric")
    if n == 1:
        return LineEmbedding({0: 0})
    rows = m.rows()

    # DFS over orderings; prefix positions are fixed, so any pair violating
    # the expansion bound prunes the whole subtree.
    order = []
    pos = []
    used = [False] * n

    def extend():
        if len(order) == n:
            return True
        for v in range(n):
            if used[v]:
                continue
            rv = rows[v]
            at = pos[-1] + rv[order[-1]] if order else 0
            ok = True
            for u, pu in zip(order, pos):
                if (at - pu) * q > rv[u] * p:
                    ok = False
                    break
            if ok:
                used[v] = True
                order.append(v)
                pos.append(at)
                if extend():
                    return True
                used[v] = False
                order.pop()
                pos.pop()
        return False

    if extend():
        return LineEmbedding(dict(zip(order, pos)))
    return None


def min_distortion_line(m: Metric, cap: int = LINE_CAP_DEFAULT) -> Fraction:
    """Exact minimum line distortion over all pushing layouts."""
    _check_line_cap(m, cap)
    n = m.size
    if n <= 1:
        return Fraction(1)
    rows = m.rows()
    best = [None]  # Fraction

    order = []
    pos = []
    used = [False] * n

    def expansion_with(v, at):
        worst = Fraction(0)
        rv = rows[v]
        for u, pu in zip(order, pos):
            worst = max(worst, Fraction(at - pu, rv[u]))
        return worst

    def extend(worst):
        if len(order) == n:
            if best[0] is None or worst < best[0]:
                best[0] = worst
            return
        for v in range(n):
            if used[v]:
                continue
            at = pos[-1] + rows[v][order[-1]] if order else 0
            w2 = max(worst, expansion_with(v, at)) if order else worst
            if best[0] is not None and w2 >= best[0]:
                continue
            used[v] = True
            order.append(v)
            pos.append(at)
            extend(w2)
            used[v] = False
            order.pop()
            pos.pop()

    extend(Fraction(0))
    assert best[0] is not None
    return max(best[0], Fraction(1))


def brute_force_tree(m_g: Metric, tree, d: int,
                     g_cap: int = TREE_G_CAP_DEFAULT,
                     t_cap: int = TREE_T_CAP_DEFAULT):
    """Exhaustive injective-map search for a distortion-d tree embedding.

    tree is a RootedTree; returns a dict vertex -> tree vertex, or None.
    """
    from .treeembed import TreeEmbedding

    n = m_g.size
    nt = tree.n
    if n > g_cap or nt > t_cap:
        raise InstanceTooLargeError(
            f"tree oracle capped at |G|<={g_cap}, |T|<={t_cap}; "
            f"got {n}, {nt}")
    if n == 0:
        raise ValueError("empty metric")
    rows_g = m_g.rows()
    rows_t = tree.metric.rows()
    image = [-1] * n
    taken = [False] * nt

    def assign(x):
        if x == n:
            return True
        rg = rows_g[x]
        for tv in range(nt):
            if taken[tv]:
                continue
            rt = rows_t[tv]
            ok = True
            for y in range(x):
                dg = rg[y]
                dt = rt[image[y]]
                if dt < dg or dt > d * dg:
                    ok = False
                    break
            if ok:
                image[x] = tv
                taken[tv] = True
                if assign(x + 1):
                    return True
                taken[tv] = False
                image[x] = -1
        return False

    if assign(0):
        return TreeEmbedding(dict(enumerate(image)))
    return None
