"""Command-line front end.

Exit codes form the machine interface: 0 = success / embeddable / check OK,
1 = not embeddable / check violation, 2 = usage or input error.  Output is
byte-deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .errors import InstanceTooLargeError, LowdistError
from .graphs import WeightedGraph, graph_to_text, parse_graph_text
from .hardness import (
    generate,
    instance_metric,
    roles_to_text,
    sparse_all_pairs,
    witness_embedding,
)
from .lineembed import (
    LineEmbedding,
    check_line_embedding,
    embed_line,
    embed_line_weighted,
)
from .metric import Metric, local_density, shortest_path_metric
from .oracle import (
    LINE_CAP_DEFAULT,
    TREE_G_CAP_DEFAULT,
    TREE_T_CAP_DEFAULT,
    brute_force_tree,
    min_distortion_line,
)
from .treeembed import RootedTree, TreeEmbedding, check_tree_embedding, embed_tree

# pure-python all-pairs gets slow beyond this; the sparse backend is exact
_SPARSE_METRIC_THRESHOLD = 600


class _UsageError(Exception):
    pass


def _read_graph(path) -> WeightedGraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_graph_text(fh.read())
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None
    except LowdistError as exc:
        raise _UsageError(f"{path}: {exc}") from None


def _metric_for(g: WeightedGraph) -> Metric:
    if g.n > _SPARSE_METRIC_THRESHOLD:
        return Metric(sparse_all_pairs(g))
    return shortest_path_metric(g)


def _parse_rational(text) -> Fraction:
    try:
        if "/" in text:
            a, b = text.split("/")
            return Fraction(int(a), int(b))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError):
        raise _UsageError(f"not a rational number: {text!r}") from None


def _parse_positive_int(text, what) -> int:
    try:
        value = int(text)
    except ValueError:
        raise _UsageError(f"{what} must be an integer, got {text!r}") from None
    if value < 1:
        raise _UsageError(f"{what} must be >= 1, got {value}")
    return value


def _read_assignment(path, what):
    """Read a two-column 'vertex value' file."""
    out = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                tok = line.split()
                if len(tok) != 2:
                    raise _UsageError(
                        f"{path}:{lineno}: expected 'vertex {what}'")
                out[int(tok[0])] = int(tok[1])
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None
    except ValueError:
        raise _UsageError(f"{path}: non-integer token") from None
    return out


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _line_embedding_text(emb: LineEmbedding) -> str:
    items = sorted(emb.positions.items(), key=lambda kv: (kv[1], kv[0]))
    return "".join(f"{v} {p}\n" for v, p in items)


def _tree_embedding_text(emb: TreeEmbedding) -> str:
    items = sorted(emb.mapping.items())
    return "".join(f"{v} {tv}\n" for v, tv in items)


def cmd_density(args) -> int:
    g = _read_graph(args.graph)
    m = _metric_for(g)
    delta = local_density(m)
    print(f"{delta.numerator}/{delta.denominator} {float(delta):.6f}")
    return 0


def cmd_embed_line(args, weighted=False) -> int:
    g = _read_graph(args.graph)
    d = _parse_positive_int(args.d, "distortion")
    weighted = weighted or getattr(args, "weighted", False)
    emb = embed_line_weighted(g, d) if weighted else embed_line(g, d)
    if emb is None:
        print("not embeddable")
        return 1
    _emit(_line_embedding_text(emb), args.output)
    return 0


def cmd_embed_tree(args) -> int:
    g = _read_graph(args.graph)
    host = _read_graph(args.tree)
    d = _parse_positive_int(args.d, "distortion")
    tree = RootedTree(host, root=args.root)
    emb = embed_tree(g, tree, d)
    if emb is None:
        print("not embeddable")
        return 1
    _emit(_tree_embedding_text(emb), args.output)
    return 0


def cmd_check(args) -> int:
    g = _read_graph(args.graph)
    d = _parse_rational(args.d)
    assignment = _read_assignment(args.embedding, "position")
    if args.tree:
        host = _read_graph(args.tree)
        tree = RootedTree(host)
        verdict = check_tree_embedding(
            _metric_for(g), tree, TreeEmbedding(assignment), d)
    else:
        verdict = check_line_embedding(
            _metric_for(g), LineEmbedding(assignment), d)
    print(str(verdict))
    return 0 if verdict.ok else 1


def cmd_oracle(args) -> int:
    g = _read_graph(args.graph)
    m = _metric_for(g)
    if args.tree:
        if args.d is None:
            raise _UsageError("tree oracle needs --d")
        d = _parse_positive_int(args.d, "distortion")
        host = _read_graph(args.tree)
        tree = RootedTree(host)
        emb = brute_force_tree(m, tree, d, g_cap=args.g_cap, t_cap=args.t_cap)
        if emb is None:
            print("not embeddable")
            return 1
        _emit(_tree_embedding_text(emb), args.output)
        return 0
    best = min_distortion_line(m, cap=args.cap)
    print(f"{best.numerator}/{best.denominator}")
    return 0


def cmd_gen_hardness(args) -> int:
    g = _read_graph(args.graph)
    a = _parse_positive_int(args.a, "a")
    b = _parse_positive_int(args.b, "b")
    inst = generate(g, a, b)
    prefix = args.out_prefix
    with open(prefix + ".graph", "w", encoding="utf-8") as fh:
        fh.write(graph_to_text(inst.graph))
    with open(prefix + ".roles", "w", encoding="utf-8") as fh:
        fh.write(roles_to_text(inst))
    p = inst.params
    print(f"vertices {inst.graph.n} edges {inst.graph.m} "
          f"g {p.g} r {p.r} q {p.q} L {p.L} t {p.t}")
    if args.coloring:
        psi = _read_assignment(args.coloring, "color")
        emb = witness_embedding(inst, psi)
        with open(prefix + ".witness", "w", encoding="utf-8") as fh:
            fh.write(_line_embedding_text(emb))
        verdict = check_line_embedding(instance_metric(inst), emb,
                                       Fraction(a, b))
        print(f"witness {verdict}")
        if not verdict.ok:
            return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="lowdist",
        description="low-distortion embeddings of graph metrics "
                    "into the line and into bounded-degree trees")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("density", help="print the local density lower bound")
    p.add_argument("graph")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("embed-line", help="embed into the integer line")
    p.add_argument("graph")
    p.add_argument("d")
    p.add_argument("--weighted", action="store_true",
                   help="allow integer weights > 1")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_embed_line)

    p = sub.add_parser("embed-line-weighted",
                       help="embed a weighted metric into the integer line")
    p.add_argument("graph")
    p.add_argument("d")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=lambda a: cmd_embed_line(a, weighted=True))

    p = sub.add_parser("embed-tree", help="embed into a bounded-degree tree")
    p.add_argument("graph")
    p.add_argument("tree")
    p.add_argument("d")
    p.add_argument("--root", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_embed_tree)

    p = sub.add_parser("check", help="verify an embedding at rational d")
    p.add_argument("graph")
    p.add_argument("embedding")
    p.add_argument("d")
    p.add_argument("--tree", default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="exact brute-force reference")
    p.add_argument("graph")
    p.add_argument("--tree", default=None)
    p.add_argument("--d", default=None)
    p.add_argument("--cap", type=int, default=LINE_CAP_DEFAULT)
    p.add_argument("--g-cap", type=int, default=TREE_G_CAP_DEFAULT)
    p.add_argument("--t-cap", type=int, default=TREE_T_CAP_DEFAULT)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen-hardness",
                       help="build a weighted instance from a 3-coloring input")
    p.add_argument("graph")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("out_prefix")
    p.add_argument("--coloring", default=None)
    p.set_defaults(func=cmd_gen_hardness)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InstanceTooLargeError as exc:
        print(f"error: instance too large: {exc}", file=sys.stderr)
        return 2
    except LowdistError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
