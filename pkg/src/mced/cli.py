"""Command-line front end.

Exit codes: 0 yes/success, 1 no-instance, 2 usage or parse error,
3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import bench as bench_mod
from .decomposition import decompose, tree_to_dot
from .gadgets import build_kl_gadget, gen_planted, gen_random
from .graph import (
    Graph,
    InvalidEditError,
    ParseError,
    format_edit_set,
    parse_graph,
    serialize_graph,
)
from .kernel import STATUS_KERNEL, STATUS_NO, kernelize
from .oracles import InstanceTooLargeError
from .recognition import find_forbidden
from .solver import ResourceLimitError, brute_force_oracle, solve_bounded

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _add_common(p: argparse.ArgumentParser, with_k: bool = False) -> None:
    p.add_argument("--l", dest="ell", type=int, required=True, help="maximum color classes (>= 2)")
    if with_k:
        p.add_argument("--k", dest="k", type=int, required=True, help="edit budget (>= 0)")
    p.add_argument("input", nargs="?", default="-", help="edge-list file or '-' for stdin")
    p.add_argument(
        "--deterministic",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="byte-stable reports for identical inputs (default on)",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mced", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p_rec = sub.add_parser("recognize", help="test membership and print a witness if absent")
    _add_common(p_rec)
    p_rec.add_argument("--emit-dot", metavar="PATH", help="write the decomposition tree as DOT")

    p_ker = sub.add_parser("kernelize", help="reduce to an equivalent bounded-size instance")
    _add_common(p_ker, with_k=True)
    p_ker.add_argument("--emit-dot", metavar="PATH", help="write the decomposition tree as DOT")
    p_ker.add_argument("--output", "-o", help="write the kernel graph here instead of stdout")

    p_sol = sub.add_parser("solve", help="bounded search for an edit set of size <= k")
    _add_common(p_sol, with_k=True)
    p_sol.add_argument("--stats", action="store_true", help="report node and kernel statistics")
    p_sol.add_argument("--parallel", action="store_true", help="explore root branches in parallel")

    p_ora = sub.add_parser("oracle", help="exhaustive toggle-enumeration ground truth")
    _add_common(p_ora, with_k=True)

    p_gen = sub.add_parser("gen", help="instance generators")
    gsub = p_gen.add_subparsers(dest="generator", required=True)

    g_r = gsub.add_parser("random", help="Erdos-Renyi G(n, p)")
    g_r.add_argument("--n", type=int, required=True)
    g_r.add_argument("--p", type=float, required=True)
    g_r.add_argument("--seed", type=int, default=0)
    g_r.add_argument("--output", "-o", default="-")

    g_p = gsub.add_parser("planted", help="planted target graph plus noise toggles")
    g_p.add_argument("--sizes", required=True, help="comma-separated cluster sizes")
    g_p.add_argument("--l", dest="ell", type=int, required=True)
    g_p.add_argument("--noise", type=int, default=0)
    g_p.add_argument("--seed", type=int, default=0)
    g_p.add_argument("--output", "-o", default="-")

    g_g = gsub.add_parser("gadget", help="clique blowup of an input graph")
    g_g.add_argument("--l", dest="ell", type=int, required=True)
    g_g.add_argument("input", nargs="?", default="-")
    g_g.add_argument("--output", "-o", default="-")

    p_ben = sub.add_parser("bench", help="time decompose/kernelize phases on planted instances")
    p_ben.add_argument("--sizes", required=True, help="comma-separated vertex counts")
    p_ben.add_argument("--cluster-size", type=int, default=10)
    p_ben.add_argument("--l", dest="ell", type=int, default=2)
    p_ben.add_argument("--k", dest="k", type=int, default=10)
    p_ben.add_argument("--seed", type=int, default=0)
    p_ben.add_argument("--repeat", type=int, default=1)
    p_ben.add_argument("--with-solve", action="store_true")
    p_ben.add_argument("--csv", help="write the CSV here instead of stdout")
    p_ben.add_argument("--plot", metavar="PATH", help="render a timing figure to this file")

    return ap


def _cmd_recognize(args) -> int:
    g = _read_graph(args.input)
    if args.emit_dot:
        _write_text(args.emit_dot, tree_to_dot(decompose(g)))
    wit = find_forbidden(g, args.ell)
    if wit is None:
        print("answer=yes")
        return EXIT_YES
    print(wit.to_line())
    return EXIT_NO


def _cmd_kernelize(args) -> int:
    g = _read_graph(args.input)
    if args.emit_dot:
        _write_text(args.emit_dot, tree_to_dot(decompose(g)))
    res = kernelize(g, args.ell, args.k)
    lines = [f"# status={res.status}"]
    if res.stats.quotient_size is not None:
        lines.append(f"# quotient_size={res.stats.quotient_size}")
    lines.append(f"# components_removed={res.stats.components_removed}")
    lines.append(f"# vertices_truncated={res.stats.vertices_truncated}")
    lines.append(
        f"# bounds: v<=(2l+2)k={2 * (args.ell + 1) * args.k}"
        f" p<=2lk={2 * args.ell * args.k} s<=2k={2 * args.k}"
    )
    if res.status == STATUS_NO:
        lines.append(f"# reason={res.reason}")
        _write_text(args.output, "\n".join(lines) + "\n")
        print(f"reason: {res.reason}", file=sys.stderr)
        return EXIT_NO
    if res.status == STATUS_KERNEL:
        body = serialize_graph(res.graph)
        vmap = "\n".join(
            f"# {new} -> {old}" for new, old in enumerate(res.vertex_map)
        )
        text = "\n".join(lines) + "\n" + body + "# vertex_map\n"
        if vmap:
            text += vmap + "\n"
        _write_text(args.output, text)
        return EXIT_YES
    _write_text(args.output, "\n".join(lines) + "\n0 0\n")
    return EXIT_YES


def _cmd_solve(args) -> int:
    g = _read_graph(args.input)
    res = solve_bounded(g, args.ell, args.k, parallel=args.parallel)
    print(f"answer={'yes' if res.answer else 'no'}")
    print(f"k={args.k}")
    if res.answer:
        print("edits=")
        sys.stdout.write(format_edit_set(res.edits))
    if args.stats:
        print(f"nodes_explored={res.nodes_explored}")
        print(f"max_branching={res.max_branching}")
        if res.kernel is not None:
            print(f"kernel_status={res.kernel.status}")
            print(f"components_removed={res.kernel.stats.components_removed}")
            print(f"vertices_truncated={res.kernel.stats.vertices_truncated}")
            print(f"quotient_size={res.kernel.stats.quotient_size}")
    return EXIT_YES if res.answer else EXIT_NO


def _cmd_oracle(args) -> int:
    g = _read_graph(args.input)
    edits = brute_force_oracle(g, args.ell, args.k)
    if edits is None:
        print("answer=no")
        print(f"k={args.k}")
        return EXIT_NO
    print("answer=yes")
    print(f"k={args.k}")
    print("edits=")
    sys.stdout.write(format_edit_set(edits))
    return EXIT_YES


def _cmd_gen(args) -> int:
    if args.generator == "random":
        g = gen_random(args.n, args.p, args.seed)
        header = f"# generator: random n={args.n} p={args.p} seed={args.seed} rng=pcg64\n"
    elif args.generator == "planted":
        sizes = [int(s) for s in args.sizes.split(",") if s]
        g, bound = gen_planted(len(sizes), sizes, args.ell, args.noise, args.seed)
        header = (
            f"# generator: planted sizes={args.sizes} l={args.ell}"
            f" noise={args.noise} seed={args.seed} rng=pcg64\n"
            f"# edit_upper_bound={bound}\n"
        )
    else:
        src = _read_graph(args.input)
        g, gm = build_kl_gadget(src, args.ell)
        header = (
            f"# generator: gadget l={args.ell} source_n={src.n} source_m={src.m}\n"
            f"# vertex (i,p) of the source maps to i*l+(p-1)\n"
        )
    _write_text(args.output, header + serialize_graph(g))
    return EXIT_YES


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    rows = bench_mod.run_bench(
        sizes,
        args.cluster_size,
        args.ell,
        args.k,
        args.seed,
        repeat=args.repeat,
        with_solve=args.with_solve,
    )
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            bench_mod.rows_to_csv(rows, fh)
    else:
        bench_mod.rows_to_csv(rows, sys.stdout)
    if args.plot:
        bench_mod.render_plot(rows, args.plot)
    return EXIT_YES


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        if args.command == "recognize":
            return _cmd_recognize(args)
        if args.command == "kernelize":
            return _cmd_kernelize(args)
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "oracle":
            return _cmd_oracle(args)
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "bench":
            return _cmd_bench(args)
        raise AssertionError(f"unhandled command {args.command}")
    except (InstanceTooLargeError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ParseError, InvalidEditError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
