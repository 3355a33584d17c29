"""``fabal`` command-line interface.

Exit status: 0 on success, 1 when ``repro`` finds a failing criterion, 2 on
unparsable input, 3 when a resource cap is hit.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import fixtures
from .approx import cogen1_critical, gen1_category, gen1_critical
from .biject import (
    IncreasingTree, InterleavedTree, SelfBoundedFunction, TreeLikeTableau, decompose,
    first_untangle_labels, from_permutation, from_self_bounded, from_tree, shrink,
    to_permutation, to_self_bounded, to_tree, tree_function, unshrink, untangle,
)
from .count import (
    fb_count, fb_enumerate, multi_count, nakayama_count, q_count, row_histogram,
    size_histogram, size_polynomial,
)
from .errors import ResourceLimitError
from .fbcheck import is_balanced, is_faithful, is_fb, is_minimal_fb, oracle
from .modcat import BasicModule, NakayamaPresentation
from .serialize import ParseError, parse_module, to_grid, to_json


def _valleys(text: Optional[str]) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise ParseError(f"bad valley list {text!r}") from exc


def _read_text(value: Optional[str]) -> str:
    """Inline text, ``@path`` for a file, or stdin when omitted / ``-``."""
    if value is None or value == "-":
        return sys.stdin.read()
    if value.startswith("@"):
        with open(value[1:], encoding="utf-8") as fh:
            return fh.read()
    return value


def _module(args) -> BasicModule:
    text = args.grid if getattr(args, "grid", None) is not None else args.json
    if text is None and getattr(args, "module", None) is not None:
        text = args.module
    return parse_module(_read_text(text), _valleys(getattr(args, "valleys", None)))


def _emit_module(m: BasicModule, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(to_json(m))
    return to_grid(m, ascii=(fmt == "ascii"))


def _add_module_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("module", nargs="?", help="grid or JSON text, @file, or - for stdin")
    p.add_argument("--grid", help="grid text; rows separated by newlines or '/'")
    p.add_argument("--json", help="module JSON {\"n\": .., \"summands\": [[i, j], ..]}")
    p.add_argument("--valleys", help="comma-separated valleys of the presentation")


# -- subcommands -------------------------------------------------------------

def cmd_check(args) -> int:
    m = _module(args)
    fb = is_fb(m)
    info = {
        "module": to_json(m),
        "faithfully_balanced": fb,
        "balanced": is_balanced(m),
        "faithful": is_faithful(m),
        "minimal": is_minimal_fb(m) if fb else False,
    }
    if m.pres.is_linear:
        from .count import is_tilting
        info["tilting"] = is_tilting(m)
    if args.oracle:
        info["oracle"] = oracle(m, args.dim_bound).to_json()
    if args.format == "json":
        print(json.dumps(info, indent=2))
        return 0
    words = ["fb" if fb else "not-fb"]
    if info["minimal"]:
        words.append("minimal")
    if info.get("tilting"):
        words.append("tilting")
    if not fb:
        words.append("balanced" if info["balanced"] else "unbalanced")
        words.append("faithful" if info["faithful"] else "unfaithful")
    print(" ".join(words))
    if args.oracle:
        for k, v in info["oracle"].items():
            print(f"  {k}: {v}")
    return 0


def cmd_oracle(args) -> int:
    m = _module(args)
    print(json.dumps(oracle(m, args.dim_bound).to_json(), indent=2))
    return 0


def cmd_count(args) -> int:
    valleys = _valleys(args.valleys)
    pres = NakayamaPresentation(args.n, valleys)
    if args.by_size:
        data = size_histogram(pres) if (args.brute or valleys) else size_polynomial(args.n).coeffs
        _print_table(args.format, "summands", {str(k): v for k, v in data.items()})
    elif args.multi:
        data = row_histogram(pres) if (args.brute or valleys) else multi_count(args.n).coeffs
        _print_table(args.format, "rows", {",".join(map(str, k)): v for k, v in data.items()})
    elif args.q is not None:
        if valleys:
            raise ParseError("--q applies to Lambda_n only")
        print(json.dumps({"n": args.n, "q": args.q, "count": q_count(args.n, args.q)})
              if args.format == "json" else q_count(args.n, args.q))
    else:
        value = fb_count(pres) if args.brute else nakayama_count(pres)
        print(json.dumps({"n": args.n, "valleys": list(valleys), "count": value})
              if args.format == "json" else value)
    return 0


def _print_table(fmt: str, key: str, data: dict) -> None:
    if fmt == "json":
        print(json.dumps(data))
        return
    width = max([len(key)] + [len(k) for k in data])
    print(f"{key:>{width}}  count")
    for k, v in data.items():
        print(f"{k:>{width}}  {v}")


def cmd_enumerate(args) -> int:
    pres = NakayamaPresentation(args.n, _valleys(args.valleys))
    shown = 0
    for m in fb_enumerate(pres):
        if args.size is not None and len(m) != args.size:
            continue
        if args.format == "json":
            print(json.dumps(to_json(m)))
        else:
            print(_emit_module(m, args.format))
            print()
        shown += 1
        if args.limit and shown >= args.limit:
            break
    return 0


def _parse_structure(kind: str, text: str, n: Optional[int]) -> BasicModule:
    if kind in ("grid", "json"):
        return parse_module(text)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if kind == "sbf":
        return from_self_bounded(SelfBoundedFunction(tuple(obj)))
    if kind == "perm":
        return from_permutation(obj)
    if kind == "tree":
        return from_tree(InterleavedTree.from_json(obj))
    if kind == "tableau":
        if n is None:
            raise ParseError("--n is required to read a tableau")
        return unshrink(TreeLikeTableau.from_json(obj), n)
    raise ParseError(f"unknown input kind {kind}")


def _render_structure(kind: str, m: BasicModule):
    if kind == "grid":
        return to_grid(m)
    if kind == "json":
        return to_json(m)
    if kind == "sbf":
        return list(to_self_bounded(m).values)
    if kind == "perm":
        return list(to_permutation(m))
    if kind == "tree":
        return to_tree(m).to_json()
    if kind == "increasing":
        return untangle(to_tree(m)).to_json()
    if kind == "tableau":
        return shrink(m).to_json()
    raise ParseError(f"unknown output kind {kind}")


def cmd_map(args) -> int:
    if args.example:
        ex = fixtures.load("worked_tree")
        tree = InterleavedTree.from_json(ex["tree"])
        f = tree_function(tree)
        d = decompose(f)
        out = {
            "module": to_json(from_tree(tree)),
            "first_step_labels": first_untangle_labels(tree),
            "untangled": untangle(tree).to_json(),
            "f": list(f.values),
            "F_R": list(d.f_r_support),
            "F_L": list(d.f_l_support),
            "f_R": list(d.f_r.values),
            "f_L": list(d.f_l.values),
            "matches_fixture": (untangle(tree) == IncreasingTree.from_json(ex["untangled"])
                                and list(f.values) == ex["f"]),
        }
        print(json.dumps(out, indent=2))
        return 0
    m = _parse_structure(args.source, _read_text(args.input), args.n)
    result = _render_structure(args.target, m)
    print(result if isinstance(result, str) else json.dumps(result))
    return 0


def cmd_poset(args) -> int:
    from .poset import hasse, join, meet, meet_construction, to_dot, upper_covers
    if args.meet or args.join:
        a, b = (parse_module(_read_text(x)) for x in (args.meet or args.join))
        if args.meet and args.verbose:
            res = meet_construction(a, b)
            parts = {"C": res.cocover, "G": res.cover, "G'": res.adjusted}
            for name, part in parts.items():
                print(f"{name}: " + ",".join(str(x) for x in sorted(part)))
            print("L:")
        r = meet(a, b) if args.meet else join(a, b)
        print(_emit_module(r, args.format if args.format != "dot" else "grid"))
        return 0
    if args.covers:
        m = parse_module(_read_text(args.covers))
        for c in upper_covers(m):
            print(_emit_module(c, args.format if args.format != "dot" else "grid"))
            print()
        return 0
    if args.n is None:
        raise ParseError("poset needs --n, --meet, --join or --covers")
    g = hasse(args.n)
    if args.dot or args.format == "dot":
        text = to_dot(g, label=to_grid)
        if args.dot and args.dot != "-":
            with open(args.dot, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    edges = [[to_json(a)["summands"], to_json(b)["summands"]] for a, b in g.edges]
    print(json.dumps({"n": args.n, "nodes": g.number_of_nodes(), "edges": edges}))
    return 0


def cmd_critical(args) -> int:
    m = _module(args)
    crit = cogen1_critical(m) if args.cogen else gen1_critical(m)
    print(_emit_module(crit, args.format))
    if args.category and not args.cogen:
        cat = BasicModule(m.n, tuple(gen1_category(m)), m.valleys)
        print("category:")
        print(_emit_module(cat, args.format))
    return 0


def cmd_repro(args) -> int:
    from .acceptance import CRITERIA, run
    numbers = args.only or list(CRITERIA)
    failed = 0
    for k in numbers:
        res = run(k, args.n_max)
        line = res.line() if args.timings else res.line().replace(f" ({res.seconds:.2f}s)", "")
        print(line, flush=True)
        failed += not res.passed
    print(f"{len(numbers) - failed}/{len(numbers)} criteria passed")
    return 1 if failed else 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fabal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="classify a module")
    _add_module_args(p)
    p.add_argument("--oracle", action="store_true", help="add the matrix oracle report")
    p.add_argument("--dim-bound", type=int, default=64)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="matrix double-centralizer report")
    _add_module_args(p)
    p.add_argument("--dim-bound", type=int, default=64)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("count", help="count basic faithfully balanced modules")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--valleys")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--by-size", action="store_true")
    g.add_argument("--multi", action="store_true")
    g.add_argument("--q", type=int)
    p.add_argument("--brute", action="store_true", help="enumerate instead of using the formula")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list basic faithfully balanced modules")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--valleys")
    p.add_argument("--size", type=int)
    p.add_argument("--limit", type=int)
    p.add_argument("--format", choices=["grid", "ascii", "json"], default="grid")
    p.set_defaults(func=cmd_enumerate)

    kinds = ["grid", "json", "sbf", "perm", "tree", "tableau"]
    p = sub.add_parser("map", help="convert between fb(n) and its combinatorial models")
    p.add_argument("--from", dest="source", choices=kinds, default="grid")
    p.add_argument("--to", dest="target", choices=kinds + ["increasing"], default="sbf")
    p.add_argument("--input", help="input text, @file, or - for stdin")
    p.add_argument("--n", type=int, help="rank, needed when reading a tableau")
    p.add_argument("--example", action="store_true",
                   help="replay the ten-vertex worked example")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("poset", help="Hasse diagram, meets and joins in fb(n)")
    p.add_argument("--n", type=int)
    p.add_argument("--dot", help="write Graphviz DOT to this path (- for stdout)")
    p.add_argument("--meet", nargs=2, metavar=("A", "B"))
    p.add_argument("--join", nargs=2, metavar=("A", "B"))
    p.add_argument("--covers", metavar="M")
    p.add_argument("--verbose", action="store_true", help="show the meet construction")
    p.add_argument("--format", choices=["grid", "ascii", "json", "dot"], default="grid")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("critical", help="gen_1-critical (or cogen^1-critical) module")
    _add_module_args(p)
    p.add_argument("--cogen", action="store_true")
    p.add_argument("--category", action="store_true", help="also print gen_1(M)")
    p.add_argument("--format", choices=["grid", "ascii", "json"], default="grid")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("repro", help="run the acceptance checks")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--only", type=int, nargs="+")
    p.add_argument("--no-timings", dest="timings", action="store_false")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"fabal: resource limit: {exc}", file=sys.stderr)
        return 3
    except (ParseError, ValueError, OSError) as exc:
        print(f"fabal: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
