"""Command-line interface.

Exit codes: 0 success, 1 operation failure, 2 usage errors (argparse).
Machine-readable output via --json goes through the same serializers as
the HTTP service, so identical operations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import catalog_io as cat
from . import serialize
from .coloring import (
    Coloring,
    ColoringError,
    apply_pattern,
    default_lacunar_stc,
    format_listing,
    listing,
)
from .covering import CoveringError, lift_coloring, verify_covering
from .codes import CodesError, code_report, is_perfect_code, is_total_perfect_code
from .dot import to_dot
from .families import (
    K23,
    K23_WITH_TRIANGLE,
    fat_mobius,
    from_extended_lcf,
    from_lcf,
    generalized_petersen,
    haar,
    mobius_ladder,
    prism,
    vertex_expand,
)
from .graph import Graph, GraphError
from .kempe import (
    Budget,
    KempeError,
    flip_beta_edge,
    mcap_from_vertices,
    reduce as kempe_reduce,
    swap,
    trace_alternating,
)
from .oracle import OracleCache, exact_total_chromatic, min_beta, min_gamma


class CliError(Exception):
    pass


def _read_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(args, payload: dict, text: Optional[str] = None) -> None:
    if getattr(args, "json", False) or text is None:
        out = serialize.dumps(payload)
    else:
        out = text
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _load_graph(args) -> tuple[Graph, Optional[cat.CatalogEntry]]:
    if getattr(args, "catalog", None):
        entry = cat.catalog(args.catalog)
        return entry.graph, entry
    if getattr(args, "graph", None):
        g = Graph.from_json(_read_json(args.graph))
        entry = None
        if g.name:
            try:
                entry = cat.catalog(g.name)
                if entry.graph.edges != g.edges or entry.graph.n != g.n:
                    entry = None
            except cat.CatalogError:
                entry = None
        return g, entry
    raise CliError("need --graph FILE or --catalog KEY")


def _load_coloring(args, g: Graph, entry: Optional[cat.CatalogEntry]) -> Coloring:
    if getattr(args, "coloring", None):
        obj = _read_json(args.coloring)
        if isinstance(obj.get("graph"), str):
            ref = obj["graph"]
            base = cat.catalog(ref).graph if ref != (g.name or "") else g
            return Coloring.from_json(obj, base)
        return Coloring.from_json(obj)
    if getattr(args, "pattern_from_catalog", False):
        if entry is None:
            raise CliError("--pattern-from-catalog needs a catalog graph (by key or name)")
        return entry.lacunar_stc()
    if getattr(args, "pattern", None):
        if entry is None or entry.hamilton is None:
            raise CliError("--pattern needs a catalog graph with a stored cycle")
        return apply_pattern(entry.hamilton, args.pattern)
    if getattr(args, "default_lacunar", False):
        if entry is None or entry.hamilton is None:
            raise CliError("--default-lacunar needs a catalog graph with a stored cycle")
        return default_lacunar_stc(entry.hamilton)
    if getattr(args, "stored", None):
        return cat.stored_coloring(args.stored)
    raise CliError("need a coloring source (--coloring/--pattern-from-catalog/--pattern/--default-lacunar/--stored)")


def _coloring_flags(p: argparse.ArgumentParser, graph_too: bool = True) -> None:
    if graph_too:
        p.add_argument("--graph", help="graph JSON file")
        p.add_argument("--catalog", help="catalog key")
    p.add_argument("--coloring", help="coloring JSON file")
    p.add_argument("--pattern-from-catalog", action="store_true", dest="pattern_from_catalog")
    p.add_argument("--pattern", help="pattern string over the stored cycle")
    p.add_argument("--default-lacunar", action="store_true", dest="default_lacunar")
    p.add_argument("--stored", help="stored coloring key, e.g. petersen_tc")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="semitotal", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=lambda **kw: argparse.ArgumentParser(parents=[common], **kw))

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("--catalog")
    p.add_argument("--lcf", help="notation like [5,-5]^7")
    p.add_argument("--extended-lcf", dest="extended_lcf")
    p.add_argument("--n", type=int, help="vertex count for extended notation")
    p.add_argument("--haar", type=int)
    p.add_argument("--mobius-ladder", type=int, dest="mobius_ladder")
    p.add_argument("--fat-mobius", type=int, dest="fat_mobius")
    p.add_argument("--prism", type=int)
    p.add_argument("--gp", nargs=2, type=int, metavar=("M", "K"))
    p.add_argument("--expand", choices=["k23", "k23-triangle"],
                   help="vertex-expand the graph given by --catalog/--graph-file")
    p.add_argument("--graph-file", dest="graph_file")
    p.add_argument("--name")
    p.add_argument("--out")

    p = sub.add_parser("color", help="build a coloring")
    _coloring_flags(p)
    p.add_argument("--out")

    p = sub.add_parser("validate", help="validate a coloring")
    _coloring_flags(p)
    p.add_argument("--out")

    p = sub.add_parser("listing", help="class listing of a coloring")
    _coloring_flags(p)
    p.add_argument("--name", help="label for the summary line")
    p.add_argument("--out")

    p = sub.add_parser("mcaps", help="enumerate alternating paths and flips")
    _coloring_flags(p)
    p.add_argument("--c0", type=int)
    p.add_argument("--c1", type=int)
    p.add_argument("--out")

    p = sub.add_parser("swap", help="apply an alternating-path swap")
    _coloring_flags(p)
    p.add_argument("--vertices", help="comma-separated path vertices")
    p.add_argument("--colors", help="c0,c1")
    p.add_argument("--start", type=int, help="trace from this vertex instead")
    p.add_argument("--out")

    p = sub.add_parser("flip", help="flip a same-colored-endpoints edge")
    _coloring_flags(p)
    p.add_argument("--edge", required=True, help="edge as 'u,v' or an index")
    p.add_argument("--out")

    p = sub.add_parser("reduce", help="search for a reduction sequence")
    _coloring_flags(p)
    p.add_argument("--goal", default="equitable-tc",
                   choices=["tc", "equitable-tc", "equitable-stc", "min-beta-gamma"])
    p.add_argument("--nodes", type=int, default=100000)
    p.add_argument("--steps", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")

    p = sub.add_parser("lift", help="pull a coloring back along a covering map")
    p.add_argument("--map", required=True, help="covering map JSON file or stored key")
    p.add_argument("--coloring", help="coloring JSON file for the target graph")
    p.add_argument("--stored", help="stored coloring key for the target graph")
    p.add_argument("--out")

    p = sub.add_parser("verify-cover", help="check a covering map")
    p.add_argument("--map", required=True)
    p.add_argument("--out")

    p = sub.add_parser("codes", help="perfect-code reports")
    _coloring_flags(p)
    p.add_argument("--set", help="comma-separated vertex set instead of a coloring")
    p.add_argument("--out")

    p = sub.add_parser("oracle", help="exact small-instance values")
    p.add_argument("--graph")
    p.add_argument("--catalog")
    p.add_argument("--what", required=True, choices=["chi2", "min-beta", "min-gamma"])
    p.add_argument("--cap", type=int, default=26)
    p.add_argument("--cache", help="path of an on-disk result table")
    p.add_argument("--out")

    p = sub.add_parser("export-dot", help="Graphviz DOT export")
    _coloring_flags(p)
    p.add_argument("--plain", action="store_true", help="graph only, ignore coloring flags")
    p.add_argument("--out")

    p = sub.add_parser("serve", help="run the HTTP session service")
    p.add_argument("--port", type=int, default=8008)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", help="directory with the built explorer UI")
    p.add_argument("--persist", help="directory for per-session trace JSON files")
    return ap


def _cmd_gen(args) -> None:
    if args.catalog:
        g = cat.catalog(args.catalog).graph
    elif args.lcf:
        g, _ = from_lcf(args.lcf, name=args.name)
    elif args.extended_lcf:
        if not args.n:
            raise CliError("--extended-lcf needs --n")
        g, _, report = from_extended_lcf(args.extended_lcf, args.n, name=args.name)
        if not args.json:
            print(f"validation: regular={report.regular_degree} girth={report.girth}", file=sys.stderr)
    elif args.haar:
        g = haar(args.haar, name=args.name or f"haar_{args.haar}")
    elif args.mobius_ladder:
        g, _ = mobius_ladder(args.mobius_ladder, name=args.name or f"mobius_ladder_{args.mobius_ladder}")
    elif args.fat_mobius:
        g = fat_mobius(args.fat_mobius, name=args.name or f"fmob{args.fat_mobius}")
    elif args.prism:
        g, _ = prism(args.prism, name=args.name or f"prism{args.prism}")
    elif args.gp:
        m, k = args.gp
        g = generalized_petersen(m, k, name=args.name or f"gp_{m}_{k}")
    elif args.expand:
        if args.graph_file:
            base = Graph.from_json(_read_json(args.graph_file))
        else:
            raise CliError("--expand needs --graph-file")
        variant = K23 if args.expand == "k23" else K23_WITH_TRIANGLE
        g = vertex_expand(base, variant, name=args.name)
    else:
        raise CliError("gen needs a generator flag")
    _emit(args, g.to_json(), serialize.dumps(g.to_json()))


def _cmd_reduce(args) -> None:
    g, entry = _load_graph(args)
    mu = _load_coloring(args, g, entry)
    goal = args.goal.replace("-", "_")
    tr = kempe_reduce(mu, goal, Budget(nodes=args.nodes, steps=args.steps), seed=args.seed)
    name = g.name or "G"
    payload = tr.to_json(name)
    payload["final_listing"] = serialize.payload_listing(tr.final, name)
    text = "\n".join(
        [
            f"goal {tr.goal} reached={tr.goal_reached} steps={len(tr.steps)}",
            *(f"  {i + 1}. {s.kind} {s.colors} {s.before}->{s.after} {s.classification.label}"
              for i, s in enumerate(tr.steps)),
            format_listing(listing(tr.final), name),
        ]
    )
    _emit(args, payload, text)


def _load_cover(args):
    try:
        obj = cat.stored_cover(args.map)
    except (cat.CatalogError, FileNotFoundError):
        obj = _read_json(args.map)
        out = dict(obj)
        for side in ("source", "target"):
            if isinstance(obj[side], str):
                out[side + "_graph"] = cat.catalog(obj[side]).graph
            else:
                out[side + "_graph"] = Graph.from_json(obj[side])
        obj = out
    return obj


def run_cli(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.cmd == "gen":
            _cmd_gen(args)
        elif args.cmd == "color":
            g, entry = _load_graph(args)
            mu = _load_coloring(args, g, entry)
            _emit(args, serialize.payload_coloring(mu, g.name), None)
        elif args.cmd == "validate":
            g, entry = _load_graph(args)
            mu = _load_coloring(args, g, entry)
            rep = serialize.payload_validation(mu)
            text = "valid TC" if rep["is_tc"] else ("valid STC" if rep["is_stc"] else "invalid")
            _emit(args, rep, text)
        elif args.cmd == "listing":
            g, entry = _load_graph(args)
            mu = _load_coloring(args, g, entry)
            name = args.name or g.name or "G"
            _emit(args, serialize.payload_listing(mu, name), format_listing(listing(mu), name))
        elif args.cmd == "mcaps":
            g, entry = _load_graph(args)
            mu = _load_coloring(args, g, entry)
            pair = None
            if args.c0 is not None or args.c1 is not None:
                if args.c0 is None or args.c1 is None:
                    raise CliError("--c0 and --c1 go together")
                pair = (args.c0, args.c1)
            _emit(args, serialize.payload_mcaps(mu, pair), None)
        elif args.cmd == "swap":
            g, entry = _load_graph(args)
            mu = _load_coloring(args, g, entry)
            if not args.colors:
                raise CliError("swap needs --colors c0,c1")
            c0, c1 = (int(x) for x in args.colors.split(","))
            if args.vertices:
                verts = [int(x) for x in args.vertices.split(",")]
                path = mcap_from_vertices(mu, verts, c0, c1)
            elif args.start is not None:
                path = trace_alternating(mu, args.start, c0, c1)
                if path is None:
                    raise CliError("no alternating path from that start")
            else:
                raise CliError("swap needs --vertices or --start")
            nu = swap(mu, path)
            _emit(args, serialize.payload_coloring(nu, g.name), None)
        elif args.cmd == "flip":
            g, entry = _load_graph(args)
            mu = _load_coloring(args, g, entry)
            if "," in args.edge:
                u, v = (int(x) for x in args.edge.split(","))
                ei = g.edge_index(u, v)
            else:
                ei = int(args.edge)
            nu = flip_beta_edge(mu, ei)
            _emit(args, serialize.payload_coloring(nu, g.name), None)
        elif args.cmd == "reduce":
            _cmd_reduce(args)
        elif args.cmd == "lift":
            cover = _load_cover(args)
            cm = verify_covering(cover["source_graph"], cover["target_graph"], cover["map"])
            if args.stored:
                mup = cat.stored_coloring(args.stored)
            elif args.coloring:
                obj = _read_json(args.coloring)
                base = cover["target_graph"]
                mup = Coloring.from_json(obj, base if not isinstance(obj.get("graph"), dict) else None)
            else:
                raise CliError("lift needs --coloring or --stored")
            mu = lift_coloring(cm, mup)
            payload = {
                "fold": cm.fold,
                "coloring": serialize.payload_coloring(mu, cover["source_graph"].name),
                "listing": serialize.payload_listing(mu, cover["source_graph"].name or "G"),
            }
            text = format_listing(listing(mu), cover["source_graph"].name or "G")
            _emit(args, payload, text)
        elif args.cmd == "verify-cover":
            cover = _load_cover(args)
            cm = verify_covering(cover["source_graph"], cover["target_graph"], cover["map"])
            _emit(args, {"fold": cm.fold, "source": cm.source.name, "target": cm.target.name}, f"{cm.fold}-fold")
        elif args.cmd == "codes":
            g, entry = _load_graph(args)
            if args.set is not None:
                s = [int(x) for x in args.set.split(",") if x]
                payload = {
                    "set": s,
                    "perfect_code": is_perfect_code(g, s),
                    "total_perfect_code": is_total_perfect_code(g, s),
                }
                _emit(args, payload, None)
            else:
                mu = _load_coloring(args, g, entry)
                _emit(args, code_report(mu).to_json(), None)
        elif args.cmd == "oracle":
            g, _ = _load_graph(args)
            cache = OracleCache(args.cache) if args.cache else None
            fn = {"chi2": exact_total_chromatic, "min-beta": min_beta, "min-gamma": min_gamma}[args.what]
            res = fn(g, cap=args.cap, cache=cache)
            _emit(args, res.to_json(), f"{args.what}={res.value} status={res.status}")
        elif args.cmd == "export-dot":
            g, entry = _load_graph(args)
            mu = None
            if not args.plain:
                try:
                    mu = _load_coloring(args, g, entry)
                except CliError:
                    mu = None
            dot = to_dot(g, mu)
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(dot)
            else:
                sys.stdout.write(dot)
        elif args.cmd == "serve":
            from .service import run_server

            run_server(host=args.host, port=args.port, static_dir=args.static,
                       persist_dir=args.persist)
    except (CliError, GraphError, ColoringError, KempeError, CoveringError, CodesError,
            cat.CatalogError, FileNotFoundError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
