"""Command-line front end: generators, engines and experiment runner."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from coverdepth import experiments
from coverdepth.constructions import construct_gst, construct_hst, construct_padded_pair
from coverdepth.cover import ahu_canon, distinguishing_depth, truncated_ucover
from coverdepth.equivalence import (
    bisim_depth,
    fo2c_depth,
    fo2c_depth_bounds,
    have_common_cover,
)
from coverdepth.graph import gen_cycle, gen_path, read_graph, serialize_graph
from coverdepth.refinement import run_refinement

log = logging.getLogger("coverdepth")


class Output:
    def __init__(self, path: str | None):
        self.path = path
        self.chunks: list[str] = []

    def write(self, text: str) -> None:
        self.chunks.append(text if text.endswith("\n") else text + "\n")

    def flush(self) -> None:
        data = "".join(self.chunks)
        if self.path:
            with open(self.path, "w", encoding="utf-8") as fh:
                fh.write(data)
        else:
            sys.stdout.write(data)


def _emit(args, out: Output, payload: dict, rows: list[dict] | None = None) -> None:
    if args.format == "csv" and rows is not None:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else [], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        out.write(buf.getvalue())
    else:
        out.write(json.dumps(payload, indent=2))


def cmd_gen(args, out: Output) -> int:
    sidecar = None
    if args.family in ("gst", "hst"):
        lg = (construct_gst if args.family == "gst" else construct_hst)(args.s, args.t)
        g, sidecar = lg.graph, lg.sidecar()
    elif args.family in ("theorem1", "padded"):
        if args.n is None:
            raise ValueError(f"--n is required for {args.family}")
        pair = construct_padded_pair(args.n)
        lg = pair[0] if args.side == "g" else pair[1]
        g, sidecar = lg.graph, lg.sidecar()
    else:
        if args.n is None:
            raise ValueError(f"--n is required for {args.family}")
        g = gen_path(args.n) if args.family == "path" else gen_cycle(args.n)
    out.write(serialize_graph(g))
    if args.sidecar:
        if sidecar is None:
            sidecar = {"root": 0, "types": [], "levels": []}
        with open(args.sidecar, "w", encoding="utf-8") as fh:
            json.dump(sidecar, fh)
    return 0


def cmd_refine(args, out: Output) -> int:
    g = read_graph(args.graph)
    hist = run_refinement(g)
    upto = hist.stab + 1 if args.rounds is None else args.rounds
    counts = [{"round": i, "classes": hist.coloring(i).class_count} for i in range(upto + 1)]
    payload = {"n": g.n, "stab": hist.stab, "rounds": counts}
    if args.history:
        payload["colors"] = [list(hist.colors(i)) for i in range(upto + 1)]
    if args.format == "csv":
        _emit(args, out, payload, counts)
    else:
        out.write(json.dumps(payload, indent=2))
    return 0


def cmd_ucover(args, out: Output) -> int:
    g = read_graph(args.graph)
    tree = truncated_ucover(g, args.root, args.depth)
    payload = {"nodes": tree.size, "depth": tree.depth, "parent": list(tree.parent)}
    if tree.projection is not None:
        payload["projection"] = list(tree.projection)
    if args.canon:
        payload["canon"] = ahu_canon(tree)
    out.write(json.dumps(payload))
    return 0


def cmd_ucover_iso(args, out: Output) -> int:
    g, h = read_graph(args.g), read_graph(args.h)
    x, y = args.roots
    d = distinguishing_depth(g, x, h, y)
    out.write("isomorphic" if d is None else str(d))
    return 0


def cmd_common_cover(args, out: Output) -> int:
    g, h = read_graph(args.g), read_graph(args.h)
    res = have_common_cover(g, h)
    out.write("yes" if res.answer else "no")
    out.write(json.dumps(res.as_dict()))
    return 0


def cmd_depth(args, out: Output) -> int:
    g, h = read_graph(args.g), read_graph(args.h)
    if args.mode == "bisim":
        if args.roots is None:
            raise ValueError("--roots is required for bisim mode")
        d = bisim_depth(g, args.roots[0], h, args.roots[1])
        payload = {"mode": "bisim", "depth": d}
    elif args.mode == "fo2c":
        payload = {"mode": "fo2c", "depth": fo2c_depth(g, h)}
    else:
        payload = {"mode": "bounds", **fo2c_depth_bounds(g, h).as_dict()}
    out.write(json.dumps(payload))
    return 0


# descriptive names for the documented experiment tokens
EXPERIMENT_ALIASES = {"agreement": "norris", "stab-bounds": "corollary"}


def cmd_experiment(args, out: Output) -> int:
    name = EXPERIMENT_ALIASES.get(args.name, args.name)
    if name == "norris":
        t_list = args.t_list or [2, 3, 4, 5, 6]
        rep = experiments.experiment_agreement_depth(t_list)
    elif name == "corollary":
        inst = experiments.DEPTH_LAW_INSTANCES
        if args.s is not None and args.t is not None:
            inst = ((args.s, args.t),)
        rep = experiments.experiment_stab_bounds(inst)
    elif name == "properties":
        rep = experiments.experiment_property_suite(args.seed, args.count)
    else:
        rep = experiments.experiment_max_stab(args.n_max)
    out.write(rep.to_csv() if args.format == "csv" else rep.to_json())
    return 0 if rep.passed else 1


def _global_flags(p: argparse.ArgumentParser, default) -> None:
    p.add_argument("--format", choices=("json", "csv"), default=default)
    p.add_argument("--seed", type=int, default=default)
    p.add_argument("--out", default=default, help="write output here instead of stdout")
    p.add_argument("-v", "--verbose", action="store_true", default=default)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coverdepth", description=__doc__)
    _global_flags(p, argparse.SUPPRESS)
    p.set_defaults(format="json", seed=2024, out=None, verbose=False)
    # flags are accepted before or after the subcommand; SUPPRESS keeps either from clobbering the other
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="generate a graph")
    gen.add_argument("family", choices=("gst", "hst", "theorem1", "padded", "path", "cycle"))
    gen.add_argument("--s", type=int, default=3)
    gen.add_argument("--t", type=int, default=2)
    gen.add_argument("--n", type=int)
    gen.add_argument("--side", choices=("g", "h"), default="g")
    gen.add_argument("--sidecar", help="path for the root/types/levels JSON")
    gen.set_defaults(func=cmd_gen)

    ref = sub.add_parser("refine", parents=[common], help="run color refinement")
    ref.add_argument("graph")
    ref.add_argument("--rounds", type=int)
    ref.add_argument("--history", action="store_true")
    ref.set_defaults(func=cmd_refine)

    uc = sub.add_parser("ucover", parents=[common], help="truncated universal cover")
    uc.add_argument("graph")
    uc.add_argument("--root", type=int, required=True)
    uc.add_argument("--depth", type=int, required=True)
    uc.add_argument("--canon", action="store_true")
    uc.set_defaults(func=cmd_ucover)

    ui = sub.add_parser("ucover-iso", parents=[common], help="compare universal covers")
    ui.add_argument("g")
    ui.add_argument("h")
    ui.add_argument("--roots", type=int, nargs=2, required=True, metavar=("X", "Y"))
    ui.set_defaults(func=cmd_ucover_iso)

    cc = sub.add_parser("common-cover", parents=[common], help="decide common cover")
    cc.add_argument("g")
    cc.add_argument("h")
    cc.set_defaults(func=cmd_common_cover)

    dp = sub.add_parser("depth", parents=[common], help="game depths")
    dp.add_argument("g")
    dp.add_argument("h")
    dp.add_argument("--roots", type=int, nargs=2, metavar=("U", "V"))
    dp.add_argument("--mode", choices=("bisim", "fo2c", "bounds"), default="fo2c")
    dp.set_defaults(func=cmd_depth)

    ex = sub.add_parser("experiment", parents=[common], help="run an experiment")
    ex.add_argument("name", choices=("norris", "corollary", "properties", "maxstab", *EXPERIMENT_ALIASES))
    ex.add_argument("--t-list", type=int, nargs="+")
    ex.add_argument("--s", type=int)
    ex.add_argument("--t", type=int)
    ex.add_argument("--count", type=int, default=200)
    ex.add_argument("--n-max", type=int, default=6)
    ex.set_defaults(func=cmd_experiment)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    out = Output(args.out)
    try:
        code = args.func(args, out)
    except (ValueError, IndexError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
