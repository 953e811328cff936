"""Compare the compiled and pure-Python kernels on the construction instances.

    python benchmarks/bench_kernels.py [--repeat 3] [--json out.json]
"""

from __future__ import annotations

import argparse
import contextlib
import json
import statistics
import time

import numpy as np

from coverdepth import _pykernels, kernels
from coverdepth.constructions import ConstructionParams, construct_gst, construct_hst
from coverdepth.equivalence import fo2c_depth
from coverdepth.graph import adjacency_matrix, disjoint_union
from coverdepth.refinement import run_refinement

try:
    from coverdepth import _kernels
except ImportError:  # extension not built
    _kernels = None

INSTANCES = ((3, 2), (5, 3), (7, 3), (11, 5))


@contextlib.contextmanager
def backend(mod):
    saved = (kernels.refine_round, kernels.survival_round, kernels.perfect_matching_exists)
    kernels.refine_round = mod.refine_round
    kernels.survival_round = mod.survival_round
    kernels.perfect_matching_exists = mod.perfect_matching_exists
    try:
        yield
    finally:
        kernels.refine_round, kernels.survival_round, kernels.perfect_matching_exists = saved


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def cases():
    for s, t in INSTANCES:
        p = ConstructionParams(s, t)
        g, h = construct_gst(p).graph, construct_hst(p).graph
        union = disjoint_union(g, h)[0]
        yield f"refine G∪H ({s},{t}) n={union.n}", lambda u=union: run_refinement(u)
        if g.n <= 64:
            yield f"counting game ({s},{t}) n={g.n}", lambda g=g, h=h: fo2c_depth(g, h)
            ag, ah = adjacency_matrix(g), adjacency_matrix(h)
            alive = np.ones(g.n * h.n, dtype=np.uint8)
            yield (
                f"one survival round ({s},{t})",
                lambda ag=ag, ah=ah, al=alive: kernels.survival_round(ag, ah, al),
            )


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json")
    args = ap.parse_args(argv)
    backends = [("python", _pykernels)] + ([("cython", _kernels)] if _kernels else [])
    rows = []
    print(f"{'case':44s} " + " ".join(f"{n:>12s}" for n, _ in backends) + "   speedup")
    for name, fn in cases():
        row = {"case": name}
        for bname, mod in backends:
            with backend(mod):
                best, _ = best_of(fn, args.repeat)
            row[bname] = best
        if "cython" in row:
            row["speedup"] = row["python"] / row["cython"] if row["cython"] else float("inf")
        rows.append(row)
        cells = " ".join(f"{row[b] * 1e3:10.2f}ms" for b, _ in backends)
        extra = f"   {row['speedup']:6.1f}x" if "speedup" in row else ""
        print(f"{name:44s} {cells}{extra}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
