"""Compiled vs pure-Python kernels on the workloads the package actually runs.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Workloads: conflict-graph construction plus exact colouring of full layouts
(what ``embed`` does when completing a page assignment), and the exhaustive
oracle over all circular orders for small ``n``.
"""
from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from circbook import _pykernels
from circbook.embed import embed
from circbook.graph import circ, max_degree

try:
    from circbook import _ckernels
except ImportError:  # extension not built
    _ckernels = None

COLOR_CASES = [(24, 4), (47, 13), (59, 28), (60, 14)]
ORACLE_CASES = [(7, 3), (8, 3), (9, 3), (9, 4)]


def _layout_arrays(n, k):
    emb = embed(n, k)
    pos = {v: i for i, v in enumerate(emb.order)}
    es = circ(n, k).edges()
    return emb.pages, np.array([pos[u] for u, _ in es]), np.array([pos[v] for _, v in es])


def _time(fn, repeat):
    runs = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - t)
    return statistics.median(runs)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    if _ckernels is None:
        print("compiled extension not built; timing the Python kernels only")

    print(f"{'workload':28} " + " ".join(f"{name:>10}" for name, _ in backends) + "   speedup")
    for n, k in COLOR_CASES:
        pages, pu, pv = _layout_arrays(n, k)
        times = []
        for _, mod in backends:
            def run(mod=mod):
                adj = mod.conflict_adjacency(pu, pv)
                status, _ = mod.kcolor(adj, pages, None, 20_000_000)
                assert status == _pykernels.FOUND
            times.append(_time(run, args.repeat))
        _row(f"colour layout C({n},{k})", times)
    for n, k in ORACLE_CASES:
        spec = circ(n, k)
        es = spec.edges()
        eu, ev = [u for u, _ in es], [v for _, v in es]
        results, times = set(), []
        for _, mod in backends:
            times.append(_time(lambda mod=mod: results.add(
                mod.oracle_min_pages(n, eu, ev, 6, max_degree(spec))), 1))
        assert len(results) == 1, results
        _row(f"oracle C({n},{k}) = {results.pop()}", times)


def _row(label, times):
    cells = " ".join(f"{t * 1000:9.1f}ms" for t in times)
    speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 and times[1] > 0 else ""
    print(f"{label:28} {cells} {speed}")


if __name__ == "__main__":
    main()
