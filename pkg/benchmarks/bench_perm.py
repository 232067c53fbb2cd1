"""Compare the compiled and pure-Python permutation kernels on braid-orbit workloads.

Usage: python benchmarks/bench_perm.py [--repeat 5]
"""

import argparse
import importlib
import time

from cyclicrank import _perm_py
from cyclicrank.hurwitz import generator_words, parse_tuple

WORKLOADS = {
    "S4 six transpositions": "(1 2);(1 2);(2 3);(2 3);(3 4);(3 4)",
    "S4 eight transpositions": "(1 2);(1 2);(2 3);(2 3);(3 4);(3 4);(1 2);(1 2)",
    "S3 mixed 3-cycles": "(1 2 3);(1 3 2);(1 2 3);(1 3 2);(1 2 3);(1 3 2)",
}


def orbit_size(kernels, flat, n, m, words):
    start = kernels.canonical_form(flat, n, m)
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for w in words:
            nxt = kernels.canonical_form(kernels.apply_braid_word(cur, n, w), n, m)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen)


def timed(kernels, t, words, repeat):
    best = float("inf")
    size = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        size = orbit_size(kernels, t.flat, t.n, t.m, words)
        best = min(best, time.perf_counter() - t0)
    return size, best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    try:
        ext = importlib.import_module("cyclicrank._perm_ext")
    except ImportError:
        ext = None
        print("compiled extension not built; timing the pure-Python kernels only")
    print(f"{'workload':<28}{'orbit':>8}{'python s':>12}{'cython s':>12}{'speedup':>9}")
    for name, text in WORKLOADS.items():
        t = parse_tuple(text, 2)
        words = generator_words(t.m, 2, "standard")
        size, py = timed(_perm_py, t, words, args.repeat)
        if ext is None:
            print(f"{name:<28}{size:>8}{py:>12.4f}")
            continue
        size2, cy = timed(ext, t, words, args.repeat)
        assert size == size2
        print(f"{name:<28}{size:>8}{py:>12.4f}{cy:>12.4f}{py / cy:>8.1f}x")


if __name__ == "__main__":
    main()
