"""Compare the compiled scoring kernels against the pure NumPy fallback.

Usage: python benchmarks/bench_kernels.py [--docs N] [--repeat R]
"""

import argparse
import time

import numpy as np

from pseudoseer._kernels import BACKEND, pure

try:
    from pseudoseer._kernels import _speedups
except ImportError:
    _speedups = None


def _best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - started)
    return best


def bench_bm25(n_docs, repeat, rng):
    df = n_docs // 5
    doc_ids = np.sort(
        rng.choice(n_docs, size=df, replace=False).astype(np.uint32)
    )
    tfs = rng.integers(1, 9, size=df).astype(np.uint32)
    lens = rng.integers(5, 400, size=n_docs).astype(np.uint32)
    avglen = float(lens.mean())
    out = np.zeros(n_docs)

    rows = []
    for label, module in (("pure", pure), ("compiled", _speedups)):
        if module is None:
            continue

        def call():
            out.fill(0.0)
            module.bm25_accumulate(doc_ids, tfs, lens, 1.31, 1.2, 0.75, avglen, out)

        rows.append(("bm25_accumulate", label, _best_of(call, repeat)))
    return rows


def bench_intersect(n_positions, repeat, rng):
    a = np.sort(rng.choice(n_positions * 4, size=n_positions, replace=False)).astype(
        np.uint32
    )
    b = np.sort(rng.choice(n_positions * 4, size=n_positions, replace=False)).astype(
        np.uint32
    )

    rows = []
    for label, module in (("pure", pure), ("compiled", _speedups)):
        if module is None:
            continue
        rows.append(
            (
                "shifted_intersect",
                label,
                _best_of(lambda m=module: m.shifted_intersect(a, b, 1), repeat),
            )
        )
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--docs", type=int, default=200_000)
    parser.add_argument("--positions", type=int, default=100_000)
    parser.add_argument("--repeat", type=int, default=7)
    args = parser.parse_args()

    rng = np.random.default_rng(7)
    print(f"active backend: {BACKEND}")
    if _speedups is None:
        print("compiled extension not built; benchmarking the fallback only")

    rows = bench_bm25(args.docs, args.repeat, rng)
    rows += bench_intersect(args.positions, args.repeat, rng)

    print(f"{'kernel':<20} {'backend':<10} {'best ms':>10}")
    base: dict[str, float] = {}
    for kernel, label, seconds in rows:
        note = ""
        if label == "pure":
            base[kernel] = seconds
        elif kernel in base and seconds > 0:
            note = f"  ({base[kernel] / seconds:.1f}x vs pure)"
        print(f"{kernel:<20} {label:<10} {seconds * 1e3:>10.3f}{note}")


if __name__ == "__main__":
    main()
