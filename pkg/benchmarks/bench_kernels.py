"""Compare the compiled and pure-Python rigidity kernels.

Two measurements: the kernel alone on random four-point data, and a full
classification run with each backend swapped in.

    python benchmarks/bench_kernels.py [--samples N] [--max-weight W]
"""

from __future__ import annotations

import argparse
import random
import time

from fplab import _pykernels, kernels
from fplab.search import SearchSpec, classify_all


def random_lists(rng, n, k, max_weight):
    mags = [rng.randint(1, max_weight) for _ in range(n * k // 2)]
    occ = mags + [-m for m in mags]
    rng.shuffle(occ)
    return [tuple(sorted(occ[j * n:(j + 1) * n])) for j in range(k)]


def time_kernel(impl, inputs):
    start = time.perf_counter()
    for lists in inputs:
        impl.chi_constants(lists)
    return time.perf_counter() - start


def time_search(impl, spec):
    saved = kernels.chi_constants, kernels.is_balanced
    kernels.chi_constants, kernels.is_balanced = impl.chi_constants, impl.is_balanced
    try:
        start = time.perf_counter()
        report = classify_all(spec)
        return time.perf_counter() - start, report
    finally:
        kernels.chi_constants, kernels.is_balanced = saved


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=5000)
    parser.add_argument("--max-weight", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    compiled = kernels.compiled_impl
    if compiled is None:
        try:
            from fplab import _ckernels as compiled
        except ImportError:
            print("compiled extension not built; only the Python kernel is available")
            compiled = None

    rng = random.Random(args.seed)
    inputs = [random_lists(rng, 3, 4, 6) for _ in range(args.samples)]
    backends = [("python", _pykernels)] + ([("cython", compiled)] if compiled else [])

    print(f"kernel: {args.samples} random inputs, n=3, k=4, |w| <= 6")
    base = None
    for name, impl in backends:
        t = time_kernel(impl, inputs)
        base = base or t
        print(f"  {name:<7} {t:8.3f} s  {1e6 * t / args.samples:8.2f} us/call  x{base / t:6.1f}")

    spec = SearchSpec(3, 4, args.max_weight)
    print(f"search: n=3, k=4, W={args.max_weight}")
    base = None
    reports = []
    for name, impl in backends:
        t, rep = time_search(impl, spec)
        reports.append(rep.jsonl())
        base = base or t
        print(f"  {name:<7} {t:8.3f} s  candidates={rep.candidates} "
              f"survivors={len(rep.survivors)}  x{base / t:6.1f}")
    if len(set(reports)) > 1:
        raise SystemExit("backends disagree on the classification report")


if __name__ == "__main__":
    main()
