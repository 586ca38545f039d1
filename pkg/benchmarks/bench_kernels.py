"""Compare the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--sizes 16 18 20 22] [--repeat 5]

Prints the best-of-``repeat`` wall time per kernel, backend and size, plus
the speedup of the compiled core and the largest absolute difference
between the two outputs.
"""

import argparse
import timeit

import numpy as np

from predval import kernels


def cases(n, rng):
    v = rng.uniform(-1.0, 1.0, 1 << n)
    v[0] = 0.0
    w = rng.uniform(0.0, 1.0, 1 << n)
    w /= w.sum()
    weights = rng.integers(1, 50, n).astype(np.float64)
    quota = float(weights.sum() // 2 + 1)
    return {
        "subset_zeta": (v, n),
        "subset_mobius": (v, n),
        "superset_zeta": (v, n),
        "split_sums": (w, n),
        "marginal_inside": (v, w, n),
        "marginal_outside": (v, w, n),
        "weighted_worth": (weights, quota),
    }


def max_diff(a, b):
    if isinstance(a, tuple):
        return max(max_diff(x, y) for x, y in zip(a, b))
    return float(np.max(np.abs(np.asarray(a, dtype=np.float64) - np.asarray(b, dtype=np.float64))))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[16, 18, 20, 22])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    names = kernels.available_backends()
    if len(names) < 2:
        print("compiled core not built; only the numpy fallback is available")
    backends = {name: kernels.get_backend(name) for name in names}
    header = f"{'kernel':<18} {'n':>3}" + "".join(f" {name + ' ms':>12}" for name in names)
    if len(names) > 1:
        header += f" {'speedup':>8} {'max diff':>10}"
    print(header)
    rng = np.random.default_rng(0)
    for n in args.sizes:
        for kernel, call_args in cases(n, rng).items():
            times, outputs = [], []
            for backend in backends.values():
                fn = getattr(backend, kernel)
                outputs.append(fn(*call_args))
                best = min(timeit.repeat(lambda: fn(*call_args), number=1, repeat=args.repeat))
                times.append(best * 1e3)
            row = f"{kernel:<18} {n:>3}" + "".join(f" {t:>12.2f}" for t in times)
            if len(names) > 1:
                row += f" {times[1] / times[0]:>7.1f}x {max_diff(*outputs):>10.2e}"
            print(row)


if __name__ == "__main__":
    main()
