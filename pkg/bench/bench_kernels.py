"""Compare the compiled and pure-Python elimination kernels.

    python bench/bench_kernels.py [--repeat 3] [--sizes 50 100 200]

Times RREF of random dense matrices over F_32003 and GF(2^16) with each
finite-field backend, rational RREF with flint and with Fractions, and one
end-to-end kernel sweep per backend.  Every backend must return the same
result; the script exits nonzero otherwise.
"""

import argparse
import random
import sys
import time

from facering import corpus
from facering.fields import GF2_16, GF32003, QQ
from facering.graebe import clear_caches as clear_graebe
from facering.cohomology import clear_caches as clear_cohomology
from facering.graebe import kernel_sweep
from facering.linalg import Matrix, available_backends, rref, use_backend


def timed(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def random_matrix(field, n, rng, density=0.3, bound=None):
    def entry():
        if rng.random() > density:
            return 0
        if bound is not None:
            return rng.randint(-bound, bound)
        return rng.randrange(field.order)
    return Matrix.from_rows(field, [[entry() for _ in range(n)] for _ in range(n)], ncols=n)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200])
    ap.add_argument("--sweep", default="torus-7", help="corpus complex for the end-to-end sweep")
    args = ap.parse_args(argv)
    rng = random.Random(0)
    avail = available_backends()
    ok = True
    print(f"backends: {avail}")
    print(f"{'case':<28}{'backend':<12}{'seconds':>10}")

    for field in (GF32003, GF2_16):
        for n in args.sizes:
            m = random_matrix(field, n, rng)
            results = {}
            for name in avail["finite"]:
                with use_backend(finite=name):
                    secs, results[name] = timed(lambda: rref(m), args.repeat)
                print(f"{f'rref {field} {n}x{n}':<28}{name:<12}{secs:>10.4f}")
            ok &= len({repr(r) for r in results.values()}) == 1

    for n in [s // 4 for s in args.sizes]:
        m = random_matrix(QQ, n, rng, density=0.5, bound=20)
        results = {}
        for name in avail["rational"]:
            with use_backend(rational=name):
                secs, results[name] = timed(lambda: rref(m), args.repeat)
            print(f"{f'rref q {n}x{n}':<28}{name:<12}{secs:>10.4f}")
        ok &= len({repr(r) for r in results.values()}) == 1

    cx = corpus.load(args.sweep)
    dims = {}
    for name in avail["finite"]:
        with use_backend(finite=name):
            def sweep():
                clear_graebe()
                clear_cohomology()
                return kernel_sweep(cx, GF32003, seed=0)[0]
            secs, reports = timed(sweep, 1)
        dims[name] = [(r.brute_dim, r.surjective_onto_previous) for r in reports]
        print(f"{f'kernel sweep {args.sweep}':<28}{name:<12}{secs:>10.4f}")
    ok &= len({tuple(v) for v in dims.values()}) == 1

    print("backends agree" if ok else "BACKENDS DISAGREE")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
