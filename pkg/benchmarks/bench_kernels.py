"""Compare the compiled and pure-Python oracle kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from qforms._kernels import _pykernels as python

try:
    from qforms._kernels import _ckernels as compiled
except ImportError:
    compiled = None


def workloads():
    rng = random.Random(0)
    rat = [[rng.choice([a for a in range(-20, 21) if a]) for _ in range(rng.randint(3, 5))] for _ in range(20)]
    return {
        "represented_mod_p  F13, dim 4": lambda k: k.represented_mod_p([1, 2, 5, 7], 13),
        "witt_index_mod_p   F5,  dim 4": lambda k: k.witt_index_mod_p([1, 2, 1, 3], 5),
        "lattice_search     <1,1,1,-7>, bound 40": lambda k: k.lattice_search([1, 1, 1, -7], 40),
        "local_isotropic_padic  p=19, k=3": lambda k: k.local_isotropic_padic([1, 2, 3, -19], 19, 3),
        "local_isotropic_padic  p=2, k=5, x20": lambda k: [k.local_isotropic_padic(e, 2, 5) for e in rat],
        "local_isotropic_laurent  F5[[x]]/x^3": lambda k: k.local_isotropic_laurent([1, 2, 1], [0, 0, 1], 5, 3),
    }


def _norm(r):
    if isinstance(r, list):
        return [_norm(x) for x in r]
    return int(r) if isinstance(r, bool) else r


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if compiled is None:
        print("compiled kernels are not built; only timing the Python backend")
    print(f"{'kernel (best of %d, seconds)' % args.repeat:44} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, work in workloads().items():
        tp = best(lambda: work(python), args.repeat)
        if compiled is None:
            print(f"{name:44} {tp:10.4f}")
            continue
        assert _norm(work(python)) == _norm(work(compiled)), name
        tc = best(lambda: work(compiled), args.repeat)
        print(f"{name:44} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
