"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

from dolgachev import _pykernels, kernels
from dolgachev.assembly import strata_table
from dolgachev.lattice import SurfaceParams


def strata_case(p, q, n_max):
    table = strata_table(SurfaceParams(p, q))
    args = (p, q, [sd.index.sigma for sd in table], [sd.index.tau for sd in table],
            [sd.Phi for sd in table], n_max)
    return f"strata_sums p={p} q={q} n<={n_max}", args, "strata_sums"


def shell_case(bound):
    return f"shell_points box={bound}", (bound, bound, [-1] * 10, -8, -1), "shell_points"


def wall_case():
    # the frozen segment from the walls tests, as integer forms
    w0 = [2687, -1235, -583, -829, -709, -909, -829, -789, -949, -789]
    w1 = [2723, -1255, -587, -841, -721, -921, -841, -801, -961, -801]
    return "shell_points wall search box=(12,7)", (12, 7, [1] * 10, -8, -1, w0, w1), "shell_points"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels._compiled is None:
        print("compiled kernels unavailable; build the extension first")
        return
    cases = [strata_case(15, 14, 1000), strata_case(25, 24, 1000), shell_case(2), shell_case(3), wall_case()]
    print(f"{'case':40} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for label, cargs, name in cases:
        py = getattr(_pykernels, name)
        cc = getattr(kernels._compiled, name)
        assert py(*cargs) == cc(*cargs)
        t_py = min(timeit.repeat(lambda: py(*cargs), number=1, repeat=args.repeat))
        t_cc = min(timeit.repeat(lambda: cc(*cargs), number=1, repeat=args.repeat))
        print(f"{label:40} {t_py:10.4f} {t_cc:11.4f} {t_py / t_cc:7.1f}x")


if __name__ == "__main__":
    main()
