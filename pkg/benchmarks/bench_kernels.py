"""Time the compiled kernels against the pure-Python ones.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

from surfclass import _kernels_py
from surfclass.normal import coordinates_of, matching_system, primary_sides
from surfclass.oracle import genus_g, genus_g_with_neck, refine

try:
    from surfclass import _kernels
except ImportError:
    _kernels = None


def workloads():
    g2 = genus_g(2)
    eqs = matching_system(g2).equations
    T, neck = genus_g_with_neck(3)
    big = tuple(500 * v for v in coordinates_of(T, neck))
    R = refine(genus_g(4), 80, 1)
    partner_r = list(R.partner)
    x_r = [1] * (3 * R.n)
    return {
        "enumerate genus 2, max 2": lambda k: k.enumerate_solutions(3 * g2.n, eqs, 2),
        "trace 500 parallel necks": lambda k: k.trace_curves(list(T.partner), primary_sides(T), list(big)),
        "complement 500 parallel necks": lambda k: k.complement_labels(list(T.partner), list(big)),
        "complement vertex links, 186 triangles": lambda k: k.complement_labels(partner_r, x_r),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _kernels is None:
        print("compiled kernels not built; nothing to compare")
        return
    print(f"{'workload':42} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, job in workloads().items():
        assert job(_kernels) == job(_kernels_py)
        py = min(timeit.repeat(lambda: job(_kernels_py), number=1, repeat=args.repeat))
        cy = min(timeit.repeat(lambda: job(_kernels), number=1, repeat=args.repeat))
        print(f"{name:42} {py:10.4f} {cy:10.4f} {py / cy:8.1f}x")


if __name__ == "__main__":
    main()
