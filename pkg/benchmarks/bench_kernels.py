"""Benchmark the compiled branch-and-bound kernels against the pure-Python ones.

Times the exact solvers on representative quotient and family instances with
each backend and reports the speedup.  Usage::

    python benchmarks/bench_kernels.py [--repeats N] [--sweep]
"""

import argparse
import time

import tumbling.solvers as solvers
from tumbling import _kernels_py
from tumbling.density import density_sweep
from tumbling.lattice import FamilyKind, FamilySpec, build_family
from tumbling.quotient import LatticeQuotient, build_quotient
from tumbling.solvers import ParamKind, solve

try:
    from tumbling import _kernels
except ImportError:
    _kernels = None

INSTANCES = [
    ("quotient(2,0,5)", build_quotient(LatticeQuotient(2, 0, 5)), ParamKind.GAMMA),
    ("quotient(3,2,1)", build_quotient(LatticeQuotient(3, 2, 1)), ParamKind.GAMMA_OP),
    ("quotient(3,0,3)", build_quotient(LatticeQuotient(3, 0, 3)), ParamKind.LD),
    ("quotient(7,3,1)", build_quotient(LatticeQuotient(7, 3, 1)), ParamKind.IC),
    ("quotient(3,0,4)", build_quotient(LatticeQuotient(3, 0, 4)), ParamKind.OLD),
    ("quotient(4,3,2)", build_quotient(LatticeQuotient(4, 3, 2)), ParamKind.F_MAX),
    ("quotient(3,0,3)", build_quotient(LatticeQuotient(3, 0, 3)), ParamKind.F_OP_MAX),
    ("tbp(4,4)", build_family(FamilySpec(FamilyKind.TBP, 4, 4)), ParamKind.GAMMA),
    ("tbp(3,4)", build_family(FamilySpec(FamilyKind.TBP, 3, 4)), ParamKind.OLD),
]


def time_solve(kernel_module, g, kind, repeats):
    solvers.kernels_for = lambda n: kernel_module
    best = float("inf")
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        res = solve(g, kind, deterministic=False)
        best = min(best, time.perf_counter() - t0)
        value = res.value
    return value, best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--sweep", action="store_true", help="also time a full density sweep")
    args = ap.parse_args()

    if _kernels is None:
        print("compiled kernels not available; showing pure-Python timings only")
    original = solvers.kernels_for

    header = f"{'instance':18} {'param':9} {'n':>4} {'value':>5} {'python':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    try:
        for name, g, kind in INSTANCES:
            v_py, t_py = time_solve(_kernels_py, g, kind, args.repeats)
            if _kernels is not None:
                v_c, t_c = time_solve(_kernels, g, kind, args.repeats)
                assert v_py == v_c, (name, kind, v_py, v_c)
                print(
                    f"{name:18} {kind.value:9} {g.n:>4} {v_py:>5} {t_py:>9.4f}s {t_c:>9.4f}s {t_py / t_c:>7.1f}x"
                )
            else:
                print(f"{name:18} {kind.value:9} {g.n:>4} {v_py:>5} {t_py:>9.4f}s {'-':>10} {'-':>8}")
    finally:
        solvers.kernels_for = original

    if args.sweep:
        import os

        for backend in ("python", "compiled") if _kernels is not None else ("python",):
            os.environ["TB_BACKEND"] = backend
            # subprocess-free sweep timing uses the already-imported backend,
            # so swap kernels_for directly instead
            solvers.kernels_for = (lambda n: _kernels_py) if backend == "python" else (lambda n: _kernels)
            t0 = time.perf_counter()
            records = density_sweep(ParamKind.OLD, 12, threads=1)
            dt = time.perf_counter() - t0
            best = min(r.density for r in records)
            print(f"density sweep old det<=12 [{backend:8}]: best {best}  {dt:.2f}s")
        solvers.kernels_for = original


if __name__ == "__main__":
    main()
