"""Compare the compiled linear-algebra kernel against the pure-Python one.

Run from the repository root:

    python3 benchmarks/bench_kernel.py

Two layers: microbenchmarks of rank/echelon/matmul on random integer and
fraction matrices (both backends imported side by side), then an
end-to-end Jordan type computation in a subprocess per backend, selected
through AGJORDAN_KERNEL.
"""

import os
import random
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from agjordan import _kernel_py  # noqa: E402

try:
    from agjordan import _kernel_c
except ImportError:
    _kernel_c = None


def random_matrix(rng, m, n):
    # integer rows: callers clear denominators before hitting the kernel
    return [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]


def best_of(fn, repeats=5):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_micro():
    rng = random.Random(314159)
    cases = [
        ("rank 40x40", lambda k, a=random_matrix(rng, 40, 40): k.rank(a, 40)),
        ("rank 80x80", lambda k, a=random_matrix(rng, 80, 80): k.rank(a, 80)),
        ("echelon 60x60", lambda k, a=random_matrix(rng, 60, 60): k.echelon(a, 60)),
        ("matmul 40x40", lambda k,
         a=random_matrix(rng, 40, 40),
         b=random_matrix(rng, 40, 40): k.matmul(a, b, 40)),
    ]
    print(f"{'case':<16} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, fn in cases:
        t_py = best_of(lambda: fn(_kernel_py))
        if _kernel_c is None:
            print(f"{name:<16} {t_py * 1e3:>8.2f}ms {'n/a':>10} {'n/a':>8}")
            continue
        t_c = best_of(lambda: fn(_kernel_c))
        print(
            f"{name:<16} {t_py * 1e3:>8.2f}ms {t_c * 1e3:>8.2f}ms "
            f"{t_py / t_c:>7.2f}x"
        )


END_TO_END = (
    "import time; "
    "from agjordan import _kernel; "
    "from agjordan.apolarity import graded_basis; "
    "from agjordan.hessian import GenericRankConfig, rank_table; "
    "from agjordan.jordan import jordan_type; "
    "from agjordan.poly import parse_poly; "
    "b = graded_basis(parse_poly('x*u^3*v + y*u*v^3', "
    "var_order=('x', 'y', 'u', 'v'))); "
    "t0 = time.perf_counter(); "
    "jt = jordan_type(rank_table(b, GenericRankConfig())); "
    "dt = time.perf_counter() - t0; "
    "print(f'{_kernel.BACKEND}: {jt.jordan.render()} in {dt * 1e3:.2f}ms')"
)


def bench_end_to_end():
    print("\nquintic Jordan type, one full pipeline run per backend:")
    for choice in ("py", "c"):
        env = dict(os.environ, AGJORDAN_KERNEL=choice)
        out = subprocess.run(
            [sys.executable, "-c", END_TO_END],
            capture_output=True, text=True, env=env,
        )
        print(" ", (out.stdout.strip() or out.stderr.strip()))


if __name__ == "__main__":
    if _kernel_c is None:
        print("compiled extension not importable; timing pure Python only\n")
    bench_micro()
    bench_end_to_end()
