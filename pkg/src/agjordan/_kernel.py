"""Backend selection for the integer elimination kernels.

Prefers the compiled extension when it was built, falling back to the pure
Python implementation.  Set AGJORDAN_KERNEL=py or AGJORDAN_KERNEL=c to force
a backend (the benchmark script uses this).
"""

import os

_choice = os.environ.get("AGJORDAN_KERNEL", "").strip().lower()

if _choice in ("py", "python", "pure"):
    from agjordan import _kernel_py as _impl
elif _choice in ("c", "compiled", "cython"):
    from agjordan import _kernel_c as _impl  # type: ignore[attr-defined]
else:
    try:
        from agjordan import _kernel_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from agjordan import _kernel_py as _impl

BACKEND = "compiled" if _impl.__name__.endswith("_c") else "python"

rank = _impl.rank
echelon = _impl.echelon
matmul = _impl.matmul
gcd_reduce = _impl.gcd_reduce
