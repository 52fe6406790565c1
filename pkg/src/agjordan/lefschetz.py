"""Weak and strong Lefschetz verdicts, with the deficiency certificate.

Each verdict is computed two ways: from the rank table (maximal ranks of
multiplication maps) and from the shape of the Jordan partition (parts vs
Sperner number for WLP, partition vs conjugate Hilbert vector for SLP).
The two derivations are theorems of each other, so they are asserted equal
on every call.
"""

from dataclasses import dataclass

from agjordan.errors import InternalInconsistency, InvalidRankProfile
from agjordan.hessian import RankTable
from agjordan.jordan import JordanTypeReport, Partition


@dataclass(frozen=True)
class LefschetzReport:
    wlp: bool
    slp: bool
    sperner: int
    jordan: Partition
    hilbert_dual: Partition
    failing_maps: tuple  # (i, j, achieved rank, maximal possible rank)


def sperner(hilbert) -> int:
    """Largest value of the Hilbert vector."""
    hilbert = tuple(hilbert)
    if not hilbert:
        raise ValueError("empty Hilbert vector")
    return max(hilbert)


def lefschetz_report(rt: RankTable, jt: JordanTypeReport) -> LefschetzReport:
    d = rt.socle_degree
    h = rt.hilbert
    wlp_ranks = all(
        rt.get(i, 1) == min(h[i], h[i + 1]) for i in range(d)
    )
    slp_ranks = all(
        rt.get(i, d - 2 * i) == h[i] for i in range(d // 2 + 1)
    )
    sp = sperner(h)
    wlp_parts = jt.jordan.num_parts == sp
    slp_parts = jt.jordan == jt.hilbert_dual
    if wlp_ranks != wlp_parts:
        raise InternalInconsistency(
            f"WLP verdicts disagree: ranks say {wlp_ranks}, "
            f"partition shape says {wlp_parts}"
        )
    if slp_ranks != slp_parts:
        raise InternalInconsistency(
            f"SLP verdicts disagree: ranks say {slp_ranks}, "
            f"partition shape says {slp_parts}"
        )
    failing = []
    for (i, j), achieved in rt.cells():
        maximal = min(h[i], h[i + j])
        if achieved < maximal:
            failing.append((i, j, achieved, maximal))
    return LefschetzReport(
        wlp=wlp_ranks,
        slp=slp_ranks,
        sperner=sp,
        jordan=jt.jordan,
        hilbert_dual=jt.hilbert_dual,
        failing_maps=tuple(failing),
    )


def cubic_gap(n: int, r: int) -> int:
    """For socle degree 3 with Hilbert (1, n, n, 1): the chain length from
    the Jordan type up to the conjugate Hilbert vector is exactly n - r."""
    if not 1 <= r <= n:
        raise InvalidRankProfile(f"need 1 <= r <= n, got r={r}, n={n}")
    return n - r
