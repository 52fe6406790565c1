"""String diagrams: the strand tiling of the Hilbert vector's Ferrer diagram.

Each strand (start, length, multiplicity) draws `multiplicity` columns of
`length` cells beginning at `start`; stacked over all strands the columns
tile the Hilbert vector exactly, one row per degree.  The builder verifies
that tiling before anything is drawn.
"""

from dataclasses import dataclass

from agjordan.errors import TilingMismatch
from agjordan.jordan import EijTable


@dataclass(frozen=True)
class StringDiagram:
    hilbert: tuple
    strands: tuple  # (start_degree, length, multiplicity), render order

    @property
    def socle_degree(self) -> int:
        return len(self.hilbert) - 1

    def to_json(self):
        return {
            "hilbert": list(self.hilbert),
            "strands": [
                {"start": s, "length": ln, "count": c} for s, ln, c in self.strands
            ],
        }


def build_diagram(eij: EijTable, hilbert) -> StringDiagram:
    hilbert = tuple(hilbert)
    d = len(hilbert) - 1
    if eij.socle_degree != d:
        raise TilingMismatch(
            f"table is for socle degree {eij.socle_degree}, Hilbert vector for {d}"
        )
    strands = sorted(
        ((i, j, c) for (i, j), c in eij.e.items() if c),
        key=lambda s: (s[0], -s[1]),
    )
    dim = sum(hilbert)
    cells = sum(j * c for _, j, c in strands)
    if cells != dim:
        raise TilingMismatch(f"strands cover {cells} cells, dim A = {dim}")
    for k in range(d + 1):
        covered = sum(c for i, j, c in strands if i <= k < i + j)
        if covered != hilbert[k]:
            raise TilingMismatch(
                f"degree {k} covered by {covered} strands, Hilbert says {hilbert[k]}"
            )
    full = [(i, j, c) for i, j, c in strands if j == d + 1]
    if full != [(0, d + 1, 1)]:
        raise TilingMismatch(
            "expected exactly one full strand of length d+1 starting at degree 0"
        )
    return StringDiagram(hilbert=hilbert, strands=tuple(strands))


def render_ascii(dg: StringDiagram) -> str:
    """Rows run degree d down to 0; '●' cells, '│' strand links."""
    d = dg.socle_degree
    columns = []
    for start, length, count in dg.strands:
        columns.extend([(start, start + length - 1)] * count)
    lines = []
    for k in range(d, -1, -1):
        row = " ".join("●" if lo <= k <= hi else " " for lo, hi in columns)
        lines.append(row.rstrip())
        if k:
            link = " ".join(
                "│" if lo <= k - 1 and k <= hi else " " for lo, hi in columns
            )
            lines.append(link.rstrip())
    return "\n".join(lines)
