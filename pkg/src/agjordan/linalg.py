"""Exact rational linear algebra: rank, null spaces, ranks of matrix powers.

Every computation clears denominators row by row and hands integer rows to
the _kernel backend; row scaling changes neither the rank nor the right null
space, so the results are exact over the rationals.
"""

from fractions import Fraction
from math import gcd, lcm

from agjordan import _kernel

KERNEL_BACKEND = _kernel.BACKEND


class QMatrix:
    """Dense matrix over the rationals.  Treated as immutable."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = [list(row) for row in entries]
        if len(entries) != rows or any(len(row) != cols for row in entries):
            raise ValueError("entry grid does not match the declared shape")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, entries, cols=None):
        entries = [list(row) for row in entries]
        rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if rows else 0
        return cls(rows, cols, entries)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def transpose(self):
        return QMatrix(
            self.cols,
            self.rows,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("inner dimensions disagree")
        return QMatrix(self.rows, other.cols, _mul_entries(self.entries, other.entries, other.cols))

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.rows != other.rows or self.cols != other.cols:
            return False
        return all(
            self.entries[i][j] == other.entries[i][j]
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def __repr__(self):
        return f"QMatrix({self.rows}x{self.cols})"


def _mul_entries(a, b, bcols):
    out = []
    for arow in a:
        orow = [0] * bcols
        for t, v in enumerate(arow):
            if v:
                brow = b[t]
                for j in range(bcols):
                    w = brow[j]
                    if w:
                        orow[j] += v * w
        out.append(orow)
    return out


def _int_rows(entries):
    """Scale each row to integers (does not change rank or right kernel)."""
    out = []
    for row in entries:
        den = 1
        for v in row:
            if isinstance(v, Fraction) and v.denominator != 1:
                den = lcm(den, v.denominator)
        if den == 1:
            out.append([v if isinstance(v, int) else int(v) for v in row])
        else:
            out.append([int(v * den) for v in row])
    return out


def rank(m: QMatrix) -> int:
    """Exact rank by fraction-free elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return _kernel.rank(_int_rows(m.entries), m.cols)


def pivot_rows(m: QMatrix) -> list:
    """Indices of the greedy maximal independent row set.

    Row i is selected exactly when it is not in the span of rows 0..i-1, so
    the selection is deterministic and order-respecting; downstream modules
    use it to fix monomial bases reproducibly.
    """
    if m.rows == 0 or m.cols == 0:
        return []
    pivots, _ = _kernel.echelon(_int_rows(m.entries), m.cols)
    return pivots


def pivot_columns(m: QMatrix) -> list:
    return pivot_rows(m.transpose())


def kernel_basis(m: QMatrix) -> list:
    """Basis of the right null space, as tuples of Fractions.

    Each vector is primitive-integer scaled with its first nonzero entry
    positive; one vector per free column of the echelon form, so the list
    has exactly cols - rank(m) members.
    """
    n = m.cols
    if n == 0:
        return []
    if m.rows == 0:
        ech = []
    else:
        _, ech = _kernel.echelon(_int_rows(m.entries), n)
    lead_cols = {lc for lc, _ in ech}
    basis = []
    for fc in range(n):
        if fc in lead_cols:
            continue
        x = [Fraction(0)] * n
        x[fc] = Fraction(1)
        for lc, er in reversed(ech):
            s = Fraction(0)
            for j in range(lc + 1, n):
                if er[j] and x[j]:
                    s += er[j] * x[j]
            x[lc] = -s / er[lc]
        basis.append(_primitive(x))
    return basis


def _primitive(vec):
    den = 1
    for v in vec:
        if v.denominator != 1:
            den = lcm(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-w for w in ints]
            break
    return tuple(Fraction(v) for v in ints)


def matrix_power_ranks(m: QMatrix, max_power: int) -> list:
    """[rank(m^0), rank(m^1), ..., rank(m^max_power)] for square m."""
    if m.rows != m.cols:
        raise ValueError("matrix must be square")
    ranks = [m.rows]
    cur = m
    for p in range(1, max_power + 1):
        r = rank(cur)
        ranks.append(r)
        if r == 0:
            ranks.extend([0] * (max_power - p))
            break
        if p < max_power:
            cur = cur @ m
    return ranks
