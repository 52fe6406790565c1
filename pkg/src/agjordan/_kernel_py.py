"""Integer elimination kernels, pure-Python reference implementation.

A compiled twin (_kernel_c, built from _kernel_c.pyx) provides the same four
functions; _kernel picks the backend at import time.  Everything here works on
dense lists of Python ints.  Callers clear denominators beforehand: scaling a
row changes neither the rank nor the right null space.
"""

from math import gcd


def rank(rows, ncols):
    """Exact rank by fraction-free (Bareiss) elimination.

    Pivoting picks the first row with a nonzero entry in column order, so the
    elimination path is deterministic.  The input is not modified.
    """
    mat = [row[:] for row in rows]
    m = len(mat)
    r = 0
    prev = 1
    for c in range(ncols):
        if r == m:
            break
        p = -1
        for i in range(r, m):
            if mat[i][c]:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            mat[p], mat[r] = mat[r], mat[p]
        piv_row = mat[r]
        piv = piv_row[c]
        for i in range(r + 1, m):
            row = mat[i]
            a = row[c]
            if a:
                for j in range(c + 1, ncols):
                    row[j] = (piv * row[j] - a * piv_row[j]) // prev
                row[c] = 0
            elif piv != 1 or prev != 1:
                # rows missing the pivot column still scale by piv/prev;
                # skipping this would break exactness of later divisions
                for j in range(c + 1, ncols):
                    row[j] = piv * row[j] // prev
        prev = piv
        r += 1
    return r


def echelon(rows, ncols):
    """Greedy row-at-a-time elimination with gcd normalization.

    Returns (pivots, ech).  pivots lists the indices of input rows that were
    independent of everything before them, in input order; ech holds the
    reduced rows as (lead_column, row) sorted by lead column, each row
    primitive with a positive leading entry.  The input is not modified.
    """
    ech = []
    pivots = []
    for idx in range(len(rows)):
        r = rows[idx][:]
        for lc, er in ech:
            a = r[lc]
            if a:
                b = er[lc]
                for j in range(ncols):
                    r[j] = b * r[j] - a * er[j]
        lead = -1
        for j in range(ncols):
            if r[j]:
                lead = j
                break
        if lead < 0:
            continue
        g = 0
        for j in range(lead, ncols):
            if r[j]:
                g = gcd(g, r[j])
        if r[lead] < 0:
            g = -g
        if g != 1:
            for j in range(lead, ncols):
                r[j] //= g
        pivots.append(idx)
        ech.append((lead, r))
        ech.sort(key=lambda item: item[0])
    return pivots, ech


def matmul(a, b, bcols):
    """Product of integer matrices given as row lists, skipping zeros."""
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


def gcd_reduce(rows):
    """Divide every entry by the matrix-wide gcd, in place."""
    g = 0
    for row in rows:
        for v in row:
            if v:
                g = gcd(g, v)
                if g == 1:
                    return
    if g > 1:
        for row in rows:
            for j in range(len(row)):
                row[j] //= g
