# cython: language_level=3
"""Integer elimination kernels, compiled twin of _kernel_py.

Entries are arbitrary-precision Python ints; the speedup comes from typed
loop counters and list indexing, not from machine arithmetic.  Algorithms and
pivoting order are identical to _kernel_py so both backends produce the same
pivots, echelons and ranks bit for bit.
"""

from math import gcd


def rank(rows, Py_ssize_t ncols):
    """Exact rank by fraction-free (Bareiss) elimination."""
    cdef list mat = [list(row) for row in rows]
    cdef Py_ssize_t m = len(mat)
    cdef Py_ssize_t r = 0
    cdef Py_ssize_t c, i, j, p
    cdef list row, piv_row
    prev = 1
    for c in range(ncols):
        if r == m:
            break
        p = -1
        for i in range(r, m):
            if (<list>mat[i])[c] != 0:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            mat[p], mat[r] = mat[r], mat[p]
        piv_row = <list>mat[r]
        piv = piv_row[c]
        for i in range(r + 1, m):
            row = <list>mat[i]
            a = row[c]
            if a != 0:
                for j in range(c + 1, ncols):
                    row[j] = (piv * row[j] - a * piv_row[j]) // prev
                row[c] = 0
            elif piv != 1 or prev != 1:
                for j in range(c + 1, ncols):
                    row[j] = piv * row[j] // prev
        prev = piv
        r += 1
    return r


def echelon(rows, Py_ssize_t ncols):
    """Greedy row-at-a-time elimination with gcd normalization.

    Returns (pivots, ech) exactly as _kernel_py.echelon does.
    """
    cdef list ech = []
    cdef list pivots = []
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t idx, j, lead
    cdef list r, er
    cdef Py_ssize_t lc
    for idx in range(nrows):
        r = list(rows[idx])
        for pair in ech:
            lc = <Py_ssize_t>(<tuple>pair)[0]
            a = r[lc]
            if a != 0:
                er = <list>(<tuple>pair)[1]
                b = er[lc]
                for j in range(ncols):
                    r[j] = b * r[j] - a * er[j]
        lead = -1
        for j in range(ncols):
            if r[j] != 0:
                lead = j
                break
        if lead < 0:
            continue
        g = 0
        for j in range(lead, ncols):
            if r[j] != 0:
                g = gcd(g, r[j])
        if r[lead] < 0:
            g = -g
        if g != 1:
            for j in range(lead, ncols):
                r[j] //= g
        pivots.append(idx)
        ech.append((lead, r))
        ech.sort(key=_lead_key)
    return pivots, ech


def _lead_key(item):
    return item[0]


def matmul(a, b, Py_ssize_t bcols):
    """Product of integer matrices given as row lists, skipping zeros."""
    cdef list out = []
    cdef list orow, brow
    cdef Py_ssize_t t, j, n
    for arow in a:
        orow = [0] * bcols
        n = len(arow)
        for t in range(n):
            v = arow[t]
            if v != 0:
                brow = <list>b[t]
                for j in range(bcols):
                    w = brow[j]
                    if w != 0:
                        orow[j] = orow[j] + v * w
        out.append(orow)
    return out


def gcd_reduce(rows):
    """Divide every entry by the matrix-wide gcd, in place."""
    cdef Py_ssize_t j, n
    cdef list row
    g = 0
    for obj in rows:
        row = <list>obj
        for v in row:
            if v != 0:
                g = gcd(g, v)
                if g == 1:
                    return
    if g > 1:
        for obj in rows:
            row = <list>obj
            n = len(row)
            for j in range(n):
                row[j] //= g
