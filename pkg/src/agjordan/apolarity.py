"""The graded algebra A = Q/Ann_f through catalecticant matrices.

The pairing Q_k x Q_{d-k} -> scalars, (a, b) -> (X^{a+b})(f), has matrix
Cat(f, k) with entry coeff_f(a+b) * prod (a_i+b_i)!.  Its rank is dim A_k,
its pivot rows fix a monomial basis of A_k, and its right kernel is
(Ann_f)_{d-k}.  That one matrix family carries everything downstream:
Hilbert vector, bases, annihilator tests, and the coordinate solves used by
the multiplication-matrix oracle.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from agjordan.errors import DegenerateVariables
from agjordan.linalg import QMatrix, kernel_basis, pivot_columns, pivot_rows, rank
from agjordan.poly import Poly, contract, monomials_of_degree


def _require_form(f: Poly):
    if f.is_zero():
        raise ValueError("f must be nonzero")
    if not f.is_homogeneous():
        raise ValueError("f must be homogeneous")
    return f.degree()


def catalecticant_matrix(f: Poly, k: int) -> QMatrix:
    """Matrix of the degree-(k, d-k) contraction pairing.

    Rows are monomials_of_degree(n, k), columns monomials_of_degree(n, d-k),
    entry (a, b) = (X^{a+b})(f) = coeff_f(a+b) * prod (a_i+b_i)!.  With this
    scaling Cat(f, k) is exactly the transpose of Cat(f, d-k).
    """
    d = _require_form(f)
    if not 0 <= k <= d:
        raise ValueError(f"k must lie in 0..{d}, got {k}")
    n = f.num_vars
    rows = monomials_of_degree(n, k)
    cols = monomials_of_degree(n, d - k)
    factorial = math.factorial
    terms = f.terms
    entries = []
    for a in rows:
        row = []
        for b in cols:
            mono = tuple(ai + bi for ai, bi in zip(a, b))
            c = terms.get(mono)
            if c is None:
                row.append(0)
            else:
                scale = 1
                for e in mono:
                    if e > 1:
                        scale *= factorial(e)
                row.append(c * scale)
        entries.append(row)
    return QMatrix(len(rows), len(cols), entries)


@dataclass(frozen=True)
class GradedAlgebraBasis:
    """Monomial bases and Hilbert vector of A = Q/Ann_f, degree by degree."""

    f: Poly
    socle_degree: int
    hilbert: tuple
    basis_monomials: tuple
    _cats: tuple = field(repr=False)

    @property
    def num_vars(self) -> int:
        return self.f.num_vars

    @property
    def dim(self) -> int:
        return sum(self.hilbert)

    def catalecticant(self, k: int) -> QMatrix:
        """Cached Cat(f, k)."""
        return self._cats[k]


def graded_basis(f: Poly) -> GradedAlgebraBasis:
    """Hilbert vector and pivot-monomial bases for every degree 0..d.

    Requires every variable to act nontrivially: if some linear operator
    annihilates f the construction stops with DegenerateVariables carrying
    the kernel vectors (see reduce_essential).
    """
    d = _require_form(f)
    if d < 1:
        raise ValueError("f must have degree at least 1")
    n = f.num_vars
    cats = tuple(catalecticant_matrix(f, k) for k in range(d + 1))
    if rank(cats[1]) < n:
        # right kernel of Cat(d-1) has columns indexed by Q_1
        raise DegenerateVariables(kernel_basis(cats[d - 1]))
    hilbert = []
    bases = []
    for k in range(d + 1):
        monos = monomials_of_degree(n, k)
        pivots = pivot_rows(cats[k])
        hilbert.append(len(pivots))
        bases.append(tuple(monos[i] for i in pivots))
    return GradedAlgebraBasis(
        f=f,
        socle_degree=d,
        hilbert=tuple(hilbert),
        basis_monomials=tuple(bases),
        _cats=cats,
    )


def reduce_essential(f: Poly) -> Poly:
    """Rewrite f in its essential variables.

    When m = rank Cat(f, 1) < n, f is constant along the n - m independent
    directions annihilating it, so a linear change of coordinates expresses
    f in m variables.  Concretely: pick a column set J where the kernel
    matrix is invertible; the subspace {x_j = 0, j in J} complements the
    kernel, and restricting f to it is the reduced form.  Surviving
    variables keep their names.  Identity when f is already essential.
    """
    d = _require_form(f)
    n = f.num_vars
    if d == 0:
        return f
    kern = kernel_basis(catalecticant_matrix(f, d - 1))
    if not kern:
        return f
    kmat = QMatrix.from_rows([list(v) for v in kern], n)
    drop = set(pivot_columns(kmat))
    keep = [i for i in range(n) if i not in drop]
    terms = {}
    for mono, c in f.terms.items():
        if any(mono[j] for j in drop):
            continue
        terms[tuple(mono[i] for i in keep)] = c
    return Poly([f.var_names[i] for i in keep], terms)


def ann_membership(f: Poly, op: Poly) -> bool:
    """True iff op annihilates f under contraction.

    Operators are matched to f's ring by variable name; differentiating by
    a variable absent from f kills the term, so such operators simply
    contribute zero.
    """
    aligned = _align_operator(op, f.var_names)
    return contract(aligned, f).is_zero()


def _align_operator(op: Poly, var_names) -> Poly:
    if op.var_names == tuple(var_names):
        return op
    index = {name: i for i, name in enumerate(var_names)}
    n = len(index)
    terms = {}
    for mono, c in op.terms.items():
        expo = [0] * n
        dead = False
        for name, e in zip(op.var_names, mono):
            if not e:
                continue
            i = index.get(name)
            if i is None:
                dead = True  # d/dy of something y-free
                break
            expo[i] = e
        if not dead:
            key = tuple(expo)
            terms[key] = terms.get(key, Fraction(0)) + c
    return Poly(var_names, terms)
