"""Mixed Hessians and the generic rank table r(i, j).

Hess^{(k,t)} is the matrix [(a*b)(f)] over the chosen monomial bases of A_k
and A_t; evaluated at a point p = l_perp its rank equals the rank of the
multiplication map mu_{l^{t-k}}: A_k -> A_t (scalar factors dropped, ranks
are scale-blind).  The rank table collects r(i, j) = rk mu_{l^j}: A_i ->
A_{i+j} for one shared generic l, which is all the Jordan-type formulas
need.

Genericity is randomized by default: integer points from a seeded generator,
resampled off the hypersurface f = 0, with the table maximized over a few
trials.  Exact mode instead runs fraction-free elimination with polynomial
entries, computing the true generic rank symbolically.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import perm

from agjordan.apolarity import GradedAlgebraBasis
from agjordan.errors import GenericityFailure, InternalInconsistency
from agjordan.linalg import QMatrix, rank
from agjordan.poly import Poly, evaluate

# Fixed so identical configs give byte-identical reports; --seed overrides.
DEFAULT_SEED = 0x5EED0FA6


@dataclass(frozen=True)
class GenericRankConfig:
    trials: int = 3
    coeff_bound: int = 10**4
    seed: int = DEFAULT_SEED
    exact_mode: bool = False

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.coeff_bound < 1:
            raise ValueError("coeff_bound must be positive")


@dataclass(frozen=True)
class MixedHessian:
    k: int
    t: int
    row_basis: tuple
    col_basis: tuple
    entries: tuple  # grid of Poly, entry(i,j) = (row_i * col_j)(f)
    f: Poly

    @property
    def shape(self):
        return (len(self.row_basis), len(self.col_basis))


@dataclass(frozen=True)
class RankTable:
    """r(i, j) for one generic linear form, with boundary conventions.

    Stored cells cover 0 <= i, 1 <= j, i + j <= d; get() extends by
    r(i, 0) = hilbert[i], and 0 whenever i is out of range or i + j > d.
    """

    socle_degree: int
    hilbert: tuple
    r: dict

    def get(self, i: int, j: int) -> int:
        d = self.socle_degree
        if i < 0 or i > d or i + j > d:
            return 0
        if j == 0:
            return self.hilbert[i]
        return self.r[(i, j)]

    def cells(self):
        """Sorted list of ((i, j), rank) for the stored region."""
        return sorted(self.r.items())


def mixed_hessian(basis: GradedAlgebraBasis, k: int, t: int) -> MixedHessian:
    """Hess^{(k,t)}: rows B_k, columns B_t, entries (X^{a+b})(f) as Poly."""
    d = basis.socle_degree
    if k < 0 or t < 0 or k + t > d:
        raise ValueError(f"need k + t <= {d}, got k={k}, t={t}")
    f = basis.f
    row_basis = basis.basis_monomials[k]
    col_basis = basis.basis_monomials[t]
    grid = []
    for a in row_basis:
        row = []
        for b in col_basis:
            op = tuple(ai + bi for ai, bi in zip(a, b))
            row.append(_contract_monomial(f, op))
        grid.append(tuple(row))
    return MixedHessian(k=k, t=t, row_basis=row_basis, col_basis=col_basis,
                        entries=tuple(grid), f=f)


def _contract_monomial(f: Poly, alpha) -> Poly:
    out = {}
    for beta, c in f.terms.items():
        coef = 1
        key = []
        for ai, bi in zip(alpha, beta):
            if ai > bi:
                coef = 0
                break
            if ai:
                coef *= perm(bi, ai)
            key.append(bi - ai)
        if coef:
            out[tuple(key)] = c * coef
    return Poly(f.var_names, out)


def rank_at(h: MixedHessian, point) -> int:
    """Rank of the Hessian with every entry evaluated at the point."""
    point = tuple(point)
    if len(point) != h.f.num_vars:
        raise ValueError(
            f"point has {len(point)} coordinates, expected {h.f.num_vars}"
        )
    rows = [[evaluate(e, point) for e in row] for row in h.entries]
    if not rows or not rows[0]:
        return 0
    return rank(QMatrix.from_rows(rows, len(h.col_basis)))


def generic_rank(h: MixedHessian, cfg: GenericRankConfig) -> int:
    """Generic rank: symbolic in exact mode, max over sampled points otherwise."""
    if cfg.exact_mode:
        return poly_rank([list(row) for row in h.entries])
    best = 0
    for p in _draw_points(h.f, cfg):
        best = max(best, rank_at(h, p))
    return best


def rank_table(basis: GradedAlgebraBasis, cfg: GenericRankConfig) -> RankTable:
    """Full generic table r(i, j), one shared point set across all cells."""
    d = basis.socle_degree
    if cfg.exact_mode:
        r = {}
        for j in range(1, d + 1):
            for i in range(0, d - j + 1):
                h = mixed_hessian(basis, i, d - i - j)
                r[(i, j)] = poly_rank([list(row) for row in h.entries])
        table = RankTable(socle_degree=d, hilbert=basis.hilbert, r=r)
    else:
        merged = None
        for p in _draw_points(basis.f, cfg):
            cur = _table_at_point(basis, p)
            if merged is None:
                merged = cur
            else:
                merged = {key: max(v, cur[key]) for key, v in merged.items()}
        table = RankTable(socle_degree=d, hilbert=basis.hilbert, r=merged)
    _check_table(table)
    return table


def rank_table_at(basis: GradedAlgebraBasis, point) -> RankTable:
    """The rank table of one explicit point (no genericity sampling)."""
    point = tuple(point)
    if len(point) != basis.num_vars:
        raise ValueError(
            f"point has {len(point)} coordinates, expected {basis.num_vars}"
        )
    if evaluate(basis.f, point) == 0:
        raise ValueError("point lies on f = 0; ranks there follow a different regime")
    table = RankTable(socle_degree=basis.socle_degree, hilbert=basis.hilbert,
                      r=_table_at_point(basis, point))
    _check_table(table)
    return table


def _table_at_point(basis: GradedAlgebraBasis, point) -> dict:
    d = basis.socle_degree
    values = _contraction_values(basis.f, point)
    r = {}
    for j in range(1, d + 1):
        for i in range(0, d - j + 1):
            rows_b = basis.basis_monomials[i]
            cols_b = basis.basis_monomials[d - i - j]
            grid = []
            for a in rows_b:
                row = []
                for b in cols_b:
                    key = tuple(ai + bi for ai, bi in zip(a, b))
                    row.append(values.get(key, 0))
                grid.append(row)
            r[(i, j)] = rank(QMatrix.from_rows(grid, len(cols_b)))
    return r


def _contraction_values(f: Poly, point) -> dict:
    """values[delta] = (X^delta f)(point), for every delta below a term of f."""
    point = tuple(Fraction(c) for c in point)
    values = {}
    for beta, c in f.terms.items():
        for delta in product(*[range(b + 1) for b in beta]):
            coef = c
            for pm, bm, dm in zip(point, beta, delta):
                if dm:
                    coef *= perm(bm, dm)
                if bm - dm:
                    coef *= pm ** (bm - dm)
            if coef:
                values[delta] = values.get(delta, 0) + coef
    return values


def _draw_points(f: Poly, cfg: GenericRankConfig) -> list:
    """cfg.trials integer points off f = 0, reproducible from cfg.seed."""
    rng = random.Random(cfg.seed)
    n = f.num_vars
    bound = cfg.coeff_bound
    points = []
    for _ in range(cfg.trials):
        for _ in range(100):
            p = tuple(rng.randint(-bound, bound) for _ in range(n))
            if evaluate(f, p) != 0:
                points.append(p)
                break
        else:
            raise GenericityFailure(
                "no point off f = 0 found in 100 draws; widen --bound"
            )
    return points


def _check_table(table: RankTable):
    # these are theorems for any point off f = 0, so a violation is a bug
    d = table.socle_degree
    for j in range(1, d + 1):
        if table.get(0, j) != 1:
            raise InternalInconsistency(f"r(0,{j}) = {table.get(0, j)} != 1")
        for i in range(0, d - j + 1):
            if table.get(i, j) > table.get(i, j - 1):
                raise InternalInconsistency(
                    f"rank rose with the power of l at ({i},{j})"
                )
            if table.get(i, j) != table.get(d - i - j, j):
                raise InternalInconsistency(f"duality broken at ({i},{j})")
            if table.get(i, j) > min(table.hilbert[i], table.hilbert[i + j]):
                raise InternalInconsistency(f"rank exceeds space bound at ({i},{j})")


# -- exact mode: fraction-free elimination with polynomial entries ---------


def poly_rank(grid) -> int:
    """Rank of a matrix of Poly over the fraction field, no evaluation.

    One-step Bareiss: every division is by the previous pivot and is exact
    in the polynomial ring, so entries stay polynomials throughout.
    """
    if not grid or not grid[0]:
        return 0
    rows = [list(r) for r in grid]
    nrows, ncols = len(rows), len(rows[0])
    ring = rows[0][0].var_names
    prev = Poly.constant(ring, 1)
    rk = 0
    for col in range(ncols):
        if rk == nrows:
            break
        pivot = None
        for i in range(rk, nrows):
            if not rows[i][col].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        piv_row = rows[rk]
        piv = piv_row[col]
        for i in range(rk + 1, nrows):
            a = rows[i][col]
            cur = rows[i]
            if not a.is_zero():
                for j in range(ncols):
                    cur[j] = _poly_div_exact(piv * cur[j] - a * piv_row[j], prev)
            else:
                # zero rows still pick up the pivot scaling, else later
                # divisions by this round's pivot stop being exact
                for j in range(ncols):
                    cur[j] = _poly_div_exact(piv * cur[j], prev)
        prev = piv
        rk += 1
    return rk


def _grlex_lead(terms):
    return max(terms, key=lambda m: (sum(m), m))


def _poly_div_exact(num: Poly, den: Poly) -> Poly:
    """num / den when the division is exact in the polynomial ring."""
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if num.is_zero():
        return num
    dterms = den.terms
    if len(dterms) == 1:
        (dmono, dc), = dterms.items()
        if not any(dmono):
            return num * (1 / dc)
    dlead = _grlex_lead(dterms)
    dc = dterms[dlead]
    rem = dict(num.terms)
    quo = {}
    while rem:
        rlead = _grlex_lead(rem)
        shift = tuple(r - s for r, s in zip(rlead, dlead))
        if any(s < 0 for s in shift):
            raise InternalInconsistency("inexact polynomial division in elimination")
        qc = rem[rlead] / dc
        quo[shift] = qc
        for dmono, c in dterms.items():
            key = tuple(s + m for s, m in zip(shift, dmono))
            v = rem.get(key, Fraction(0)) - qc * c
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return Poly(num.var_names, quo)
