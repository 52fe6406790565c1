"""Brute-force Jordan type from the multiplication matrix itself.

Independent of the Hessian/rank-table pipeline by design: build the matrix
of mu_l on the direct sum of the A_i, take ranks of its powers, and read
block multiplicities from second differences.  Agreement between this and
the formula pipeline at shared sample points is the package's end-to-end
self-test.

Coordinates of l*b in the basis of A_{i+1} come from the catalecticant
pairing: two classes of operators are equal in A_{i+1} exactly when they
pair equally against every monomial of the complementary degree, so a basis
class decomposition is one exact linear solve against the basis rows.
"""

from dataclasses import dataclass
from fractions import Fraction

from agjordan.apolarity import GradedAlgebraBasis
from agjordan.errors import InternalInconsistency, MismatchReport
from agjordan.hessian import GenericRankConfig, _draw_points, rank_table
from agjordan.jordan import Partition, jordan_type
from agjordan.linalg import QMatrix, pivot_columns, rank
from agjordan.poly import LinearForm, monomials_of_degree


@dataclass(frozen=True)
class MultiplicationMatrix:
    """mu_l on the whole algebra: block-superdiagonal in the degree grading."""

    basis: GradedAlgebraBasis
    l: LinearForm
    matrix: QMatrix
    blocks: tuple  # blocks[i]: the h_{i+1} x h_i matrix of A_i -> A_{i+1}


def multiplication_matrix(basis: GradedAlgebraBasis, l: LinearForm) -> MultiplicationMatrix:
    if len(l.coeffs) != basis.num_vars:
        raise ValueError(
            f"linear form has {len(l.coeffs)} coefficients, expected {basis.num_vars}"
        )
    d = basis.socle_degree
    n = basis.num_vars
    blocks = []
    for i in range(d):
        cat = basis.catalecticant(i + 1)
        index = {m: r for r, m in enumerate(monomials_of_degree(n, i + 1))}
        basis_rows = [cat.entries[index[m]] for m in basis.basis_monomials[i + 1]]
        h = len(basis_rows)
        sel = pivot_columns(QMatrix.from_rows(basis_rows, cat.cols))
        square = [[row[j] for j in sel] for row in basis_rows]
        rhs = []
        for beta in basis.basis_monomials[i]:
            acc = [Fraction(0)] * h
            for m, c in enumerate(l.coeffs):
                if not c:
                    continue
                bumped = tuple(b + 1 if t == m else b for t, b in enumerate(beta))
                row = cat.entries[index[bumped]]
                for t, j in enumerate(sel):
                    acc[t] += c * row[j]
            rhs.append(acc)
        coords = _solve_batch(square, rhs)
        blocks.append(QMatrix.from_rows(
            [[coords[c][r] for c in range(len(coords))] for r in range(h)], len(coords)
        ))
    dim = basis.dim
    offsets = [0]
    for hk in basis.hilbert:
        offsets.append(offsets[-1] + hk)
    grid = [[Fraction(0)] * dim for _ in range(dim)]
    for i, block in enumerate(blocks):
        for r in range(block.rows):
            for c in range(block.cols):
                grid[offsets[i + 1] + r][offsets[i] + c] = block.entries[r][c]
    return MultiplicationMatrix(basis=basis, l=l, matrix=QMatrix(dim, dim, grid),
                                blocks=tuple(blocks))


def _solve_batch(square, rhs_list):
    """Solve square * x = rhs for every rhs at once (exact Gauss-Jordan)."""
    h = len(square)
    k = len(rhs_list)
    aug = [
        [Fraction(x) for x in square[r]] + [rhs_list[c][r] for c in range(k)]
        for r in range(h)
    ]
    for col in range(h):
        piv = None
        for r in range(col, h):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            raise InternalInconsistency("singular pairing block; basis rows dependent")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        lead = aug[col]
        for r in range(h):
            if r != col and aug[r][col]:
                fac = aug[r][col]
                aug[r] = [x - fac * y for x, y in zip(aug[r], lead)]
    return [[aug[r][h + c] for r in range(h)] for c in range(k)]


def oracle_jordan_type(basis: GradedAlgebraBasis, l: LinearForm) -> Partition:
    """Jordan partition of mu_l from ranks of powers, no Hessians anywhere.

    The matrix is block-superdiagonal, so the j-th power's only nonzero
    blocks are the chain composites B_{i+j-1}...B_i; rank(matrix^j) is the
    sum of their ranks, which keeps every elimination at block size.
    """
    mm = multiplication_matrix(basis, l)
    d = basis.socle_degree
    dim = basis.dim
    rho = [dim]
    composites = list(mm.blocks)
    for j in range(1, d + 1):
        rho.append(sum(rank(c) for c in composites))
        composites = [
            mm.blocks[i + j] @ composites[i] for i in range(d - j)
        ]
    rho.extend([0, 0])  # powers d+1 and d+2: every chain has run off the top
    mults = []
    for j in range(1, d + 2):
        m = rho[j - 1] - 2 * rho[j] + rho[j + 1]
        if m < 0:
            raise InternalInconsistency(
                f"rank sequence of powers is not convex at j={j}"
            )
        if m:
            mults.append((j, m))
    partition = Partition.from_multiplicities(mults)
    if partition.total != dim:
        raise InternalInconsistency(
            f"block sizes total {partition.total}, but dim A = {dim}"
        )
    return partition


@dataclass(frozen=True)
class CrossCheckReport:
    partition: Partition          # consensus (the formula pipeline's result)
    points: tuple                 # sampled l_perp coordinates
    oracle_partitions: tuple      # one per point, all equal to the consensus
    agreement: bool


def cross_check(basis: GradedAlgebraBasis, cfg: GenericRankConfig) -> CrossCheckReport:
    """Formula pipeline vs oracle at the same sampled points.

    Raises MismatchReport at the first disagreement; a mismatch means either
    an implementation bug or a non-generic sample (retry with another seed).
    """
    points = _draw_points(basis.f, cfg)
    formula = jordan_type(rank_table(basis, cfg)).jordan
    oracle_parts = []
    for p in points:
        part = oracle_jordan_type(basis, LinearForm(basis.f.var_names, p))
        if part != formula:
            raise MismatchReport(p, formula, part)
        oracle_parts.append(part)
    return CrossCheckReport(
        partition=formula,
        points=tuple(points),
        oracle_partitions=tuple(oracle_parts),
        agreement=True,
    )
